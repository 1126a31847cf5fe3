// Brute-force finite G-sets. Every action is stored on all elements of the
// acting subgroup, so this module doubles as the independent oracle for
// marks, structure maps and axiom checks.

#ifndef BTSPEC_GSET_HPP_
#define BTSPEC_GSET_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace btspec {

inline constexpr std::size_t default_coinduce_cap = 100000;

class GSet {
public:
  using point = std::uint32_t;

  // `action` maps (position of g among the acting subgroup's members) * size
  // + x to g.x.
  GSet(const SubgroupLattice& lat, std::size_t acting, std::size_t size, std::vector<point> action)
    : lat_(&lat), acting_(acting), size_(size), table_(std::move(action)) {
    members_ = lat.subgroup(acting).members.members();
    pos_.assign(lat.group().order(), -1);
    for (std::size_t i = 0; i != members_.size(); ++i)
      pos_[members_[i]] = static_cast<std::int32_t>(i);
    if (table_.size() != members_.size() * size_)
      throw error("G-set action table has wrong size");
  }

  const SubgroupLattice& lattice() const { return *lat_; }
  std::size_t acting() const { return acting_; }
  std::size_t size() const { return size_; }
  const std::vector<ElementId>& acting_elements() const { return members_; }

  point act(ElementId g, point x) const {
    std::int32_t p = pos_[g];
    if (p < 0)
      fail_containment("element " + std::to_string(g) + " does not act on this G-set");
    return table_[static_cast<std::size_t>(p) * size_ + x];
  }

  // action(gh) = action(g) o action(h) on every pair, identity acts trivially.
  bool respects_group_law() const {
    const FiniteGroup& g = lat_->group();
    for (point x = 0; x != size_; ++x)
      if (act(g.identity(), x) != x) return false;
    for (ElementId a : members_)
      for (ElementId b : members_)
        for (point x = 0; x != size_; ++x)
          if (act(g.mul(a, b), x) != act(a, act(b, x))) return false;
    return true;
  }

private:
  const SubgroupLattice* lat_;
  std::size_t acting_;
  std::size_t size_;
  std::vector<ElementId> members_;
  std::vector<std::int32_t> pos_;
  std::vector<point> table_;
};

namespace impl {

// Assigns each element of K the index of its left coset xH (reps ascending).
inline std::vector<std::int32_t> left_coset_index(const SubgroupLattice& lat, std::size_t k,
                                                  const std::vector<ElementId>& reps,
                                                  std::size_t h) {
  const FiniteGroup& g = lat.group();
  std::vector<std::int32_t> idx(g.order(), -1);
  const auto hm = lat.subgroup(h).members.members();
  for (std::size_t i = 0; i != reps.size(); ++i)
    for (ElementId y : hm) idx[g.mul(reps[i], y)] = static_cast<std::int32_t>(i);
  (void)k;
  return idx;
}

} // namespace impl

// K/H with K acting by left multiplication; point i is the coset reps[i] H.
inline GSet coset_space(const SubgroupLattice& lat, std::size_t k, std::size_t h) {
  lat.require_contains(k, h, "coset_space");
  const FiniteGroup& g = lat.group();
  const auto reps = left_coset_reps(lat, k, h);
  const auto idx = impl::left_coset_index(lat, k, reps, h);
  const auto km = lat.subgroup(k).members.members();
  std::vector<GSet::point> table;
  table.reserve(km.size() * reps.size());
  for (ElementId x : km)
    for (ElementId r : reps) table.push_back(static_cast<GSet::point>(idx[g.mul(x, r)]));
  return GSet(lat, k, reps.size(), std::move(table));
}

inline GSet empty_gset(const SubgroupLattice& lat, std::size_t k) {
  return GSet(lat, k, 0, {});
}

inline std::size_t fixed_points(const GSet& x, std::size_t i) {
  const SubgroupLattice& lat = x.lattice();
  lat.require_contains(x.acting(), i, "fixed_points");
  const auto& gens = lat.subgroup(i).generators;
  std::size_t n = 0;
  for (GSet::point p = 0; p != x.size(); ++p) {
    bool fixed = true;
    for (ElementId s : gens)
      if (x.act(s, p) != p) { fixed = false; break; }
    n += fixed;
  }
  return n;
}

struct OrbitType {
  std::size_t level_class;  // class of the stabilizer at the acting level
  std::size_t multiplicity;
  bool operator==(const OrbitType&) const = default;
};

// Orbits grouped by the conjugacy class (within the acting subgroup) of
// their point stabilizers, sorted by class.
inline std::vector<OrbitType> orbit_decompose(const GSet& x) {
  const SubgroupLattice& lat = x.lattice();
  const FiniteGroup& g = lat.group();
  const Level& lv = lat.level(x.acting());
  std::vector<bool> seen(x.size(), false);
  std::map<std::size_t, std::size_t> counts;
  for (GSet::point p = 0; p != x.size(); ++p) {
    if (seen[p]) continue;
    ElementSet stab(g.order());
    for (ElementId a : x.acting_elements()) {
      GSet::point q = x.act(a, p);
      seen[q] = true;
      if (q == p) stab.set(a);
    }
    ++counts[lv.class_index(lat.find(stab))];
  }
  std::vector<OrbitType> out;
  for (auto [c, m] : counts) out.push_back({c, m});
  return out;
}

// K x_H X: pairs (coset r_i H, x) with k.(r_i, x) = (r_j, h.x), k r_i = r_j h.
inline GSet induce(std::size_t k, const GSet& x) {
  const SubgroupLattice& lat = x.lattice();
  const std::size_t h = x.acting();
  lat.require_contains(k, h, "induce");
  const FiniteGroup& g = lat.group();
  const auto reps = left_coset_reps(lat, k, h);
  const auto idx = impl::left_coset_index(lat, k, reps, h);
  const auto km = lat.subgroup(k).members.members();
  const std::size_t n = x.size();
  std::vector<GSet::point> table;
  table.reserve(km.size() * reps.size() * n);
  for (ElementId a : km)
    for (std::size_t i = 0; i != reps.size(); ++i) {
      ElementId y = g.mul(a, reps[i]);
      std::size_t j = static_cast<std::size_t>(idx[y]);
      ElementId hh = g.mul(g.inv(reps[j]), y);
      for (GSet::point p = 0; p != n; ++p)
        table.push_back(static_cast<GSet::point>(j * n + x.act(hh, p)));
    }
  return GSet(lat, k, reps.size() * n, std::move(table));
}

// Map_H(K, X): H-equivariant f with f(hk) = h f(k), K acting by
// (k.f)(y) = f(y k). A point is the tuple of values on the right coset
// representatives s_1..s_m of H\K, encoded in base |X|.
inline GSet coinduce(std::size_t k, const GSet& x, std::size_t cap = default_coinduce_cap) {
  const SubgroupLattice& lat = x.lattice();
  const std::size_t h = x.acting();
  lat.require_contains(k, h, "coinduce");
  const FiniteGroup& g = lat.group();
  const auto reps = right_coset_reps(lat, h, k);
  const std::size_t m = reps.size();
  const std::size_t base = x.size();
  std::size_t total = base == 0 ? 0 : 1;
  for (std::size_t i = 0; i != m && total != 0; ++i) {
    if (total > cap / base)
      throw cap_exceeded("coinduction needs more than " + std::to_string(cap) + " points");
    total *= base;
  }
  std::vector<std::int32_t> right_idx(g.order(), -1);
  const auto hm = lat.subgroup(h).members.members();
  for (std::size_t i = 0; i != m; ++i)
    for (ElementId y : hm) right_idx[g.mul(y, reps[i])] = static_cast<std::int32_t>(i);
  const auto km = lat.subgroup(k).members.members();
  std::vector<GSet::point> table(km.size() * total);
  std::vector<std::size_t> src(m);
  std::vector<ElementId> twist(m);
  std::vector<std::size_t> digits(m), out(m);
  for (std::size_t ai = 0; ai != km.size(); ++ai) {
    for (std::size_t i = 0; i != m; ++i) {
      ElementId y = g.mul(reps[i], km[ai]);  // s_i k = h' s_j
      std::size_t j = static_cast<std::size_t>(right_idx[y]);
      src[i] = j;
      twist[i] = g.mul(y, g.inv(reps[j]));
    }
    for (std::size_t f = 0; f != total; ++f) {
      std::size_t rest = f;
      for (std::size_t i = 0; i != m; ++i) {
        digits[i] = rest % base;
        rest /= base;
      }
      std::size_t code = 0;
      for (std::size_t i = m; i-- > 0;)
        code = code * base + x.act(twist[i], static_cast<GSet::point>(digits[src[i]]));
      table[ai * total + f] = static_cast<GSet::point>(code);
    }
  }
  return GSet(lat, k, total, std::move(table));
}

inline GSet restrict_gset(const GSet& x, std::size_t h) {
  const SubgroupLattice& lat = x.lattice();
  lat.require_contains(x.acting(), h, "restrict_gset");
  std::vector<GSet::point> table;
  lat.subgroup(h).members.for_each([&](ElementId a) {
    for (GSet::point p = 0; p != x.size(); ++p) table.push_back(x.act(a, p));
  });
  return GSet(lat, h, x.size(), std::move(table));
}

// ^gX: the ^gH-set with (g h g^-1).x = h.x.
inline GSet conjugate_gset(ElementId g, const GSet& x) {
  const SubgroupLattice& lat = x.lattice();
  const FiniteGroup& grp = lat.group();
  const std::size_t target = lat.conjugate(x.acting(), g);
  std::vector<GSet::point> table;
  lat.subgroup(target).members.for_each([&](ElementId y) {
    ElementId hh = grp.conj(grp.inv(g), y);
    for (GSet::point p = 0; p != x.size(); ++p) table.push_back(x.act(hh, p));
  });
  return GSet(lat, target, x.size(), std::move(table));
}

inline GSet product(const GSet& x, const GSet& y) {
  if (x.acting() != y.acting())
    throw level_mismatch("product of G-sets over different groups");
  const SubgroupLattice& lat = x.lattice();
  std::vector<GSet::point> table;
  for (ElementId a : x.acting_elements())
    for (GSet::point p = 0; p != x.size(); ++p)
      for (GSet::point q = 0; q != y.size(); ++q)
        table.push_back(static_cast<GSet::point>(x.act(a, p) * y.size() + y.act(a, q)));
  return GSet(lat, x.acting(), x.size() * y.size(), std::move(table));
}

inline GSet disjoint_union(const GSet& x, const GSet& y) {
  if (x.acting() != y.acting())
    throw level_mismatch("disjoint union of G-sets over different groups");
  std::vector<GSet::point> table;
  for (ElementId a : x.acting_elements()) {
    for (GSet::point p = 0; p != x.size(); ++p) table.push_back(x.act(a, p));
    for (GSet::point q = 0; q != y.size(); ++q)
      table.push_back(static_cast<GSet::point>(x.size() + y.act(a, q)));
  }
  return GSet(x.lattice(), x.acting(), x.size() + y.size(), std::move(table));
}

// |(G/H)^J| = sum over xK in (G/K)^J of |(K/H)^(J^x)| for H <= K <= G, J <= G,
// with J fixing both sides.
inline bool fixed_point_identity_check(const SubgroupLattice& lat, std::size_t ambient,
                                       std::size_t h, std::size_t k, std::size_t j) {
  lat.require_contains(k, h, "fixed_point_identity_check");
  lat.require_contains(ambient, k, "fixed_point_identity_check");
  lat.require_contains(ambient, j, "fixed_point_identity_check");
  std::size_t lhs = fixed_points(coset_space(lat, ambient, h), j);
  std::size_t rhs = 0;
  const GSet kh = coset_space(lat, k, h);
  for (ElementId x : left_coset_reps(lat, ambient, k)) {
    std::size_t jx = lat.conjugate_right(j, x);
    if (lat.contains(k, jx)) rhs += fixed_points(kh, jx);
  }
  return lhs == rhs;
}

} // namespace btspec

#endif
