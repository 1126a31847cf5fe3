// Subgroup lattice of a finite group: every subgroup as a bitset, conjugacy
// classes, the subconjugacy order on classes, normalizers, and per-level
// (H-conjugacy) class data for each subgroup H.

#ifndef BTSPEC_LATTICE_HPP_
#define BTSPEC_LATTICE_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "group.hpp"

namespace btspec {

struct Subgroup {
  ElementSet members;
  std::size_t order = 0;
  std::vector<ElementId> generators;  // greedy from the least member indices
};

// The subgroups of one subgroup H, grouped into H-conjugacy classes.
// Classes are ordered by their least lattice index, which is a linear
// extension of H-subconjugacy; the class of H itself is last.
struct Level {
  std::size_t subgroup = 0;
  std::vector<std::size_t> subgroups;          // lattice indices contained in H
  std::vector<std::int32_t> class_of;          // lattice index -> class, -1 if not <= H
  std::vector<std::size_t> class_reps;         // class -> least lattice index
  std::vector<std::vector<std::size_t>> class_members;

  std::size_t num_classes() const { return class_reps.size(); }
  std::size_t top_class() const { return class_reps.size() - 1; }
  bool contains(std::size_t sub) const { return class_of[sub] >= 0; }
  std::size_t class_index(std::size_t sub) const {
    if (class_of[sub] < 0)
      fail_containment("subgroup " + std::to_string(sub) + " is not contained in level " +
                       std::to_string(subgroup));
    return static_cast<std::size_t>(class_of[sub]);
  }
};

namespace impl {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
private:
  std::vector<std::size_t> parent_;
};

inline ElementSet closure(const FiniteGroup& g, const std::vector<ElementId>& gens) {
  ElementSet set(g.order());
  std::vector<ElementId> list{g.identity()};
  set.set(g.identity());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (ElementId s : gens) {
      ElementId y = g.mul(list[i], s);
      if (!set.test(y)) {
        set.set(y);
        list.push_back(y);
      }
    }
  return set;
}

inline std::vector<ElementId> greedy_generators(const FiniteGroup& g, const ElementSet& members,
                                                ElementSet* generated = nullptr) {
  std::vector<ElementId> gens;
  ElementSet cur = closure(g, gens);
  members.for_each([&](ElementId m) {
    if (!cur.test(m)) {
      gens.push_back(m);
      cur = closure(g, gens);
    }
  });
  if (generated) *generated = cur;
  return gens;
}

inline ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, ElementId x) {
  ElementSet out(g.order());
  s.for_each([&](ElementId h) { out.set(g.conj(x, h)); });
  return out;
}

} // namespace impl

class SubgroupLattice {
public:
  // Enumerates every subgroup: cyclic seeds, then joins with cyclic
  // subgroups until nothing new appears.
  explicit SubgroupLattice(std::shared_ptr<const FiniteGroup> group) : group_(std::move(group)) {
    const FiniteGroup& g = *group_;
    std::vector<ElementSet> found;
    std::vector<std::vector<ElementId>> gens;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    std::vector<std::pair<std::size_t, ElementId>> cyclic;
    for (ElementId a = 0; a != g.order(); ++a) {
      ElementSet c = impl::closure(g, {a});
      auto [it, inserted] = seen.emplace(c, found.size());
      if (inserted) {
        found.push_back(std::move(c));
        gens.push_back({a});
        cyclic.emplace_back(it->second, a);
      }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto [ci, x] : cyclic) {
        if (found[ci].is_subset_of(found[i]))
          continue;
        std::vector<ElementId> joined = gens[i];
        joined.push_back(x);
        ElementSet j = impl::closure(g, joined);
        if (seen.emplace(j, found.size()).second) {
          found.push_back(std::move(j));
          gens.push_back(std::move(joined));
        }
      }
    }
    init(std::move(found));
  }

  // Rebuilds a lattice from stored subgroup bitsets, validating everything
  // that can be checked cheaply. Throws btspec::error on any inconsistency.
  static SubgroupLattice from_parts(std::shared_ptr<const FiniteGroup> group,
                                    std::vector<ElementSet> subgroups,
                                    const std::vector<std::size_t>& class_of,
                                    const std::vector<std::vector<bool>>& subconj) {
    const FiniteGroup& g = *group;
    if (subgroups.empty())
      throw error("stored lattice is empty");
    for (std::size_t i = 0; i != subgroups.size(); ++i) {
      if (subgroups[i].universe() != g.order())
        throw error("stored subgroup has wrong universe");
      ElementSet gen;
      impl::greedy_generators(g, subgroups[i], &gen);
      if (!(gen == subgroups[i]))
        throw error("stored set " + std::to_string(i) + " is not a subgroup");
      if (i && !canonical_less(subgroups[i - 1], subgroups[i]))
        throw error("stored subgroups are not in canonical order");
    }
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> idx;
    for (std::size_t i = 0; i != subgroups.size(); ++i) idx.emplace(subgroups[i], i);
    for (ElementId a = 0; a != g.order(); ++a)
      if (!idx.count(impl::closure(g, {a})))
        throw error("stored lattice is missing a cyclic subgroup");
    SubgroupLattice lat(std::move(group), std::move(subgroups), 0);
    if (lat.class_of_ != class_of)
      throw error("stored class map disagrees with conjugation");
    for (std::size_t a = 0; a != lat.num_classes(); ++a)
      for (std::size_t b = 0; b != lat.num_classes(); ++b)
        if (subconj.size() != lat.num_classes() || subconj[a].size() != lat.num_classes() ||
            subconj[a][b] != lat.subconj(a, b))
          throw error("stored subconjugacy matrix disagrees with containment");
    return lat;
  }

  SubgroupLattice(SubgroupLattice&&) noexcept = default;

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }
  std::size_t order(std::size_t i) const { return subgroups_[i].order; }
  std::size_t trivial() const { return 0; }
  std::size_t whole() const { return subgroups_.size() - 1; }

  std::size_t num_classes() const { return class_reps_.size(); }
  std::size_t class_of(std::size_t sub) const { return class_of_[sub]; }
  const std::vector<std::size_t>& class_map() const { return class_of_; }
  std::size_t class_rep(std::size_t cls) const { return class_reps_[cls]; }
  const std::vector<std::size_t>& class_members(std::size_t cls) const {
    return class_members_[cls];
  }
  // Row class subconjugate to column class.
  bool subconj(std::size_t c1, std::size_t c2) const {
    return subconj_[c1 * num_classes() + c2];
  }
  std::vector<std::vector<bool>> subconj_matrix() const {
    std::vector<std::vector<bool>> m(num_classes(), std::vector<bool>(num_classes()));
    for (std::size_t a = 0; a != num_classes(); ++a)
      for (std::size_t b = 0; b != num_classes(); ++b)
        m[a][b] = subconj(a, b);
    return m;
  }

  std::optional<std::size_t> try_find(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t find(const ElementSet& s) const {
    auto r = try_find(s);
    if (!r) throw error("set of " + std::to_string(s.count()) + " elements is not a subgroup");
    return *r;
  }

  bool contains(std::size_t big, std::size_t small) const {
    return subgroups_[small].members.is_subset_of(subgroups_[big].members);
  }
  void require_contains(std::size_t big, std::size_t small, const char* what) const {
    if (!contains(big, small))
      fail_containment(std::string(what) + ": subgroup " + std::to_string(small) +
                       " is not contained in subgroup " + std::to_string(big));
  }

  std::size_t intersect(std::size_t a, std::size_t b) const {
    return find(subgroups_[a].members & subgroups_[b].members);
  }

  std::size_t generated(const std::vector<ElementId>& gens) const {
    return find(impl::closure(*group_, gens));
  }

  // g H g^-1
  std::size_t conjugate(std::size_t sub, ElementId g) const {
    std::call_once(conj_once_[sub], [&] {
      auto& row = conj_rows_[sub];
      row.resize(group_->order());
      for (ElementId x = 0; x != group_->order(); ++x)
        row[x] = static_cast<std::uint32_t>(
            find(impl::conjugate_set(*group_, subgroups_[sub].members, x)));
    });
    return conj_rows_[sub][g];
  }
  // g^-1 H g
  std::size_t conjugate_right(std::size_t sub, ElementId g) const {
    return conjugate(sub, group_->inv(g));
  }

  std::size_t normalizer(std::size_t sub) const { return normalizers_[sub]; }

  const Level& level(std::size_t h) const {
    std::call_once(level_once_[h], [&] { levels_[h] = std::make_unique<Level>(build_level(h)); });
    return *levels_[h];
  }

private:
  SubgroupLattice(std::shared_ptr<const FiniteGroup> group, std::vector<ElementSet> subs, int)
    : group_(std::move(group)) {
    init(std::move(subs));
  }

  void init(std::vector<ElementSet> found) {
    const FiniteGroup& g = *group_;
    std::sort(found.begin(), found.end(), canonical_less);
    subgroups_.clear();
    for (auto& s : found) {
      Subgroup sub;
      sub.order = s.count();
      sub.generators = impl::greedy_generators(g, s);
      sub.members = std::move(s);
      subgroups_.push_back(std::move(sub));
    }
    index_.clear();
    for (std::size_t i = 0; i != subgroups_.size(); ++i)
      index_.emplace(subgroups_[i].members, i);
    const std::size_t n = subgroups_.size();
    conj_rows_.assign(n, {});
    conj_once_ = std::make_unique<std::once_flag[]>(n);
    levels_.clear();
    levels_.resize(n);
    level_once_ = std::make_unique<std::once_flag[]>(n);

    impl::UnionFind uf(n);
    for (std::size_t s = 0; s != n; ++s)
      for (ElementId x : g.generator_ids())
        uf.unite(s, find(impl::conjugate_set(g, subgroups_[s].members, x)));
    class_of_.assign(n, 0);
    class_reps_.clear();
    class_members_.clear();
    std::vector<std::int64_t> root_class(n, -1);
    for (std::size_t s = 0; s != n; ++s) {
      std::size_t r = uf.find(s);
      if (root_class[r] < 0) {
        root_class[r] = static_cast<std::int64_t>(class_reps_.size());
        class_reps_.push_back(s);
        class_members_.emplace_back();
      }
      class_of_[s] = static_cast<std::size_t>(root_class[r]);
      class_members_[class_of_[s]].push_back(s);
    }
    const std::size_t nc = class_reps_.size();
    subconj_.assign(nc * nc, false);
    for (std::size_t s = 0; s != n; ++s)
      for (std::size_t c = 0; c != nc; ++c)
        if (contains(class_reps_[c], s))
          subconj_[class_of_[s] * nc + c] = true;

    normalizers_.assign(n, 0);
    for (std::size_t s = 0; s != n; ++s) {
      ElementSet norm(g.order());
      for (ElementId x = 0; x != g.order(); ++x) {
        bool ok = true;
        for (ElementId h : subgroups_[s].generators)
          if (!subgroups_[s].members.test(g.conj(x, h))) { ok = false; break; }
        if (ok) norm.set(x);
      }
      normalizers_[s] = find(norm);
    }
  }

  Level build_level(std::size_t h) const {
    Level lv;
    lv.subgroup = h;
    lv.class_of.assign(size(), -1);
    for (std::size_t s = 0; s != size(); ++s)
      if (contains(h, s))
        lv.subgroups.push_back(s);
    std::unordered_map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i != lv.subgroups.size(); ++i) pos[lv.subgroups[i]] = i;
    impl::UnionFind uf(lv.subgroups.size());
    for (std::size_t i = 0; i != lv.subgroups.size(); ++i)
      for (ElementId x : subgroups_[h].generators)
        uf.unite(i, pos.at(conjugate(lv.subgroups[i], x)));
    std::vector<std::int64_t> root_class(lv.subgroups.size(), -1);
    for (std::size_t i = 0; i != lv.subgroups.size(); ++i) {
      std::size_t r = uf.find(i);
      if (root_class[r] < 0) {
        root_class[r] = static_cast<std::int64_t>(lv.class_reps.size());
        lv.class_reps.push_back(lv.subgroups[i]);
        lv.class_members.emplace_back();
      }
      lv.class_of[lv.subgroups[i]] = static_cast<std::int32_t>(root_class[r]);
      lv.class_members[static_cast<std::size_t>(root_class[r])].push_back(lv.subgroups[i]);
    }
    return lv;
  }

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_reps_;
  std::vector<std::vector<std::size_t>> class_members_;
  std::vector<bool> subconj_;
  std::vector<std::size_t> normalizers_;

  mutable std::vector<std::vector<std::uint32_t>> conj_rows_;
  mutable std::unique_ptr<std::once_flag[]> conj_once_;
  mutable std::vector<std::unique_ptr<Level>> levels_;
  mutable std::unique_ptr<std::once_flag[]> level_once_;
};

inline SubgroupLattice subgroup_lattice(const FiniteGroup& g) {
  return SubgroupLattice(std::make_shared<const FiniteGroup>(g));
}

// One representative (the least element index) per double coset L x H in K.
inline std::vector<ElementId> double_cosets(const SubgroupLattice& lat, std::size_t l,
                                            std::size_t k, std::size_t h) {
  lat.require_contains(k, l, "double_cosets");
  lat.require_contains(k, h, "double_cosets");
  const FiniteGroup& g = lat.group();
  ElementSet seen(g.order());
  std::vector<ElementId> reps;
  const auto lm = lat.subgroup(l).members.members();
  const auto hm = lat.subgroup(h).members.members();
  lat.subgroup(k).members.for_each([&](ElementId x) {
    if (seen.test(x)) return;
    reps.push_back(x);
    for (ElementId a : lm) {
      ElementId ax = g.mul(a, x);
      for (ElementId b : hm) seen.set(g.mul(ax, b));
    }
  });
  return reps;
}

// Least-index representatives of the left cosets xH in K.
inline std::vector<ElementId> left_coset_reps(const SubgroupLattice& lat, std::size_t k,
                                              std::size_t h) {
  return double_cosets(lat, lat.trivial(), k, h);
}

// Least-index representatives of the right cosets Hx in K.
inline std::vector<ElementId> right_coset_reps(const SubgroupLattice& lat, std::size_t h,
                                               std::size_t k) {
  return double_cosets(lat, h, k, lat.trivial());
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// O^p(H): the subgroup generated by the elements of H of order prime to p.
inline std::size_t p_residual(const SubgroupLattice& lat, std::size_t h, std::uint64_t p) {
  if (!is_prime(p))
    throw usage_error("p_residual needs a prime, got " + std::to_string(p));
  const FiniteGroup& g = lat.group();
  std::vector<ElementId> gens;
  lat.subgroup(h).members.for_each([&](ElementId x) {
    if (g.element_order(x) % p != 0) gens.push_back(x);
  });
  return lat.generated(gens);
}

inline bool is_subconjugate(const SubgroupLattice& lat, std::size_t h, std::size_t k) {
  return lat.subconj(lat.class_of(h), lat.class_of(k));
}

} // namespace btspec

#endif
