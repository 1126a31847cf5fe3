// Prime ideals of the Burnside Tambara functor and of its ghost: membership,
// containment, the spectrum poset with per-prime fibers, the Burnside ring
// spectrum for comparison, and non-primality witnesses for subgroup families.

#ifndef BTSPEC_SPECTRUM_HPP_
#define BTSPEC_SPECTRUM_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghost.hpp"
#include "labels.hpp"
#include "lattice.hpp"

namespace btspec {

// A point of Spec(Z) used to key fibers. `generic` stands for every prime
// not dividing |G|; all such fibers are order-isomorphic.
struct PrimeKey {
  enum Kind { zero, prime, generic };
  Kind kind = zero;
  std::uint64_t p = 0;

  static PrimeKey of(std::uint64_t v) {
    if (v == 0) return {zero, 0};
    if (!is_prime(v)) throw usage_error(std::to_string(v) + " is neither 0 nor a prime");
    return {prime, v};
  }
  static PrimeKey generic_prime() { return {generic, 0}; }

  std::string str() const {
    switch (kind) {
      case zero: return "0";
      case prime: return std::to_string(p);
      case generic: return "GENERIC";
    }
    return "?";
  }
  auto operator<=>(const PrimeKey&) const = default;
};

// Smallest prime not dividing n; stands in for the generic prime whenever a
// concrete residue computation is needed.
inline std::uint64_t smallest_prime_not_dividing(std::uint64_t n) {
  for (std::uint64_t q = 2;; ++q)
    if (is_prime(q) && n % q != 0) return q;
}

// Concrete modulus for membership tests; 0 for the zero fiber.
inline std::uint64_t modulus(const SubgroupLattice& lat, PrimeKey key) {
  switch (key.kind) {
    case PrimeKey::zero: return 0;
    case PrimeKey::prime: return key.p;
    case PrimeKey::generic: return smallest_prime_not_dividing(lat.group().order());
  }
  return 0;
}

// G-class of O^p of the class representative; the class itself for 0 and
// for primes not dividing |G|.
inline std::size_t residual_class(const SubgroupLattice& lat, std::size_t cls, PrimeKey key) {
  if (key.kind != PrimeKey::prime || lat.group().order() % key.p != 0) return cls;
  return lat.class_of(p_residual(lat, lat.class_rep(cls), key.p));
}

struct PrimeIdeal {
  std::size_t subgroup_class = 0;
  PrimeKey p;
  std::size_t canonical_class = 0;

  // Equal ideals have equal (p, canonical class).
  bool same_ideal(const PrimeIdeal& o) const {
    return p == o.p && canonical_class == o.canonical_class;
  }
};

inline PrimeIdeal make_prime_ideal(const SubgroupLattice& lat, std::size_t cls, PrimeKey key) {
  return {cls, key, residual_class(lat, cls, key)};
}

// i1 contained in i2.
inline bool ideal_contains(const SubgroupLattice& lat, const PrimeIdeal& i1, const PrimeIdeal& i2) {
  const bool z1 = i1.p.kind == PrimeKey::zero, z2 = i2.p.kind == PrimeKey::zero;
  if (z1 && z2) return lat.subconj(i2.subgroup_class, i1.subgroup_class);
  if (!z1 && z2) return false;
  if (z1) return lat.subconj(i2.canonical_class, i1.subgroup_class);
  if (i1.p != i2.p) return false;
  return lat.subconj(i2.canonical_class, i1.canonical_class);
}

// A set of G-classes of subgroups closed under subconjugacy.
struct SubgroupFamily {
  std::vector<bool> member;  // indexed by G-class

  bool contains(std::size_t cls) const { return member[cls]; }
  std::size_t size() const {
    return static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
  }
  bool operator==(const SubgroupFamily&) const = default;
};

inline bool is_family(const SubgroupLattice& lat, const SubgroupFamily& f) {
  if (f.member.size() != lat.num_classes() || f.size() == 0) return false;
  for (std::size_t a = 0; a != lat.num_classes(); ++a)
    for (std::size_t b = 0; b != lat.num_classes(); ++b)
      if (f.member[b] && lat.subconj(a, b) && !f.member[a]) return false;
  return true;
}

// All subgroups subconjugate to the class `cls`.
inline SubgroupFamily principal_family(const SubgroupLattice& lat, std::size_t cls) {
  SubgroupFamily f{std::vector<bool>(lat.num_classes())};
  for (std::size_t c = 0; c != lat.num_classes(); ++c) f.member[c] = lat.subconj(c, cls);
  return f;
}

inline std::vector<std::size_t> maximal_classes(const SubgroupLattice& lat, const SubgroupFamily& f) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c != lat.num_classes(); ++c) {
    if (!f.member[c]) continue;
    bool maximal = true;
    for (std::size_t d = 0; d != lat.num_classes(); ++d)
      if (d != c && f.member[d] && lat.subconj(c, d)) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

inline std::optional<std::size_t> principal_generator(const SubgroupLattice& lat,
                                                      const SubgroupFamily& f) {
  auto m = maximal_classes(lat, f);
  if (m.size() == 1 && principal_family(lat, m[0]) == f) return m[0];
  return std::nullopt;
}

// Every family of subgroups, in increasing bitmask order over classes.
inline std::vector<SubgroupFamily> all_families(const SubgroupLattice& lat) {
  const std::size_t n = lat.num_classes();
  if (n > 24) throw error("too many conjugacy classes to enumerate families");
  std::vector<SubgroupFamily> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    SubgroupFamily f{std::vector<bool>(n)};
    for (std::size_t c = 0; c != n; ++c) f.member[c] = mask >> c & 1;
    if (is_family(lat, f)) out.push_back(std::move(f));
  }
  return out;
}

namespace impl {

inline bool divisible(const Int& v, std::uint64_t p) {
  return p == 0 ? v == 0 : v % p == 0;
}

} // namespace impl

// Level-L part of the ghost ideal for family F and p (0 allowed): every
// coordinate at a subgroup whose G-class is in F is divisible by p.
inline bool ghost_ideal_membership(const SubgroupLattice& lat, const SubgroupFamily& f,
                                   std::uint64_t p, const GhostElement& a) {
  const Level& lv = lat.level(a.level);
  for (std::size_t c = 0; c != lv.num_classes(); ++c)
    if (f.contains(lat.class_of(lv.class_reps[c])) && !impl::divisible(a.values[c], p))
      return false;
  return true;
}

// x lies in the level-H part of the ideal for (K, p): |x^I| divisible by p
// for every I <= H subconjugate to K.
inline bool burnside_ideal_membership(const BurnsideRings& rings, std::size_t k_class,
                                      std::uint64_t p, const BurnsideElement& x) {
  const SubgroupLattice& lat = rings.lattice();
  const GhostElement m = rings.marks(x);
  const Level& lv = lat.level(x.level);
  for (std::size_t c = 0; c != lv.num_classes(); ++c)
    if (lat.subconj(lat.class_of(lv.class_reps[c]), k_class) && !impl::divisible(m.values[c], p))
      return false;
  return true;
}

inline bool ideal_member(const BurnsideRings& rings, const PrimeIdeal& ideal, const BurnsideElement& x) {
  return burnside_ideal_membership(rings, ideal.subgroup_class, modulus(rings.lattice(), ideal.p), x);
}

struct SpectrumNode {
  PrimeIdeal ideal;                  // subgroup_class = canonical representative
  std::vector<std::size_t> members;  // G-classes H with this ideal equal to p_{H,p}
};

struct SpectrumPoset {
  std::vector<SpectrumNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (a, b): a contained in b
  std::vector<std::pair<PrimeKey, std::vector<std::size_t>>> fibers;
  std::size_t krull_dimension = 0;

  std::optional<std::size_t> find(PrimeKey key, std::size_t canonical_class) const {
    for (std::size_t i = 0; i != nodes.size(); ++i)
      if (nodes[i].ideal.p == key && nodes[i].ideal.canonical_class == canonical_class) return i;
    return std::nullopt;
  }
  const std::vector<std::size_t>* fiber(PrimeKey key) const {
    for (const auto& [k, ids] : fibers)
      if (k == key) return &ids;
    return nullptr;
  }
};

namespace impl {

// Fiber keys in output order: 0, the primes dividing |G|, any extra primes,
// then the generic prime.
inline std::vector<PrimeKey> fiber_keys(const SubgroupLattice& lat,
                                        const std::vector<std::uint64_t>& extra) {
  std::vector<PrimeKey> keys{PrimeKey::of(0)};
  std::vector<std::uint64_t> ps = prime_divisors(lat.group().order());
  for (std::uint64_t q : extra) {
    PrimeKey::of(q);
    if (q != 0) ps.push_back(q);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (std::uint64_t p : ps) keys.push_back(PrimeKey::of(p));
  keys.push_back(PrimeKey::generic_prime());
  return keys;
}

inline std::vector<SpectrumNode> fiber_nodes(const SubgroupLattice& lat, PrimeKey key) {
  std::map<std::size_t, std::vector<std::size_t>> by_canonical;
  for (std::size_t c = 0; c != lat.num_classes(); ++c)
    by_canonical[residual_class(lat, c, key)].push_back(c);
  std::vector<SpectrumNode> out;
  for (auto& [canon, members] : by_canonical)
    out.push_back({{canon, key, canon}, members});
  return out;
}

// Drops (a, c) whenever a < b < c for some b.
inline std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a != n; ++a)
    for (std::size_t c = 0; c != n; ++c) {
      if (!less[a][c]) continue;
      bool covered = true;
      for (std::size_t b = 0; b != n && covered; ++b)
        if (less[a][b] && less[b][c]) covered = false;
      if (covered) out.emplace_back(a, c);
    }
  return out;
}

inline std::size_t longest_chain(const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  // Nodes are not topologically sorted in general; relax n times.
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t round = 0; round != n; ++round)
    for (std::size_t a = 0; a != n; ++a)
      for (std::size_t b = 0; b != n; ++b)
        if (less[a][b]) depth[b] = std::max(depth[b], depth[a] + 1);
  return n ? *std::max_element(depth.begin(), depth.end()) : 0;
}

inline SpectrumPoset assemble(const SubgroupLattice& lat, const std::vector<PrimeKey>& keys,
                              bool burnside_ring) {
  SpectrumPoset s;
  for (PrimeKey key : keys) {
    std::vector<std::size_t> ids;
    for (SpectrumNode& n : fiber_nodes(lat, key)) {
      ids.push_back(s.nodes.size());
      s.nodes.push_back(std::move(n));
    }
    s.fibers.emplace_back(key, std::move(ids));
  }
  const std::size_t n = s.nodes.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a != n; ++a)
    for (std::size_t b = 0; b != n; ++b) {
      if (a == b) continue;
      const PrimeIdeal& ia = s.nodes[a].ideal;
      const PrimeIdeal& ib = s.nodes[b].ideal;
      if (burnside_ring) {
        // Zero-fiber kernels sit below exactly the p-kernels with the same
        // p-residual; nothing else is comparable.
        if (ia.p.kind == PrimeKey::zero && ib.p.kind != PrimeKey::zero)
          less[a][b] = residual_class(lat, ia.subgroup_class, ib.p) == ib.canonical_class;
      } else {
        less[a][b] = ideal_contains(lat, ia, ib);
      }
    }
  s.edges = transitive_reduction(less);
  s.krull_dimension = burnside_ring ? 1 : longest_chain(less);
  return s;
}

} // namespace impl

inline SpectrumPoset enumerate_spectrum(const SubgroupLattice& lat,
                                        const std::vector<std::uint64_t>& extra_primes = {}) {
  return impl::assemble(lat, impl::fiber_keys(lat, extra_primes), false);
}

inline SpectrumPoset burnside_ring_spectrum(const SubgroupLattice& lat,
                                            const std::vector<std::uint64_t>& extra_primes = {}) {
  return impl::assemble(lat, impl::fiber_keys(lat, extra_primes), true);
}

// 1 + length of the longest strict chain of subgroup classes.
inline std::size_t class_chain_dimension(const SubgroupLattice& lat) {
  const std::size_t n = lat.num_classes();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a != n; ++a)
    for (std::size_t b = 0; b != n; ++b) less[a][b] = a != b && lat.subconj(a, b);
  return 1 + impl::longest_chain(less);
}

// Ideals of the spectrum that coincide as sets of (p, canonical class).
inline bool same_node_set(const SpectrumPoset& a, const SpectrumPoset& b) {
  auto keys = [](const SpectrumPoset& s) {
    std::vector<std::pair<PrimeKey, std::size_t>> k;
    for (const auto& n : s.nodes) k.emplace_back(n.ideal.p, n.ideal.canonical_class);
    std::sort(k.begin(), k.end());
    return k;
  };
  return keys(a) == keys(b);
}

struct QConditionOptions {
  // Iterate every L, every H_i <= K_i and every element g_i instead of
  // representatives.
  bool full_iteration = false;
};

// Whether every generalized product
//   nm^L_{g1 H1}(c_g1 res^K1_H1 a) * nm^L_{g2 H2}(c_g2 res^K2_H2 b)
// lies in the ghost ideal for (F, p) at level L.
inline bool q_condition_check(const TambaraLevelSystem& t, const SubgroupFamily& f,
                              std::uint64_t p, const GhostElement& a, const GhostElement& b,
                              QConditionOptions opt = {}) {
  const SubgroupLattice& lat = t.lattice();
  const FiniteGroup& g = lat.group();
  std::vector<std::size_t> ls;
  if (opt.full_iteration)
    for (std::size_t l = 0; l != lat.size(); ++l) ls.push_back(l);
  else
    for (std::size_t c = 0; c != lat.num_classes(); ++c) ls.push_back(lat.class_rep(c));

  // Pieces nm^L_{^gH}(c_g res^K_H x) for one factor, over the admissible (H, g).
  auto pieces = [&](std::size_t l, const GhostElement& x) {
    std::vector<GhostElement> out;
    const std::size_t k = x.level;
    const Level& lk = lat.level(k);
    const std::vector<std::size_t>& hs = opt.full_iteration ? lk.subgroups : lk.class_reps;
    for (std::size_t h : hs) {
      std::vector<ElementId> gs;
      if (opt.full_iteration)
        for (ElementId y = 0; y != g.order(); ++y) gs.push_back(y);
      else
        gs = double_cosets(lat, l, lat.whole(), h);
      const GhostElement r = t.res(k, h, x);
      for (ElementId y : gs) {
        const std::size_t gh = lat.conjugate(h, y);
        if (!lat.contains(l, gh)) continue;
        out.push_back(t.nm(l, gh, t.conj(y, h, r)));
      }
    }
    return out;
  };

  for (std::size_t l : ls) {
    const auto pa = pieces(l, a);
    const auto pb = pieces(l, b);
    for (const GhostElement& u : pa)
      for (const GhostElement& v : pb)
        if (!ghost_ideal_membership(lat, f, p, u * v)) return false;
  }
  return true;
}

struct NonPrimeWitness {
  std::size_t first_class = 0;   // maximal class N of F
  std::size_t second_class = 0;  // another maximal class N'
  GhostElement a;                // at level N: 1 at N, 0 below
  GhostElement b;                // at level N'
};

// No witness exactly when F is principal. Otherwise two distinct maximal
// classes of F have no common upper bound in F, and the top-coordinate
// indicators at their levels multiply into the ideal everywhere.
inline std::optional<NonPrimeWitness> non_prime_witness(const TambaraLevelSystem& t,
                                                        const SubgroupFamily& f) {
  const SubgroupLattice& lat = t.lattice();
  if (!is_family(lat, f)) throw usage_error("not a family of subgroups");
  if (principal_generator(lat, f)) return std::nullopt;
  const auto m = maximal_classes(lat, f);
  const std::size_t n1 = lat.class_rep(m[0]), n2 = lat.class_rep(m[1]);
  NonPrimeWitness w;
  w.first_class = m[0];
  w.second_class = m[1];
  w.a = t.indicator(n1, {lat.level(n1).top_class()});
  w.b = t.indicator(n2, {lat.level(n2).top_class()});
  return w;
}

} // namespace btspec

#endif
