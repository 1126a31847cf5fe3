// Shared test helpers: brute-force oracles, labelled-graph isomorphism, the
// reference Hasse diagrams and the finite element pool used to check
// containments between prime ideals.

#ifndef BTSPEC_TESTS_SUPPORT_HPP_
#define BTSPEC_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "btspec/btspec.hpp"

namespace testing_support {

using namespace btspec;

inline std::shared_ptr<const SubgroupLattice> lattice_of(const std::string& spec) {
  auto g = std::make_shared<const FiniteGroup>(realize(parse_group_spec(spec)));
  return std::make_shared<const SubgroupLattice>(g);
}

// Subconjugacy straight from the element sets.
inline bool oracle_subconj(const SubgroupLattice& lat, std::size_t a, std::size_t b) {
  const FiniteGroup& g = lat.group();
  const ElementSet& sa = lat.subgroup(a).members;
  const ElementSet& sb = lat.subgroup(b).members;
  for (ElementId x = 0; x != g.order(); ++x) {
    bool inside = true;
    sa.for_each([&](ElementId y) {
      if (inside && !sb.test(g.conj(x, y))) inside = false;
    });
    if (inside) return true;
  }
  return false;
}

// |(L/J)^I| by counting fixed cosets directly.
inline std::int64_t oracle_mark(const SubgroupLattice& lat, std::size_t l, std::size_t j,
                             std::size_t i) {
  const FiniteGroup& g = lat.group();
  const ElementSet& sl = lat.subgroup(l).members;
  const ElementSet& sj = lat.subgroup(j).members;
  const ElementSet& si = lat.subgroup(i).members;
  std::int64_t fixed = 0;
  std::set<std::vector<ElementId>> seen;
  sl.for_each([&](ElementId x) {
    std::vector<ElementId> coset;
    sj.for_each([&](ElementId y) { coset.push_back(g.mul(x, y)); });
    std::sort(coset.begin(), coset.end());
    if (!seen.insert(coset).second) return;
    // x J is fixed by I iff x^-1 I x <= J.
    bool ok = true;
    si.for_each([&](ElementId y) {
      if (ok && !sj.test(g.mul(g.mul(g.inv(x), y), x))) ok = false;
    });
    if (ok) ++fixed;
  });
  return fixed;
}

// Square matrix M[k][i] = |(L/K_k)^{I_i}| over the level classes.
inline std::vector<std::vector<std::int64_t>> oracle_marks_matrix(const SubgroupLattice& lat,
                                                               std::size_t l) {
  const Level& lv = lat.level(l);
  const std::size_t n = lv.num_classes();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (std::size_t k = 0; k != n; ++k)
    for (std::size_t i = 0; i != n; ++i)
      m[k][i] = oracle_mark(lat, l, lv.class_reps[k], lv.class_reps[i]);
  return m;
}

// Marks of a Burnside element, computed from the oracle matrix.
inline std::vector<Int> oracle_marks(const SubgroupLattice& lat, const BurnsideElement& x) {
  const auto m = oracle_marks_matrix(lat, x.level);
  std::vector<Int> out(m.size(), 0);
  for (std::size_t k = 0; k != m.size(); ++k)
    for (std::size_t i = 0; i != m.size(); ++i) out[i] += x.coeffs[k] * m[k][i];
  return out;
}

// Ideal membership from the definition: every mark at a subgroup of L that
// is subconjugate to K is divisible by p (p = 0 means zero).
inline bool oracle_member(const SubgroupLattice& lat, std::size_t k_class, std::uint64_t p,
                          const BurnsideElement& x) {
  const Level& lv = lat.level(x.level);
  const auto marks = oracle_marks(lat, x);
  for (std::size_t c = 0; c != lv.num_classes(); ++c) {
    if (!oracle_subconj(lat, lv.class_reps[c], lat.class_rep(k_class))) continue;
    if (p == 0 ? marks[c] != 0 : marks[c] % p != 0) return false;
  }
  return true;
}

// O^p(H) as the intersection of all normal subgroups of p-power index.
inline std::size_t oracle_residual(const SubgroupLattice& lat, std::size_t h, std::uint64_t p) {
  const FiniteGroup& g = lat.group();
  const ElementSet& sh = lat.subgroup(h).members;
  ElementSet acc = sh;
  for (std::size_t n = 0; n != lat.size(); ++n) {
    const ElementSet& sn = lat.subgroup(n).members;
    if (!sn.is_subset_of(sh)) continue;
    std::size_t index = lat.order(h) / lat.order(n);
    while (index % p == 0) index /= p;
    if (index != 1) continue;
    bool normal = true;
    sh.for_each([&](ElementId x) {
      if (!normal) return;
      sn.for_each([&](ElementId y) {
        if (normal && !sn.test(g.conj(x, y))) normal = false;
      });
    });
    if (normal) acc = acc & sn;
  }
  return lat.find(acc);
}

// ---------------------------------------------------------------------------
// Labelled graphs up to relabelling of a/b/c-suffixed copies.

struct Graph {
  std::vector<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
};

// "K4a" -> "K4"; single-letter "e" and unsuffixed labels are unchanged.
inline std::string base_label(const std::string& s) {
  if (s.size() >= 2 && s.back() >= 'a' && s.back() <= 'z' && s[s.size() - 2] >= '0' &&
      s[s.size() - 2] <= '9')
    return s.substr(0, s.size() - 1);
  return s;
}

// Bijections from expected node names onto actual node names that keep base
// labels fixed; calls `f` with each until it returns true.
inline bool for_each_relabelling(const std::vector<std::string>& expected,
                                 const std::vector<std::string>& actual,
                                 const std::function<bool(const std::map<std::string, std::string>&)>& f) {
  std::map<std::string, std::vector<std::string>> ex, ac;
  for (const auto& n : expected) ex[base_label(n)].push_back(n);
  for (const auto& n : actual) ac[base_label(n)].push_back(n);
  if (ex.size() != ac.size()) return false;
  for (auto& [b, v] : ex) {
    auto it = ac.find(b);
    if (it == ac.end() || it->second.size() != v.size()) return false;
    std::sort(it->second.begin(), it->second.end());
  }
  std::vector<std::string> bases;
  for (const auto& [b, v] : ex) bases.push_back(b);
  std::map<std::string, std::string> m;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == bases.size()) return f(m);
    const auto& from = ex[bases[i]];
    auto to = ac[bases[i]];
    do {
      for (std::size_t k = 0; k != from.size(); ++k) m[from[k]] = to[k];
      if (rec(i + 1)) return true;
    } while (std::next_permutation(to.begin(), to.end()));
    return false;
  };
  return rec(0);
}

inline bool isomorphic(const Graph& expected, const Graph& actual) {
  if (expected.nodes.size() != actual.nodes.size() ||
      expected.edges.size() != actual.edges.size())
    return false;
  return for_each_relabelling(expected.nodes, actual.nodes, [&](const auto& m) {
    for (const auto& [a, b] : expected.edges)
      if (!actual.edges.count({m.at(a), m.at(b)})) return false;
    return true;
  });
}

// Node names of a computed fiber: the label of the canonical class, with the
// whole group called "G".
inline std::string node_name(const SubgroupLattice& lat, const ClassLabels& labels,
                             std::size_t cls) {
  return cls + 1 == lat.num_classes() ? std::string("G") : labels.display[cls];
}

inline Graph fiber_graph(const SubgroupLattice& lat, const SpectrumPoset& s, PrimeKey key) {
  const ClassLabels labels = class_labels(lat);
  Graph out;
  const auto* ids = s.fiber(key);
  if (!ids) return out;
  std::map<std::size_t, std::string> name;
  for (std::size_t id : *ids) {
    name[id] = node_name(lat, labels, s.nodes[id].ideal.canonical_class);
    out.nodes.push_back(name[id]);
  }
  for (const auto& [a, b] : s.edges)
    if (name.count(a) && name.count(b)) out.edges.insert({name[a], name[b]});
  return out;
}

inline std::string describe(const Graph& g) {
  std::string s = "nodes:";
  for (const auto& n : g.nodes) s += " " + n;
  s += "; edges:";
  for (const auto& [a, b] : g.edges) s += " " + a + "->" + b;
  return s;
}

// Hasse diagram of the opposite subconjugacy order, built from the oracle:
// an edge K -> H whenever H is a maximal class strictly subconjugate to K.
inline Graph opposite_subconjugacy_hasse(const SubgroupLattice& lat) {
  const ClassLabels labels = class_labels(lat);
  const std::size_t n = lat.num_classes();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n));
  for (std::size_t a = 0; a != n; ++a)
    for (std::size_t b = 0; b != n; ++b)
      below[a][b] = a != b && oracle_subconj(lat, lat.class_rep(a), lat.class_rep(b));
  Graph out;
  for (std::size_t c = 0; c != n; ++c) out.nodes.push_back(node_name(lat, labels, c));
  for (std::size_t h = 0; h != n; ++h)
    for (std::size_t k = 0; k != n; ++k) {
      if (!below[h][k]) continue;
      bool cover = true;
      for (std::size_t m = 0; m != n; ++m)
        if (below[h][m] && below[m][k]) cover = false;
      if (cover) out.edges.insert({out.nodes[k], out.nodes[h]});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Reference Hasse diagrams. An edge {X, Y} says p_{X} is contained in p_{Y},
// drawn as an arrow from X to Y. Nodes are named by residual class label.

inline Graph make_graph(std::vector<std::string> nodes,
                        std::vector<std::pair<std::string, std::string>> edges) {
  Graph g;
  g.nodes = std::move(nodes);
  for (auto& e : edges) g.edges.insert(std::move(e));
  return g;
}

inline Graph a4_generic() {
  return make_graph({"G", "K4", "C3", "C2", "e"},
                    {{"G", "K4"}, {"G", "C3"}, {"K4", "C2"}, {"C3", "e"}, {"C2", "e"}});
}
inline Graph a4_two() { return make_graph({"G", "C3", "e"}, {{"G", "C3"}, {"C3", "e"}}); }
inline Graph a4_three() { return make_graph({"K4", "C2", "e"}, {{"K4", "C2"}, {"C2", "e"}}); }

inline Graph q8_generic() {
  return make_graph({"G", "C4a", "C4b", "C4c", "C2", "e"},
                    {{"G", "C4a"}, {"G", "C4b"}, {"G", "C4c"}, {"C4a", "C2"},
                     {"C4b", "C2"}, {"C4c", "C2"}, {"C2", "e"}});
}
inline Graph q8_two() { return make_graph({"e"}, {}); }

// Dihedral group of order 18; the reflection subgroups are C2 and S3.
inline Graph d9_generic() {
  return make_graph({"G", "S3", "C2", "C9", "C3", "e"},
                    {{"G", "S3"}, {"S3", "C2"}, {"C2", "e"}, {"C3", "e"}, {"S3", "C3"},
                     {"C9", "C3"}, {"G", "C9"}});
}
inline Graph d9_two() { return make_graph({"C9", "C3", "e"}, {{"C3", "e"}, {"C9", "C3"}}); }
inline Graph d9_three() {
  return make_graph({"G", "S3", "C2", "e"}, {{"C2", "e"}, {"S3", "C2"}, {"G", "S3"}});
}

// The simple group of order 168. The hand-drawn generic and 7-fiber diagrams
// this is transcribed from also carried an arrow S3 -> C4; S3 has no
// subgroup of order 4, so that arrow is omitted here.
inline Graph gl32_generic() {
  return make_graph(
      {"G", "C7⋊C3", "S4a", "S4b", "S3", "A4a", "D4", "A4b", "C7", "C3", "C4", "K4a", "K4b",
       "C2", "e"},
      {{"G", "C7⋊C3"}, {"G", "S4a"},   {"G", "S4b"},   {"C7⋊C3", "C7"}, {"C7⋊C3", "C3"},
       {"S4a", "S3"},  {"S4b", "D4"},   {"S4b", "A4b"}, {"A4b", "K4b"},  {"C7", "e"},
       {"C3", "e"},    {"C4", "C2"},    {"K4a", "C2"},  {"K4b", "C2"},   {"C2", "e"},
       {"S4a", "D4"},  {"S4b", "S3"},   {"A4b", "C3"},  {"S3", "C3"},    {"A4a", "C3"},
       {"S3", "C2"},   {"A4a", "K4a"},  {"D4", "C4"},   {"D4", "K4a"},   {"D4", "K4b"},
       {"S4a", "A4a"}});
}
inline Graph gl32_two() {
  return make_graph({"G", "C7⋊C3", "A4a", "A4b", "C7", "C3", "e"},
                    {{"G", "C7⋊C3"}, {"G", "A4a"}, {"G", "A4b"}, {"C7⋊C3", "C7"},
                     {"C7⋊C3", "C3"}, {"A4a", "C3"}, {"A4b", "C3"}, {"C7", "e"},
                     {"C3", "e"}});
}
inline Graph gl32_three() {
  return make_graph({"G", "S4a", "S4b", "C7", "S3", "D4", "K4a", "C4", "K4b", "C2", "e"},
                    {{"G", "S4a"}, {"G", "S4b"}, {"G", "C7"}, {"S4a", "S3"}, {"S4a", "D4"},
                     {"S4b", "D4"}, {"C7", "e"}, {"S3", "C2"}, {"D4", "K4a"}, {"D4", "C4"},
                     {"D4", "K4b"}, {"K4a", "C2"}, {"C4", "C2"}, {"K4b", "C2"}, {"C2", "e"},
                     {"S4b", "S3"}});
}
inline Graph gl32_seven() {
  return make_graph(
      {"G", "C7⋊C3", "S4a", "S4b", "S3", "A4a", "D4", "A4b", "C3", "C4", "K4a", "K4b", "C2",
       "e"},
      {{"G", "C7⋊C3"}, {"G", "S4a"},  {"G", "S4b"},  {"C7⋊C3", "C3"}, {"S4a", "S3"},
       {"S4b", "D4"},   {"S4b", "A4b"}, {"A4b", "K4b"}, {"C3", "e"},     {"C4", "C2"},
       {"K4a", "C2"},   {"K4b", "C2"},  {"C2", "e"},    {"S4a", "D4"},   {"S4b", "S3"},
       {"A4b", "C3"},   {"S3", "C3"},   {"A4a", "C3"},  {"S3", "C2"},    {"A4a", "K4a"},
       {"D4", "C4"},    {"D4", "K4a"},  {"D4", "K4b"},  {"S4a", "A4a"}});
}

// Rows H -> (O^2(H), O^3(H), O^7(H)) of the residual table for the simple
// group of order 168.
inline std::vector<std::pair<std::string, std::vector<std::string>>> gl32_residual_table() {
  return {
      {"G", {"G", "G", "G"}},
      {"C7⋊C3", {"C7⋊C3", "C7", "C7⋊C3"}},
      {"S4a", {"A4a", "S4a", "S4a"}},
      {"S4b", {"A4b", "S4b", "S4b"}},
      {"C7", {"C7", "C7", "e"}},
      {"S3", {"C3", "S3", "S3"}},
      {"A4a", {"A4a", "K4a", "A4a"}},
      {"A4b", {"A4b", "K4b", "A4b"}},
      {"D4", {"e", "D4", "D4"}},
      {"C3", {"C3", "e", "C3"}},
      {"C4", {"e", "C4", "C4"}},
      {"K4a", {"e", "K4a", "K4a"}},
      {"K4b", {"e", "K4b", "K4b"}},
      {"C2", {"e", "C2", "C2"}},
      {"e", {"e", "e", "e"}},
  };
}

// ---------------------------------------------------------------------------
// Finite pool of Burnside elements at one level L:
//   * basis elements [L/J] times 1 and times each fiber modulus;
//   * for each L-class J, the ghost indicator of J scaled by the least n
//     that puts it in the image of the mark homomorphism;
//   * for each prime p dividing |G| and each L-class P = O^p(J), the ghost
//     indicator of {I : O^p(I) ~ P} scaled the same way.

using Rational = boost::multiprecision::cpp_rational;

// Least positive n with n * v integral after unmarking, and the result.
inline BurnsideElement scaled_preimage(const SubgroupLattice& lat, std::size_t l,
                                       const std::vector<Int>& v) {
  const auto m = oracle_marks_matrix(lat, l);
  const std::size_t n = m.size();
  std::vector<Rational> c(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational r = Rational(v[k]);
    for (std::size_t j = k + 1; j != n; ++j) r -= c[j] * Rational(m[j][k]);
    c[k] = r / Rational(m[k][k]);
  }
  Int scale = 1;
  for (const auto& x : c) {
    Int d = boost::multiprecision::denominator(x);
    scale = scale / boost::multiprecision::gcd(scale, d) * d;
  }
  BurnsideElement out{l, std::vector<Int>(n)};
  for (std::size_t k = 0; k != n; ++k) {
    Rational r = c[k] * Rational(scale);
    out.coeffs[k] = boost::multiprecision::numerator(r);
  }
  return out;
}

inline std::vector<BurnsideElement> ideal_pool(const SubgroupLattice& lat, std::size_t l) {
  const Level& lv = lat.level(l);
  const std::size_t n = lv.num_classes();
  std::vector<std::uint64_t> scalars{1};
  for (std::uint64_t p : prime_divisors(lat.group().order())) scalars.push_back(p);
  scalars.push_back(smallest_prime_not_dividing(lat.group().order()));
  std::vector<BurnsideElement> pool;
  for (std::size_t j = 0; j != n; ++j)
    for (std::uint64_t s : scalars) {
      BurnsideElement x{l, std::vector<Int>(n, 0)};
      x.coeffs[j] = s;
      pool.push_back(std::move(x));
    }
  for (std::size_t j = 0; j != n; ++j) {
    std::vector<Int> v(n, 0);
    v[j] = 1;
    pool.push_back(scaled_preimage(lat, l, v));
  }
  for (std::uint64_t p : prime_divisors(lat.group().order())) {
    // L-class of O^p for each L-class.
    std::vector<std::size_t> res(n);
    for (std::size_t c = 0; c != n; ++c)
      res[c] = lv.class_index(oracle_residual(lat, lv.class_reps[c], p));
    for (std::size_t target : std::set<std::size_t>(res.begin(), res.end())) {
      std::vector<Int> v(n, 0);
      for (std::size_t c = 0; c != n; ++c) v[c] = res[c] == target ? 1 : 0;
      pool.push_back(scaled_preimage(lat, l, v));
    }
  }
  return pool;
}

} // namespace testing_support

#endif
