// Human-readable names for conjugacy classes of subgroups.
//
// Every class has a canonical id "o<order>c<k>", k counting classes of the
// same order from 0 in class order. Classes whose isomorphism type is
// recognized from a small fingerprint (order, abelian flag, exponent,
// element-order histogram) also get a structure name; classes sharing a
// name get suffixes a, b, ... in class order.

#ifndef BTSPEC_LABELS_HPP_
#define BTSPEC_LABELS_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace btspec {

struct Fingerprint {
  std::size_t order = 1;
  bool abelian = true;
  std::size_t exponent = 1;
  std::map<std::size_t, std::size_t> order_histogram;  // element order -> count

  std::size_t count_of_order(std::size_t k) const {
    auto it = order_histogram.find(k);
    return it == order_histogram.end() ? 0 : it->second;
  }
  bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const SubgroupLattice& lat, std::size_t sub) {
  const FiniteGroup& g = lat.group();
  const Subgroup& s = lat.subgroup(sub);
  Fingerprint f;
  f.order = s.order;
  for (ElementId a : s.generators)
    for (ElementId b : s.generators)
      if (g.mul(a, b) != g.mul(b, a)) f.abelian = false;
  s.members.for_each([&](ElementId x) {
    std::size_t o = g.element_order(x);
    ++f.order_histogram[o];
    f.exponent = std::lcm(f.exponent, o);
  });
  return f;
}

namespace impl {

// Invariant factors of an abelian group from its element-order counts.
inline std::string abelian_name(const Fingerprint& f) {
  std::map<std::size_t, std::vector<std::size_t>> primary;  // p -> exponents
  for (std::uint64_t p : prime_divisors(f.order)) {
    std::size_t prev = 0;  // log_p #{x : x^(p^(k-1)) = 1}
    std::vector<std::size_t> at_least;  // number of cyclic factors of order >= p^k
    for (std::size_t k = 1, pk = p;; ++k, pk *= p) {
      std::size_t cnt = 0;
      for (auto [o, c] : f.order_histogram)
        if (pk % o == 0) cnt += c;
      std::size_t lg = 0;
      for (std::size_t c = cnt; c > 1; c /= p) ++lg;
      if (lg == prev) break;
      at_least.push_back(lg - prev);
      prev = lg;
    }
    std::vector<std::size_t> exps;
    for (std::size_t k = 0; k != at_least.size(); ++k) {
      std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (std::size_t c = 0; c != at_least[k] - next; ++c) exps.push_back(k + 1);
    }
    primary[p] = exps;
  }
  // Combine primary parts into invariant factors d1 | d2 | ...
  std::size_t rank = 0;
  for (auto& [p, e] : primary) {
    std::sort(e.rbegin(), e.rend());
    rank = std::max(rank, e.size());
  }
  std::vector<std::size_t> factors(rank, 1);
  for (auto& [p, e] : primary)
    for (std::size_t i = 0; i != e.size(); ++i)
      for (std::size_t j = 0; j != e[i]; ++j) factors[i] *= p;
  std::sort(factors.begin(), factors.end());
  std::string s;
  for (std::size_t i = 0; i != factors.size(); ++i)
    s += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
  return s;
}

} // namespace impl

// Structure name for a recognized isomorphism type, empty otherwise.
inline std::string structure_name(const Fingerprint& f) {
  const std::size_t n = f.order;
  if (n == 1) return "e";
  if (f.abelian) {
    if (f.exponent == n) return "C" + std::to_string(n);
    if (n == 4) return "K4";
    return impl::abelian_name(f);
  }
  const std::size_t inv = f.count_of_order(2);
  if (n == 6) return "S3";
  if (n == 8) return inv == 5 ? "D4" : inv == 1 ? "Q8" : "";
  if (n == 12 && inv == 3 && f.count_of_order(3) == 8) return "A4";
  if (n == 21) return "C7⋊C3";
  if (n == 24 && inv == 9 && f.count_of_order(3) == 8 && f.count_of_order(4) == 6) return "S4";
  if (n == 60 && inv == 15 && f.count_of_order(3) == 20 && f.count_of_order(5) == 24) return "A5";
  if (n == 168 && inv == 21 && f.count_of_order(7) == 48) return "PSL2_7";
  if (n % 2 == 0) {
    std::size_t m = n / 2;
    bool has_rotation = f.count_of_order(m) > 0;
    if (has_rotation && inv == (m % 2 ? m : m + 1)) return "D" + std::to_string(m);
  }
  if (n % 4 == 0 && inv == 1 && f.count_of_order(n / 2) > 0) return "Q" + std::to_string(n);
  return "";
}

struct ClassLabels {
  std::vector<std::string> ids;      // o<order>c<k>
  std::vector<std::string> display;  // structure name with a/b suffix, or id
};

namespace impl {

inline ClassLabels make_labels(const SubgroupLattice& lat, const std::vector<std::size_t>& reps) {
  ClassLabels out;
  std::map<std::size_t, std::size_t> per_order;
  std::vector<std::string> names;
  std::map<std::string, std::size_t> name_count;
  for (std::size_t rep : reps) {
    std::size_t ord = lat.order(rep);
    out.ids.push_back("o" + std::to_string(ord) + "c" + std::to_string(per_order[ord]++));
    names.push_back(structure_name(fingerprint(lat, rep)));
    if (!names.back().empty()) ++name_count[names.back()];
  }
  std::map<std::string, std::size_t> seen;
  for (std::size_t c = 0; c != reps.size(); ++c) {
    const std::string& nm = names[c];
    if (nm.empty())
      out.display.push_back(out.ids[c]);
    else if (name_count[nm] == 1)
      out.display.push_back(nm);
    else
      out.display.push_back(nm + std::string(1, static_cast<char>('a' + seen[nm]++)));
  }
  return out;
}

} // namespace impl

// Labels for the G-conjugacy classes of subgroups.
inline ClassLabels class_labels(const SubgroupLattice& lat) {
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c != lat.num_classes(); ++c) reps.push_back(lat.class_rep(c));
  return impl::make_labels(lat, reps);
}

// Labels for the H-conjugacy classes of subgroups of one level H.
inline ClassLabels level_labels(const SubgroupLattice& lat, std::size_t level) {
  return impl::make_labels(lat, lat.level(level).class_reps);
}

// Resolves a display label or canonical id to a class index.
inline std::optional<std::size_t> find_class(const ClassLabels& labels, const std::string& name) {
  for (std::size_t c = 0; c != labels.ids.size(); ++c)
    if (labels.display[c] == name || labels.ids[c] == name) return c;
  return std::nullopt;
}

} // namespace btspec

#endif
