// Finite permutation groups with a fully enumerated multiplication table.

#ifndef BTSPEC_GROUP_HPP_
#define BTSPEC_GROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "group_spec.hpp"
#include "permutation.hpp"

namespace btspec {

inline constexpr std::size_t default_max_order = 2000;

class FiniteGroup {
public:
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  ElementId identity() const { return 0; }

  const Permutation& element(ElementId i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  // Sorted, identity-free generators and their element indices.
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const GroupSpec& spec() const { return spec_; }

  ElementId mul(ElementId a, ElementId b) const { return table_[a * order() + b]; }
  ElementId inv(ElementId a) const { return inv_[a]; }
  // g x g^-1
  ElementId conj(ElementId g, ElementId x) const { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(ElementId a) const { return order_of_[a]; }

  std::size_t index_of(const Permutation& p) const {
    auto it = index_.find(p.images());
    if (it == index_.end())
      throw error("permutation " + p.cycle_string() + " is not in the group");
    return it->second;
  }

  bool is_abelian() const {
    for (ElementId a : generator_ids_)
      for (ElementId b : generator_ids_)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  friend FiniteGroup realize(const GroupSpec& spec, std::size_t max_order);

private:
  struct VecHash {
    std::size_t operator()(const std::vector<Permutation::point>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (auto x : v) h = (h ^ x) * 1099511628211ull;
      return h;
    }
  };

  GroupSpec spec_;
  std::size_t degree_ = 1;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inv_;
  std::vector<std::size_t> order_of_;
  std::unordered_map<std::vector<Permutation::point>, std::size_t, VecHash> index_;
};

// Breadth-first closure over the sorted generators: element 0 is the
// identity and each new element is an earlier element times a generator.
inline FiniteGroup realize(const GroupSpec& spec, std::size_t max_order = default_max_order) {
  if (max_order < 1)
    throw usage_error("max_order must be at least 1");
  FiniteGroup g;
  g.spec_ = spec;
  std::vector<Permutation> gens = spec_generators(spec);
  std::size_t degree = 1;
  for (const auto& p : gens)
    degree = std::max(degree, p.degree());
  for (auto& p : gens)
    p = p.extended(degree);
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  g.degree_ = degree;
  g.generators_ = gens;

  const std::size_t ngen = gens.size();
  std::vector<std::size_t> parent{0}, via{0};
  std::vector<std::size_t> right;  // right[x * ngen + s] = index of x * gen_s
  g.elements_.push_back(Permutation::identity(degree));
  g.index_.emplace(g.elements_[0].images(), 0);
  for (std::size_t x = 0; x < g.elements_.size(); ++x) {
    for (std::size_t s = 0; s != ngen; ++s) {
      Permutation y = g.elements_[x] * gens[s];
      auto [it, inserted] = g.index_.emplace(y.images(), g.elements_.size());
      if (inserted) {
        if (g.elements_.size() + 1 > max_order)
          throw order_exceeded("group " + spec.text + " has order exceeding " +
                               std::to_string(max_order));
        g.elements_.push_back(std::move(y));
        parent.push_back(x);
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = g.elements_.size();
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a != n; ++a) {
    ElementId* row = &g.table_[a * n];
    row[0] = static_cast<ElementId>(a);
    for (std::size_t b = 1; b != n; ++b)
      row[b] = static_cast<ElementId>(right[row[parent[b]] * ngen + via[b]]);
  }
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a != n; ++a)
    g.inv_[a] = static_cast<ElementId>(g.index_.at(g.elements_[a].inverse().images()));
  g.order_of_.assign(n, 1);
  for (std::size_t a = 0; a != n; ++a) {
    ElementId x = static_cast<ElementId>(a);
    std::size_t k = 1;
    while (x != 0) {
      x = g.mul(x, static_cast<ElementId>(a));
      ++k;
    }
    g.order_of_[a] = k;
  }
  for (const auto& p : gens)
    g.generator_ids_.push_back(static_cast<ElementId>(g.index_.at(p.images())));
  return g;
}

} // namespace btspec

#endif
