// Burnside rings A(H) in the orbit basis, ghost rings in mark coordinates,
// tables of marks and the mark homomorphism between them.

#ifndef BTSPEC_BURNSIDE_HPP_
#define BTSPEC_BURNSIDE_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "gset.hpp"
#include "lattice.hpp"

namespace btspec {

using Int = boost::multiprecision::cpp_int;

// Coefficients of the orbits [H/K] over the level-H classes of subgroups.
struct BurnsideElement {
  std::size_t level = 0;
  std::vector<Int> coeffs;
  bool operator==(const BurnsideElement&) const = default;
};

// One value per level-H class of subgroups.
struct GhostElement {
  std::size_t level = 0;
  std::vector<Int> values;
  bool operator==(const GhostElement&) const = default;
};

namespace impl {

inline void add_into(std::vector<Int>& a, const std::vector<Int>& b, int sign) {
  for (std::size_t i = 0; i != a.size(); ++i) {
    if (sign > 0) a[i] += b[i];
    else a[i] -= b[i];
  }
}

} // namespace impl

inline void check_same_level(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.level != b.level || a.coeffs.size() != b.coeffs.size())
    throw level_mismatch("Burnside elements live at different levels");
}
inline void check_same_level(const GhostElement& a, const GhostElement& b) {
  if (a.level != b.level || a.values.size() != b.values.size())
    throw level_mismatch("ghost elements live at different levels");
}

inline BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) {
  check_same_level(a, b);
  impl::add_into(a.coeffs, b.coeffs, 1);
  return a;
}
inline BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) {
  check_same_level(a, b);
  impl::add_into(a.coeffs, b.coeffs, -1);
  return a;
}
inline BurnsideElement operator*(const Int& n, BurnsideElement a) {
  for (auto& c : a.coeffs) c *= n;
  return a;
}

inline GhostElement operator+(GhostElement a, const GhostElement& b) {
  check_same_level(a, b);
  impl::add_into(a.values, b.values, 1);
  return a;
}
inline GhostElement operator-(GhostElement a, const GhostElement& b) {
  check_same_level(a, b);
  impl::add_into(a.values, b.values, -1);
  return a;
}
inline GhostElement operator*(GhostElement a, const GhostElement& b) {
  check_same_level(a, b);
  for (std::size_t i = 0; i != a.values.size(); ++i) a.values[i] *= b.values[i];
  return a;
}
inline GhostElement operator*(const Int& n, GhostElement a) {
  for (auto& v : a.values) v *= n;
  return a;
}

// entry[K][I] = |(H/K)^I| over level classes; zero unless I is subconjugate
// to K in H, so lower triangular in class order.
struct MarksTable {
  std::size_t level = 0;
  std::vector<std::vector<std::int64_t>> matrix;

  std::size_t size() const { return matrix.size(); }
  bool is_triangular() const {
    for (std::size_t k = 0; k != size(); ++k)
      for (std::size_t i = k + 1; i != size(); ++i)
        if (matrix[k][i] != 0) return false;
    return true;
  }
  bool has_positive_diagonal() const {
    for (std::size_t k = 0; k != size(); ++k)
      if (matrix[k][k] <= 0) return false;
    return true;
  }
  Int determinant() const {
    if (!is_triangular())
      throw error("determinant of a non-triangular marks table is not implemented");
    Int d = 1;
    for (std::size_t k = 0; k != size(); ++k) d *= matrix[k][k];
    return d;
  }
};

inline MarksTable compute_marks_table(const SubgroupLattice& lat, std::size_t h) {
  const Level& lv = lat.level(h);
  MarksTable t;
  t.level = h;
  t.matrix.assign(lv.num_classes(), std::vector<std::int64_t>(lv.num_classes(), 0));
  for (std::size_t k = 0; k != lv.num_classes(); ++k) {
    const GSet x = coset_space(lat, h, lv.class_reps[k]);
    for (std::size_t i = 0; i != lv.num_classes(); ++i)
      t.matrix[k][i] = static_cast<std::int64_t>(fixed_points(x, lv.class_reps[i]));
  }
  return t;
}

// The value left over when unmarking a ghost vector that is not a mark vector.
struct NotInImage {
  std::size_t level = 0;
  std::size_t coordinate = 0;  // level class whose orbit coefficient is fractional
  Int numerator;
  Int denominator;
  std::string describe() const {
    return "not in the image of the mark map: coefficient of class " +
           std::to_string(coordinate) + " would be " + numerator.str() + "/" +
           denominator.str();
  }
};

// Burnside and ghost rings at every level of one lattice, with tables of
// marks computed once per level on first use.
class BurnsideRings {
public:
  explicit BurnsideRings(const SubgroupLattice& lat)
    : lat_(&lat), tables_(lat.size()), once_(std::make_unique<std::once_flag[]>(lat.size())) {}

  const SubgroupLattice& lattice() const { return *lat_; }

  const MarksTable& marks_table(std::size_t h) const {
    std::call_once(once_[h], [&] {
      tables_[h] = std::make_unique<MarksTable>(compute_marks_table(*lat_, h));
    });
    return *tables_[h];
  }

  std::size_t rank(std::size_t h) const { return lat_->level(h).num_classes(); }

  BurnsideElement zero(std::size_t h) const { return {h, std::vector<Int>(rank(h), 0)}; }
  BurnsideElement basis(std::size_t h, std::size_t cls) const {
    BurnsideElement x = zero(h);
    x.coeffs.at(cls) = 1;
    return x;
  }
  // [H/H]
  BurnsideElement one(std::size_t h) const { return basis(h, rank(h) - 1); }

  GhostElement ghost_zero(std::size_t h) const { return {h, std::vector<Int>(rank(h), 0)}; }
  GhostElement ghost_one(std::size_t h) const { return {h, std::vector<Int>(rank(h), 1)}; }

  GhostElement marks(const BurnsideElement& x) const {
    const MarksTable& t = marks_table(x.level);
    check_rank(x.level, x.coeffs.size());
    GhostElement v = ghost_zero(x.level);
    for (std::size_t k = 0; k != t.size(); ++k) {
      if (x.coeffs[k] == 0) continue;
      for (std::size_t i = 0; i <= k; ++i)
        if (t.matrix[k][i] != 0) v.values[i] += x.coeffs[k] * t.matrix[k][i];
    }
    return v;
  }

  // Back-substitution from the top class down.
  std::variant<BurnsideElement, NotInImage> unmark(const GhostElement& v) const {
    const MarksTable& t = marks_table(v.level);
    check_rank(v.level, v.values.size());
    BurnsideElement x = zero(v.level);
    for (std::size_t i = t.size(); i-- > 0;) {
      Int rest = v.values[i];
      for (std::size_t k = i + 1; k != t.size(); ++k)
        if (t.matrix[k][i] != 0) rest -= x.coeffs[k] * t.matrix[k][i];
      const Int d = t.matrix[i][i];
      if (rest % d != 0) {
        NotInImage n{v.level, i, rest, d};
        return n;
      }
      x.coeffs[i] = rest / d;
    }
    return x;
  }

  BurnsideElement unmark_or_throw(const GhostElement& v) const {
    auto r = unmark(v);
    if (auto* n = std::get_if<NotInImage>(&r)) throw error(n->describe());
    return std::get<BurnsideElement>(std::move(r));
  }

  bool in_image(const GhostElement& v) const {
    return std::holds_alternative<BurnsideElement>(unmark(v));
  }

  // [H/K][H/L] = sum over K g L in H of [H/(K n gLg^-1)].
  BurnsideElement basis_product(std::size_t h, std::size_t kc, std::size_t lc) const {
    const Level& lv = lat_->level(h);
    const std::size_t k = lv.class_reps.at(kc), l = lv.class_reps.at(lc);
    BurnsideElement out = zero(h);
    for (ElementId g : double_cosets(*lat_, k, h, l))
      out.coeffs[lv.class_index(lat_->intersect(k, lat_->conjugate(l, g)))] += 1;
    return out;
  }

  BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) const {
    check_same_level(x, y);
    check_rank(x.level, x.coeffs.size());
    BurnsideElement out = zero(x.level);
    for (std::size_t a = 0; a != x.coeffs.size(); ++a) {
      if (x.coeffs[a] == 0) continue;
      for (std::size_t b = 0; b != y.coeffs.size(); ++b) {
        if (y.coeffs[b] == 0) continue;
        const BurnsideElement p = basis_product(x.level, a, b);
        const Int c = x.coeffs[a] * y.coeffs[b];
        for (std::size_t i = 0; i != p.coeffs.size(); ++i)
          if (p.coeffs[i] != 0) out.coeffs[i] += c * p.coeffs[i];
      }
    }
    return out;
  }

  // res^K_H [K/J] = sum over H g J in K of [H/(H n gJg^-1)].
  BurnsideElement res(std::size_t k, std::size_t h, const BurnsideElement& x) const {
    lat_->require_contains(k, h, "burnside res");
    check_level(x.level, k, x.coeffs.size());
    const Level& lk = lat_->level(k);
    const Level& lh = lat_->level(h);
    BurnsideElement out = zero(h);
    for (std::size_t j = 0; j != x.coeffs.size(); ++j) {
      if (x.coeffs[j] == 0) continue;
      for (ElementId g : double_cosets(*lat_, h, k, lk.class_reps[j]))
        out.coeffs[lh.class_index(lat_->intersect(h, lat_->conjugate(lk.class_reps[j], g)))] +=
            x.coeffs[j];
    }
    return out;
  }

  // tr^K_H [H/J] = [K/J].
  BurnsideElement tr(std::size_t k, std::size_t h, const BurnsideElement& x) const {
    lat_->require_contains(k, h, "burnside tr");
    check_level(x.level, h, x.coeffs.size());
    const Level& lk = lat_->level(k);
    const Level& lh = lat_->level(h);
    BurnsideElement out = zero(k);
    for (std::size_t j = 0; j != x.coeffs.size(); ++j)
      out.coeffs[lk.class_index(lh.class_reps[j])] += x.coeffs[j];
    return out;
  }

  // c_g [H/J] = [gHg^-1 / gJg^-1].
  BurnsideElement conj(ElementId g, std::size_t h, const BurnsideElement& x) const {
    check_level(x.level, h, x.coeffs.size());
    const std::size_t target = lat_->conjugate(h, g);
    const Level& lt = lat_->level(target);
    const Level& lh = lat_->level(h);
    BurnsideElement out = zero(target);
    for (std::size_t j = 0; j != x.coeffs.size(); ++j)
      out.coeffs[lt.class_index(lat_->conjugate(lh.class_reps[j], g))] += x.coeffs[j];
    return out;
  }

  // The virtual G-set as an honest one, when all coefficients are >= 0.
  GSet realize_gset(const BurnsideElement& x) const {
    GSet out = empty_gset(*lat_, x.level);
    const Level& lv = lat_->level(x.level);
    for (std::size_t k = 0; k != x.coeffs.size(); ++k) {
      if (x.coeffs[k] < 0) throw error("cannot realize a virtual G-set with negative coefficients");
      const GSet orbit = coset_space(*lat_, x.level, lv.class_reps[k]);
      for (Int c = 0; c < x.coeffs[k]; ++c) out = disjoint_union(out, orbit);
    }
    return out;
  }

  BurnsideElement from_gset(const GSet& x) const {
    BurnsideElement out = zero(x.acting());
    for (const OrbitType& o : orbit_decompose(x)) out.coeffs[o.level_class] += o.multiplicity;
    return out;
  }

  GhostElement marks_of_gset(const GSet& x) const {
    const Level& lv = lat_->level(x.acting());
    GhostElement v = ghost_zero(x.acting());
    for (std::size_t i = 0; i != lv.num_classes(); ++i)
      v.values[i] = fixed_points(x, lv.class_reps[i]);
    return v;
  }

private:
  void check_rank(std::size_t h, std::size_t n) const {
    if (n != rank(h))
      throw level_mismatch("vector of length " + std::to_string(n) + " at a level with " +
                           std::to_string(rank(h)) + " classes");
  }
  void check_level(std::size_t got, std::size_t want, std::size_t n) const {
    if (got != want)
      throw level_mismatch("element lives at level " + std::to_string(got) + ", expected " +
                           std::to_string(want));
    check_rank(want, n);
  }

  const SubgroupLattice* lat_;
  mutable std::vector<std::unique_ptr<MarksTable>> tables_;
  mutable std::unique_ptr<std::once_flag[]> once_;
};

} // namespace btspec

#endif
