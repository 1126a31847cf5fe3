// The ghost Tambara functor: levels are ghost rings, structure maps are
// componentwise formulas in mark coordinates, and the mark map is a
// morphism into it from the Burnside Tambara functor.

#ifndef BTSPEC_GHOST_HPP_
#define BTSPEC_GHOST_HPP_

#include <vector>

#include "burnside.hpp"
#include "lattice.hpp"

namespace btspec {

struct GhostOptions {
  // Fault injection for tests: evaluate transfers at k I k^-1 instead of
  // k^-1 I k. Never set outside tests.
  bool left_conjugate_transfer = false;
};

class TambaraLevelSystem {
public:
  explicit TambaraLevelSystem(const SubgroupLattice& lat, GhostOptions opt = {})
    : lat_(&lat), rings_(lat), opt_(opt) {}

  const SubgroupLattice& lattice() const { return *lat_; }
  const BurnsideRings& rings() const { return rings_; }
  const GhostOptions& options() const { return opt_; }

  // Coordinate of `a` at an arbitrary subgroup of its level.
  const Int& at(const GhostElement& a, std::size_t sub) const {
    return a.values[lat_->level(a.level).class_index(sub)];
  }

  // Per-subgroup formulas. Each target coordinate is evaluated at any
  // subgroup of the target level, not only at class representatives, so
  // class-constancy of the results can be checked.
  Int res_at(std::size_t k, std::size_t h, const GhostElement& b, std::size_t l) const {
    lat_->require_contains(h, l, "ghost res");
    (void)k;
    return at(b, l);
  }

  Int tr_at(std::size_t k, std::size_t h, const GhostElement& a, std::size_t i) const {
    lat_->require_contains(k, i, "ghost tr");
    Int s = 0;
    for (ElementId x : left_coset_reps(*lat_, k, h)) {
      std::size_t ix = opt_.left_conjugate_transfer ? lat_->conjugate(i, x)
                                                    : lat_->conjugate_right(i, x);
      if (lat_->contains(h, ix)) s += at(a, ix);
    }
    return s;
  }

  Int nm_at(std::size_t k, std::size_t h, const GhostElement& a, std::size_t i) const {
    lat_->require_contains(k, i, "ghost nm");
    Int p = 1;
    for (ElementId g : double_cosets(*lat_, i, k, h))
      p *= at(a, lat_->intersect(lat_->conjugate_right(i, g), h));
    return p;
  }

  Int conj_at(ElementId g, std::size_t h, const GhostElement& a, std::size_t j) const {
    (void)h;
    return at(a, lat_->conjugate_right(j, g));
  }

  GhostElement res(std::size_t k, std::size_t h, const GhostElement& b) const {
    lat_->require_contains(k, h, "ghost res");
    check_level(b, k);
    return build(h, [&](std::size_t l) { return res_at(k, h, b, l); });
  }

  GhostElement tr(std::size_t k, std::size_t h, const GhostElement& a) const {
    lat_->require_contains(k, h, "ghost tr");
    check_level(a, h);
    return build(k, [&](std::size_t i) { return tr_at(k, h, a, i); });
  }

  GhostElement nm(std::size_t k, std::size_t h, const GhostElement& a) const {
    lat_->require_contains(k, h, "ghost nm");
    check_level(a, h);
    return build(k, [&](std::size_t i) { return nm_at(k, h, a, i); });
  }

  GhostElement conj(ElementId g, std::size_t h, const GhostElement& a) const {
    check_level(a, h);
    return build(lat_->conjugate(h, g), [&](std::size_t j) { return conj_at(g, h, a, j); });
  }

  GhostElement chi(const BurnsideElement& x) const { return rings_.marks(x); }

  // Norm of a possibly virtual Burnside element, computed through the ghost.
  BurnsideElement burnside_nm(std::size_t k, std::size_t h, const BurnsideElement& x) const {
    return rings_.unmark_or_throw(nm(k, h, chi(x)));
  }

  // Ghost vector at level h equal to 1 on every subgroup of the given level
  // classes and 0 elsewhere.
  GhostElement indicator(std::size_t h, const std::vector<std::size_t>& classes) const {
    GhostElement a = rings_.ghost_zero(h);
    for (std::size_t c : classes) a.values.at(c) = 1;
    return a;
  }

private:
  template <class F>
  GhostElement build(std::size_t level, F&& f) const {
    const Level& lv = lat_->level(level);
    GhostElement out{level, std::vector<Int>(lv.num_classes())};
    for (std::size_t c = 0; c != lv.num_classes(); ++c) out.values[c] = f(lv.class_reps[c]);
    return out;
  }

  void check_level(const GhostElement& a, std::size_t h) const {
    if (a.level != h || a.values.size() != rings_.rank(h))
      throw level_mismatch("ghost element lives at level " + std::to_string(a.level) +
                           ", expected " + std::to_string(h));
  }

  const SubgroupLattice* lat_;
  BurnsideRings rings_;
  GhostOptions opt_;
};

inline GhostElement ghost_res(const TambaraLevelSystem& t, std::size_t k, std::size_t h,
                              const GhostElement& b) {
  return t.res(k, h, b);
}
inline GhostElement ghost_tr(const TambaraLevelSystem& t, std::size_t k, std::size_t h,
                             const GhostElement& a) {
  return t.tr(k, h, a);
}
inline GhostElement ghost_nm(const TambaraLevelSystem& t, std::size_t k, std::size_t h,
                             const GhostElement& a) {
  return t.nm(k, h, a);
}
inline GhostElement ghost_conj(const TambaraLevelSystem& t, ElementId g, std::size_t h,
                               const GhostElement& a) {
  return t.conj(g, h, a);
}
inline GhostElement ghost_map(const TambaraLevelSystem& t, const BurnsideElement& x) {
  return t.chi(x);
}
inline BurnsideElement burnside_nm(const TambaraLevelSystem& t, std::size_t k, std::size_t h,
                                   const BurnsideElement& x) {
  return t.burnside_nm(k, h, x);
}

} // namespace btspec

#endif
