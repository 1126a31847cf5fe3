// Machine check of the ghost Tambara functor axioms and of the mark map
// being a morphism from the Burnside Tambara functor, over all subgroup
// chains (up to conjugacy) and a fixed set of test elements per level.

#ifndef BTSPEC_VERIFY_HPP_
#define BTSPEC_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ghost.hpp"
#include "gset.hpp"

namespace btspec {

inline constexpr std::uint64_t default_seed = 0x5EED;

struct VerifyConfig {
  std::uint64_t seed = default_seed;
  std::size_t random_per_level = 32;
  int random_min = -9;
  int random_max = 9;
  std::size_t coinduce_cap = default_coinduce_cap;
  // Axiom names or family names to run; empty runs everything.
  std::vector<std::string> axioms;
};

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

// One axiom at one choice of subgroups (lattice indices) and element,
// aggregated over all test elements.
struct AxiomInstance {
  std::string axiom;
  std::optional<std::size_t> h, l, k;
  std::optional<ElementId> g;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // operands and both sides of the first failure
};

struct VerificationReport {
  std::string group;
  std::vector<AxiomInstance> instances;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        instances.begin(), instances.end(), [&](const AxiomInstance& i) { return i.status == s; }));
  }
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
  std::vector<const AxiomInstance*> failures() const {
    std::vector<const AxiomInstance*> out;
    for (const auto& i : instances)
      if (i.status == CheckStatus::fail) out.push_back(&i);
    return out;
  }
};

struct AxiomInfo {
  const char* name;
  const char* family;
};

inline const std::vector<AxiomInfo>& axiom_catalog() {
  static const std::vector<AxiomInfo> list = {
      {"res_functorial", "functoriality"},
      {"tr_functorial", "functoriality"},
      {"nm_functorial", "functoriality"},
      {"conj_functorial", "functoriality"},
      {"conj_res", "conjugacy"},
      {"conj_tr", "conjugacy"},
      {"conj_nm", "conjugacy"},
      {"additive_double_coset", "double_coset"},
      {"multiplicative_double_coset", "double_coset"},
      {"frobenius", "frobenius"},
      {"res_ring_hom", "homomorphism"},
      {"conj_ring_hom", "homomorphism"},
      {"tr_additive", "homomorphism"},
      {"nm_multiplicative", "homomorphism"},
      {"class_constancy", "well_defined"},
      {"chi_res", "naturality"},
      {"chi_tr", "naturality"},
      {"chi_conj", "naturality"},
      {"chi_nm", "naturality"},
      {"tambara_sum", "tambara"},
      {"tambara_transfer", "tambara"},
  };
  return list;
}

// Throws usage_error for a name that is neither an axiom nor a family.
inline std::set<std::string> resolve_axioms(const std::vector<std::string>& names) {
  std::set<std::string> out;
  if (names.empty()) {
    for (const auto& a : axiom_catalog()) out.insert(a.name);
    return out;
  }
  for (const auto& n : names) {
    bool hit = false;
    for (const auto& a : axiom_catalog())
      if (n == a.name || n == a.family) {
        out.insert(a.name);
        hit = true;
      }
    if (!hit) throw usage_error("unknown axiom or axiom family '" + n + "'");
  }
  return out;
}

namespace impl {

inline std::string vec_string(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i != v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

inline std::string mismatch(const std::vector<std::pair<std::string, const GhostElement*>>& operands,
                            const GhostElement& lhs, const GhostElement& rhs) {
  std::string s;
  for (const auto& [name, v] : operands)
    s += name + "@" + std::to_string(v->level) + "=" + vec_string(v->values) + " ";
  return s + "lhs@" + std::to_string(lhs.level) + "=" + vec_string(lhs.values) + " rhs@" +
         std::to_string(rhs.level) + "=" + vec_string(rhs.values);
}

class AxiomChecker {
public:
  AxiomChecker(const TambaraLevelSystem& t, const VerifyConfig& cfg)
    : t_(t), lat_(t.lattice()), cfg_(cfg), enabled_(resolve_axioms(cfg.axioms)),
      tests_(lat_.size()) {}

  VerificationReport run() {
    report_.group = lat_.group().spec().text;
    const FiniteGroup& g = lat_.group();
    for (std::size_t kc = 0; kc != lat_.num_classes(); ++kc) {
      const std::size_t k = lat_.class_rep(kc);
      const Level& lk = lat_.level(k);
      ring_checks(k);
      for (ElementId x = 0; x != g.order(); ++x)
        for (ElementId y = 0; y != g.order(); ++y) conj_functorial(x, y, k);
      for (ElementId x = 0; x != g.order(); ++x) chi_conj(x, k);
      for (std::size_t h : lk.class_reps) {
        pair_checks(k, h);
        for (ElementId x = 0; x != g.order(); ++x) conjugacy(x, k, h);
        for (std::size_t l : lat_.level(h).class_reps) chain_checks(k, h, l);
      }
      // Every H, not just level representatives: the transfer is only ever
      // evaluated at representatives, so a transfer that is wrong off them
      // shows up here.
      for (std::size_t h : lk.subgroups)
        for (std::size_t l : lk.class_reps) double_coset(k, h, l);
    }
    return std::move(report_);
  }

private:
  const std::vector<GhostElement>& tests(std::size_t h) {
    if (!tests_[h]) {
      const BurnsideRings& r = t_.rings();
      std::vector<GhostElement> v;
      for (std::size_t c = 0; c != r.rank(h); ++c) v.push_back(r.marks(r.basis(h, c)));
      v.push_back(r.ghost_one(h));
      std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed), static_cast<std::uint32_t>(cfg_.seed >> 32),
                        static_cast<std::uint32_t>(h)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<int> d(cfg_.random_min, cfg_.random_max);
      for (std::size_t i = 0; i != cfg_.random_per_level; ++i) {
        GhostElement a = r.ghost_zero(h);
        for (auto& x : a.values) x = d(rng);
        v.push_back(std::move(a));
      }
      tests_[h] = std::move(v);
    }
    return *tests_[h];
  }

  bool on(const char* axiom) const { return enabled_.count(axiom) != 0; }

  // `body` returns the witness of the first failure, or nullopt.
  template <class F>
  void check(const char* axiom, std::optional<std::size_t> h, std::optional<std::size_t> l,
             std::optional<std::size_t> k, std::optional<ElementId> g, F&& body) {
    if (!on(axiom)) return;
    AxiomInstance inst{axiom, h, l, k, g, CheckStatus::pass, {}};
    try {
      if (auto w = body()) {
        inst.status = CheckStatus::fail;
        inst.witness = *w;
      }
    } catch (const cap_exceeded& e) {
      inst.status = CheckStatus::skip;
      inst.witness = e.what();
    } catch (const error& e) {
      inst.status = CheckStatus::fail;
      inst.witness = std::string("exception: ") + e.what();
    }
    report_.instances.push_back(std::move(inst));
  }

  // Level-K ring structure: res to K itself, ring maps and conjugation.
  void ring_checks(std::size_t k) {
    const auto& tk = tests(k);
    for (std::size_t h : lat_.level(k).class_reps) {
      check("res_ring_hom", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i != tk.size(); ++i) {
          const GhostElement& a = tk[i];
          const GhostElement& b = tk[(i + 1) % tk.size()];
          GhostElement l1 = t_.res(k, h, a * b), r1 = t_.res(k, h, a) * t_.res(k, h, b);
          if (l1 != r1) return mismatch({{"a", &a}, {"b", &b}}, l1, r1);
          GhostElement l2 = t_.res(k, h, a + b), r2 = t_.res(k, h, a) + t_.res(k, h, b);
          if (l2 != r2) return mismatch({{"a", &a}, {"b", &b}}, l2, r2);
        }
        GhostElement one = t_.res(k, h, t_.rings().ghost_one(k));
        if (one != t_.rings().ghost_one(h)) return "res(1) = " + vec_string(one.values);
        return std::nullopt;
      });
    }
  }

  void conj_functorial(ElementId x, ElementId y, std::size_t k) {
    const FiniteGroup& g = lat_.group();
    check("conj_functorial", k, std::nullopt, std::nullopt, x,
          [&]() -> std::optional<std::string> {
            const std::size_t yk = lat_.conjugate(k, y);
            for (const GhostElement& a : tests(k)) {
              GhostElement lhs = t_.conj(x, yk, t_.conj(y, k, a));
              GhostElement rhs = t_.conj(g.mul(x, y), k, a);
              if (lhs != rhs)
                return "h=" + std::to_string(y) + " " + mismatch({{"a", &a}}, lhs, rhs);
            }
            return std::nullopt;
          });
  }

  void chi_conj(ElementId x, std::size_t k) {
    if (on("conj_ring_hom"))
      check("conj_ring_hom", k, std::nullopt, std::nullopt, x, [&]() -> std::optional<std::string> {
        const auto& tk = tests(k);
        for (std::size_t i = 0; i != tk.size(); ++i) {
          const GhostElement& a = tk[i];
          const GhostElement& b = tk[(i + 1) % tk.size()];
          GhostElement l1 = t_.conj(x, k, a * b), r1 = t_.conj(x, k, a) * t_.conj(x, k, b);
          if (l1 != r1) return mismatch({{"a", &a}, {"b", &b}}, l1, r1);
          GhostElement l2 = t_.conj(x, k, a + b), r2 = t_.conj(x, k, a) + t_.conj(x, k, b);
          if (l2 != r2) return mismatch({{"a", &a}, {"b", &b}}, l2, r2);
        }
        return std::nullopt;
      });
    check("chi_conj", k, std::nullopt, std::nullopt, x, [&]() -> std::optional<std::string> {
      const Level& lk = lat_.level(k);
      for (std::size_t c = 0; c != lk.num_classes(); ++c) {
        GhostElement lhs = t_.conj(x, k, t_.chi(t_.rings().basis(k, c)));
        GhostElement rhs = t_.rings().marks_of_gset(conjugate_gset(x, coset_space(lat_, k, lk.class_reps[c])));
        if (lhs != rhs) return "basis " + std::to_string(c) + " " + mismatch({}, lhs, rhs);
      }
      return std::nullopt;
    });
  }

  // Checks involving one pair H <= K.
  void pair_checks(std::size_t k, std::size_t h) {
    const auto& tk = tests(k);
    const auto& th = tests(h);
    check("frobenius", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
      for (const GhostElement& x : tk)
        for (const GhostElement& y : th) {
          GhostElement lhs = t_.tr(k, h, t_.res(k, h, x) * y);
          GhostElement rhs = x * t_.tr(k, h, y);
          if (lhs != rhs) return mismatch({{"x", &x}, {"y", &y}}, lhs, rhs);
        }
      return std::nullopt;
    });
    check("tr_additive", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i != th.size(); ++i) {
        const GhostElement& a = th[i];
        const GhostElement& b = th[(i + 1) % th.size()];
        GhostElement lhs = t_.tr(k, h, a + b), rhs = t_.tr(k, h, a) + t_.tr(k, h, b);
        if (lhs != rhs) return mismatch({{"a", &a}, {"b", &b}}, lhs, rhs);
      }
      GhostElement z = t_.tr(k, h, t_.rings().ghost_zero(h));
      if (z != t_.rings().ghost_zero(k)) return "tr(0) = " + vec_string(z.values);
      return std::nullopt;
    });
    check("nm_multiplicative", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i != th.size(); ++i) {
        const GhostElement& a = th[i];
        const GhostElement& b = th[(i + 1) % th.size()];
        GhostElement lhs = t_.nm(k, h, a * b), rhs = t_.nm(k, h, a) * t_.nm(k, h, b);
        if (lhs != rhs) return mismatch({{"a", &a}, {"b", &b}}, lhs, rhs);
      }
      GhostElement one = t_.nm(k, h, t_.rings().ghost_one(h));
      if (one != t_.rings().ghost_one(k)) return "nm(1) = " + vec_string(one.values);
      return std::nullopt;
    });
    check("class_constancy", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
      const Level& lk = lat_.level(k);
      const Level& lh = lat_.level(h);
      for (const GhostElement& a : th) {
        GhostElement tr = t_.tr(k, h, a), nm = t_.nm(k, h, a);
        for (std::size_t c = 0; c != lk.num_classes(); ++c)
          for (std::size_t i : lk.class_members[c]) {
            if (t_.tr_at(k, h, a, i) != tr.values[c])
              return "tr at subgroup " + std::to_string(i) + " " + mismatch({{"a", &a}}, tr, tr);
            if (t_.nm_at(k, h, a, i) != nm.values[c])
              return "nm at subgroup " + std::to_string(i) + " " + mismatch({{"a", &a}}, nm, nm);
          }
      }
      for (const GhostElement& b : tk) {
        GhostElement r = t_.res(k, h, b);
        for (std::size_t c = 0; c != lh.num_classes(); ++c)
          for (std::size_t i : lh.class_members[c])
            if (t_.res_at(k, h, b, i) != r.values[c])
              return "res at subgroup " + std::to_string(i) + " " + mismatch({{"b", &b}}, r, r);
      }
      return std::nullopt;
    });
    const BurnsideRings& r = t_.rings();
    check("chi_res", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
      const Level& lk = lat_.level(k);
      for (std::size_t c = 0; c != lk.num_classes(); ++c) {
        GhostElement lhs = t_.res(k, h, t_.chi(r.basis(k, c)));
        GhostElement rhs = r.marks_of_gset(restrict_gset(coset_space(lat_, k, lk.class_reps[c]), h));
        if (lhs != rhs) return "basis " + std::to_string(c) + " " + mismatch({}, lhs, rhs);
      }
      return std::nullopt;
    });
    check("chi_tr", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
      const Level& lh = lat_.level(h);
      for (std::size_t c = 0; c != lh.num_classes(); ++c) {
        GhostElement lhs = t_.tr(k, h, t_.chi(r.basis(h, c)));
        GhostElement rhs = r.marks_of_gset(induce(k, coset_space(lat_, h, lh.class_reps[c])));
        if (lhs != rhs) return "basis " + std::to_string(c) + " " + mismatch({}, lhs, rhs);
      }
      return std::nullopt;
    });
    const Level& lh = lat_.level(h);
    for (std::size_t c = 0; c != lh.num_classes(); ++c)
      check("chi_nm", h, lh.class_reps[c], k, std::nullopt, [&]() -> std::optional<std::string> {
        GhostElement lhs = t_.nm(k, h, t_.chi(r.basis(h, c)));
        GhostElement rhs =
            r.marks_of_gset(coinduce(k, coset_space(lat_, h, lh.class_reps[c]), cfg_.coinduce_cap));
        if (lhs != rhs) return "basis " + std::to_string(c) + " " + mismatch({}, lhs, rhs);
        return std::nullopt;
      });
    check("tambara_sum", h, std::nullopt, k, std::nullopt, [&]() -> std::optional<std::string> {
      const std::size_t top = lat_.level(k).top_class();
      for (std::size_t i = 0; i != th.size(); ++i) {
        const GhostElement& a = th[i];
        const GhostElement& b = th[(i + 1) % th.size()];
        GhostElement d = t_.nm(k, h, a + b) - t_.nm(k, h, a) - t_.nm(k, h, b);
        if (d.values[top] != 0) return mismatch({{"a", &a}, {"b", &b}}, d, t_.rings().ghost_zero(k));
      }
      return std::nullopt;
    });
  }

  // c_g against res, tr and nm for H <= K.
  void conjugacy(ElementId x, std::size_t k, std::size_t h) {
    const std::size_t gk = lat_.conjugate(k, x), gh = lat_.conjugate(h, x);
    check("conj_res", h, std::nullopt, k, x, [&]() -> std::optional<std::string> {
      for (const GhostElement& b : tests(k)) {
        GhostElement lhs = t_.conj(x, h, t_.res(k, h, b));
        GhostElement rhs = t_.res(gk, gh, t_.conj(x, k, b));
        if (lhs != rhs) return mismatch({{"b", &b}}, lhs, rhs);
      }
      return std::nullopt;
    });
    check("conj_tr", h, std::nullopt, k, x, [&]() -> std::optional<std::string> {
      for (const GhostElement& a : tests(h)) {
        GhostElement lhs = t_.conj(x, k, t_.tr(k, h, a));
        GhostElement rhs = t_.tr(gk, gh, t_.conj(x, h, a));
        if (lhs != rhs) return mismatch({{"a", &a}}, lhs, rhs);
      }
      return std::nullopt;
    });
    check("conj_nm", h, std::nullopt, k, x, [&]() -> std::optional<std::string> {
      for (const GhostElement& a : tests(h)) {
        GhostElement lhs = t_.conj(x, k, t_.nm(k, h, a));
        GhostElement rhs = t_.nm(gk, gh, t_.conj(x, h, a));
        if (lhs != rhs) return mismatch({{"a", &a}}, lhs, rhs);
      }
      return std::nullopt;
    });
  }

  // Chains L <= H <= K.
  void chain_checks(std::size_t k, std::size_t h, std::size_t l) {
    check("res_functorial", h, l, k, std::nullopt, [&]() -> std::optional<std::string> {
      for (const GhostElement& b : tests(k)) {
        GhostElement lhs = t_.res(h, l, t_.res(k, h, b)), rhs = t_.res(k, l, b);
        if (lhs != rhs) return mismatch({{"b", &b}}, lhs, rhs);
      }
      return std::nullopt;
    });
    check("tr_functorial", h, l, k, std::nullopt, [&]() -> std::optional<std::string> {
      for (const GhostElement& a : tests(l)) {
        GhostElement lhs = t_.tr(k, h, t_.tr(h, l, a)), rhs = t_.tr(k, l, a);
        if (lhs != rhs) return mismatch({{"a", &a}}, lhs, rhs);
      }
      return std::nullopt;
    });
    check("nm_functorial", h, l, k, std::nullopt, [&]() -> std::optional<std::string> {
      for (const GhostElement& a : tests(l)) {
        GhostElement lhs = t_.nm(k, h, t_.nm(h, l, a)), rhs = t_.nm(k, l, a);
        if (lhs != rhs) return mismatch({{"a", &a}}, lhs, rhs);
      }
      return std::nullopt;
    });
    if (l != h)
      check("tambara_transfer", h, l, k, std::nullopt, [&]() -> std::optional<std::string> {
        const std::size_t top = lat_.level(k).top_class();
        for (const GhostElement& b : tests(l)) {
          GhostElement v = t_.nm(k, h, t_.tr(h, l, b));
          if (v.values[top] != 0) return mismatch({{"b", &b}}, v, t_.rings().ghost_zero(k));
        }
        return std::nullopt;
      });
  }

  // H, L <= K: res^K_L after tr^K_H (resp. nm^K_H) against the double coset sum
  // (resp. product).
  void double_coset(std::size_t k, std::size_t h, std::size_t l) {
    const auto reps = double_cosets(lat_, l, k, h);
    auto term = [&](ElementId y, const GhostElement& a, bool mult) {
      const std::size_t yh = lat_.conjugate(h, y);
      const std::size_t m = lat_.intersect(l, yh);
      GhostElement c = t_.res(yh, m, t_.conj(y, h, a));
      return mult ? t_.nm(l, m, c) : t_.tr(l, m, c);
    };
    check("additive_double_coset", h, l, k, std::nullopt, [&]() -> std::optional<std::string> {
      for (const GhostElement& a : tests(h)) {
        GhostElement lhs = t_.res(k, l, t_.tr(k, h, a));
        GhostElement rhs = t_.rings().ghost_zero(l);
        for (ElementId y : reps) rhs = rhs + term(y, a, false);
        if (lhs != rhs) return mismatch({{"a", &a}}, lhs, rhs);
      }
      return std::nullopt;
    });
    check("multiplicative_double_coset", h, l, k, std::nullopt,
          [&]() -> std::optional<std::string> {
            for (const GhostElement& a : tests(h)) {
              GhostElement lhs = t_.res(k, l, t_.nm(k, h, a));
              GhostElement rhs = t_.rings().ghost_one(l);
              for (ElementId y : reps) rhs = rhs * term(y, a, true);
              if (lhs != rhs) return mismatch({{"a", &a}}, lhs, rhs);
            }
            return std::nullopt;
          });
  }

  const TambaraLevelSystem& t_;
  const SubgroupLattice& lat_;
  VerifyConfig cfg_;
  std::set<std::string> enabled_;
  std::vector<std::optional<std::vector<GhostElement>>> tests_;
  VerificationReport report_;
};

} // namespace impl

inline VerificationReport verify_axioms(const TambaraLevelSystem& t, const VerifyConfig& cfg = {}) {
  return impl::AxiomChecker(t, cfg).run();
}

} // namespace btspec

#endif
