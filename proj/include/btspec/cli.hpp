// Command-line front end. `run` parses arguments, dispatches one command and
// writes its output; the exit code is 0 on success, 1 on domain errors and
// 2 on usage errors.

#ifndef BTSPEC_CLI_HPP_
#define BTSPEC_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "btspec.hpp"
#include "cache.hpp"
#include "format.hpp"

namespace btspec::cli {

enum class Format { text, json, dot };

struct Config {
  std::size_t max_order = default_max_order;
  std::filesystem::path cache_dir = default_cache_dir();  // empty: no cache
  std::uint64_t seed = default_seed;
  std::size_t coinduce_cap = default_coinduce_cap;
  Format format = Format::text;
};

namespace impl {

inline std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    unsigned long long v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw usage_error(std::string("invalid ") + what + ": '" + s + "'");
  }
}

// "0", a prime, or GENERIC (any case).
inline PrimeKey parse_prime_key(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "GENERIC") return PrimeKey::generic_prime();
  return PrimeKey::of(parse_u64(s, "prime"));
}

inline std::vector<Int> parse_coeffs(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw usage_error("empty coefficient in --element");
    item = item.substr(a, b - a + 1);
    std::size_t i = item[0] == '-' || item[0] == '+' ? 1 : 0;
    if (i == item.size() || item.find_first_not_of("0123456789", i) != std::string::npos)
      throw usage_error("invalid coefficient '" + item + "' in --element");
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  if (!s.empty() && s.back() == ',') throw usage_error("empty coefficient in --element");
  if (out.empty()) throw usage_error("--element needs at least one coefficient");
  return out;
}

inline std::size_t resolve_class(const SubgroupLattice& lat, const std::string& name) {
  if (auto c = find_class(class_labels(lat), name)) return *c;
  throw usage_error("no subgroup class labelled '" + name + "' (see the subgroups command)");
}

struct Session {
  Config cfg;
  std::ostream& out;
  std::ostream& err;
  std::shared_ptr<const SubgroupLattice> lat;

  const SubgroupLattice& load(const std::string& spec_text) {
    auto g = std::make_shared<const FiniteGroup>(realize(parse_group_spec(spec_text), cfg.max_order));
    lat = std::make_shared<const SubgroupLattice>(load_or_compute(g, cfg.cache_dir, err));
    return *lat;
  }

  void emit_json(const ojson& j) { out << j.dump(2) << "\n"; }

  void require_format(std::initializer_list<Format> allowed, const char* cmd) {
    for (Format f : allowed)
      if (f == cfg.format) return;
    throw usage_error(std::string("format not supported by ") + cmd);
  }
};

// Computes both spectra and checks their node sets agree.
inline std::pair<SpectrumPoset, SpectrumPoset> both_spectra(const SubgroupLattice& lat,
                                                            const std::vector<std::uint64_t>& extra) {
  SpectrumPoset t = enumerate_spectrum(lat, extra);
  SpectrumPoset r = burnside_ring_spectrum(lat, extra);
  if (!same_node_set(t, r))
    throw error("internal error: spectrum and ring spectrum node sets differ");
  return {std::move(t), std::move(r)};
}

} // namespace impl

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime ideal spectra of Burnside Tambara functors of finite groups", "btspec"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "text", seed = std::to_string(cfg.seed), cache_dir;
  bool no_cache = false;
  app.add_option("--max-order", cfg.max_order, "largest group order to realize")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "lattice cache directory (default: $BTSPEC_CACHE)");
  app.add_flag("--no-cache", no_cache, "do not read or write the lattice cache");
  app.add_option("--seed", seed, "random seed for verify (default 0x5EED)");
  app.add_option("--coinduce-cap", cfg.coinduce_cap, "largest coinduced G-set to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));

  std::string spec, level, ideal, element, prime, axioms;

  auto* c_sub = app.add_subcommand("subgroups", "list conjugacy classes of subgroups");
  c_sub->add_option("spec", spec, "group spec")->required();

  auto* c_marks = app.add_subcommand("marks", "table of marks at one level");
  c_marks->add_option("spec", spec, "group spec")->required();
  c_marks->add_option("--level", level, "subgroup class label (default: the whole group)");

  auto* c_res = app.add_subcommand("residual", "O^p of every subgroup class");
  c_res->add_option("spec", spec, "group spec")->required();
  c_res->add_option("--prime", prime, "a prime p")->required();

  auto* c_spec = app.add_subcommand("spec", "prime ideal spectrum of the Burnside Tambara functor");
  c_spec->add_option("spec", spec, "group spec")->required();
  c_spec->add_option("--prime", prime, "also materialize the fiber over this prime");

  auto* c_ring = app.add_subcommand("ring-spec", "prime ideal spectrum of the Burnside ring");
  c_ring->add_option("spec", spec, "group spec")->required();

  auto* c_fib = app.add_subcommand("fibers", "one fiber of the spectrum");
  c_fib->add_option("spec", spec, "group spec")->required();
  c_fib->add_option("--prime", prime, "0, a prime, or GENERIC")->required();

  auto* c_ver = app.add_subcommand("verify", "check the Tambara functor axioms");
  c_ver->add_option("spec", spec, "group spec")->required();
  c_ver->add_option("--axioms", axioms, "comma-separated axiom or family names");

  auto* c_mem = app.add_subcommand("member", "ideal membership of a Burnside ring element");
  c_mem->add_option("spec", spec, "group spec")->required();
  c_mem->add_option("--ideal", ideal, "H,p with H a class label and p 0, a prime or GENERIC")
      ->required();
  c_mem->add_option("--level", level, "level class label")->required();
  c_mem->add_option("--element", element,
                    "comma-separated orbit coefficients in level class order (see marks --level)")
      ->required();

  std::vector<const char*> argv{"btspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help and version requests are successful exits.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    cfg.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;
    cfg.seed = impl::parse_u64(seed, "seed");
    if (no_cache)
      cfg.cache_dir.clear();
    else if (!cache_dir.empty())
      cfg.cache_dir = cache_dir;

    impl::Session s{cfg, out, err, nullptr};
    const bool json = cfg.format == Format::json, dot = cfg.format == Format::dot;

    if (c_sub->parsed()) {
      s.require_format({Format::text, Format::json}, "subgroups");
      const auto& lat = s.load(spec);
      if (json) s.emit_json(subgroups_json(lat));
      else out << subgroups_text(lat);
    } else if (c_marks->parsed()) {
      s.require_format({Format::text, Format::json}, "marks");
      const auto& lat = s.load(spec);
      const std::size_t cls = level.empty() ? lat.num_classes() - 1 : impl::resolve_class(lat, level);
      const std::string label = class_labels(lat).display[cls];
      BurnsideRings rings(lat);
      const MarksTable& t = rings.marks_table(lat.class_rep(cls));
      if (json) s.emit_json(marks_json(lat, t, label));
      else out << marks_text(lat, t, label);
    } else if (c_res->parsed()) {
      s.require_format({Format::text, Format::json}, "residual");
      const std::uint64_t p = impl::parse_u64(prime, "prime");
      if (!is_prime(p)) throw usage_error(prime + " is not a prime");
      const auto& lat = s.load(spec);
      if (json) s.emit_json(residual_json(lat, p));
      else out << residual_text(lat, p);
    } else if (c_spec->parsed() || c_ring->parsed()) {
      std::vector<std::uint64_t> extra;
      if (!prime.empty()) {
        PrimeKey k = impl::parse_prime_key(prime);
        if (k.kind == PrimeKey::prime) extra.push_back(k.p);
      }
      const auto& lat = s.load(spec);
      auto [tam, ring] = impl::both_spectra(lat, extra);
      const SpectrumPoset& sp = c_spec->parsed() ? tam : ring;
      if (json) s.emit_json(spectrum_json(lat, sp));
      else if (dot) out << spectrum_dot(lat, sp);
      else
        out << spectrum_text(lat, sp, c_spec->parsed() ? "Spectrum of the Burnside Tambara functor"
                                                       : "Spectrum of the Burnside ring");
    } else if (c_fib->parsed()) {
      PrimeKey k = impl::parse_prime_key(prime);
      const auto& lat = s.load(spec);
      std::vector<std::uint64_t> extra;
      if (k.kind == PrimeKey::prime) extra.push_back(k.p);
      SpectrumPoset sp = enumerate_spectrum(lat, extra);
      if (json) s.emit_json(fiber_json(lat, sp, k));
      else if (dot) out << fiber_dot(lat, sp, k);
      else out << fiber_text(lat, sp, k);
    } else if (c_ver->parsed()) {
      s.require_format({Format::text, Format::json}, "verify");
      VerifyConfig vc;
      vc.seed = cfg.seed;
      vc.coinduce_cap = cfg.coinduce_cap;
      std::stringstream ss(axioms);
      for (std::string a; std::getline(ss, a, ',');)
        if (!a.empty()) vc.axioms.push_back(a);
      resolve_axioms(vc.axioms);
      const auto& lat = s.load(spec);
      TambaraLevelSystem t(lat);
      VerificationReport r = verify_axioms(t, vc);
      if (json) s.emit_json(report_json(lat, r));
      else out << report_text(lat, r);
      if (!r.all_passed()) return 1;
    } else if (c_mem->parsed()) {
      s.require_format({Format::text, Format::json}, "member");
      const auto comma = ideal.rfind(',');
      if (comma == std::string::npos) throw usage_error("--ideal expects H,p");
      const std::vector<Int> coeffs = impl::parse_coeffs(element);
      const PrimeKey key = impl::parse_prime_key(ideal.substr(comma + 1));
      const auto& lat = s.load(spec);
      const ClassLabels labels = class_labels(lat);
      const std::size_t hc = impl::resolve_class(lat, ideal.substr(0, comma));
      const std::size_t lc = impl::resolve_class(lat, level);
      const std::size_t l = lat.class_rep(lc);
      if (coeffs.size() != lat.level(l).num_classes())
        throw usage_error("--element needs " + std::to_string(lat.level(l).num_classes()) +
                          " coefficients for level " + labels.display[lc]);
      BurnsideRings rings(lat);
      const BurnsideElement x{l, coeffs};
      const PrimeIdeal id = make_prime_ideal(lat, hc, key);
      const bool member = ideal_member(rings, id, x);
      const GhostElement m = rings.marks(x);
      const std::string name = "p_{" + labels.display[hc] + "," + key.str() + "}";
      if (json) {
        ojson j;
        j["group"] = lat.group().spec().text;
        j["ideal"] = name;
        j["level_label"] = labels.display[lc];
        j["element"] = ojson::array();
        for (const Int& c : coeffs) j["element"].push_back(int_to_json(c));
        j["marks"] = ojson::array();
        for (const Int& v : m.values) j["marks"].push_back(int_to_json(v));
        j["member"] = member;
        s.emit_json(j);
      } else {
        std::vector<std::string> ms;
        for (const Int& v : m.values) ms.push_back(v.str());
        out << "marks: " << btspec::impl::join(ms, ",") << "\n"
            << name << " at level " << labels.display[lc] << ": "
            << (member ? "member" : "not a member") << "\n";
      }
    }
    return 0;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace btspec::cli

#endif
