// JSON, DOT and plain-text renderings of lattices, marks tables, spectra and
// verification reports. Every renderer is deterministic in its input.

#ifndef BTSPEC_FORMAT_HPP_
#define BTSPEC_FORMAT_HPP_

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "json.hpp"
#include "labels.hpp"
#include "spectrum.hpp"
#include "verify.hpp"

namespace btspec {

using ojson = nlohmann::ordered_json;

inline ojson int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();  // out of range for JSON integers in most consumers
}

namespace impl {

inline std::string pad(const std::string& s, std::size_t width) {
  // Column widths count code points so that labels like C7⋊C3 line up.
  std::size_t cps = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++cps;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

inline std::size_t display_width(const std::string& s) {
  std::size_t cps = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++cps;
  return cps;
}

inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i != r.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], display_width(r[i]));
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i != r.size(); ++i)
      line += i + 1 == r.size() ? r[i] : pad(r[i], w[i] + 2);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i != v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

} // namespace impl

// ---------------------------------------------------------------------------
// Subgroup lattice.

// Maximal proper subclasses of each class.
inline std::vector<std::vector<std::size_t>> class_covers(const SubgroupLattice& lat) {
  const std::size_t n = lat.num_classes();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t k = 0; k != n; ++k)
    for (std::size_t h = 0; h != n; ++h) {
      if (h == k || !lat.subconj(h, k)) continue;
      bool cover = true;
      for (std::size_t m = 0; m != n && cover; ++m)
        if (m != h && m != k && lat.subconj(h, m) && lat.subconj(m, k)) cover = false;
      if (cover) out[k].push_back(h);
    }
  return out;
}

inline ojson subgroups_json(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  const ClassLabels labels = class_labels(lat);
  const auto covers = class_covers(lat);
  ojson j;
  j["group"] = g.spec().text;
  j["order"] = g.order();
  j["subgroup_count"] = lat.size();
  auto& cs = j["classes"] = ojson::array();
  for (std::size_t c = 0; c != lat.num_classes(); ++c) {
    ojson e;
    e["id"] = labels.ids[c];
    e["label"] = labels.display[c];
    e["order"] = lat.order(lat.class_rep(c));
    e["conjugates"] = lat.class_members(c).size();
    auto& gens = e["generators"] = ojson::array();
    for (ElementId x : lat.subgroup(lat.class_rep(c)).generators)
      gens.push_back(g.element(x).cycle_string());
    auto& sub = e["maximal_subclasses"] = ojson::array();
    for (std::size_t h : covers[c]) sub.push_back(labels.display[h]);
    cs.push_back(std::move(e));
  }
  return j;
}

inline std::string subgroups_text(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  const ClassLabels labels = class_labels(lat);
  const auto covers = class_covers(lat);
  std::ostringstream os;
  os << g.spec().text << ": order " << g.order() << ", " << lat.size() << " subgroups in "
     << lat.num_classes() << " conjugacy classes\n";
  std::vector<std::vector<std::string>> rows{
      {"id", "label", "order", "conjugates", "generators", "maximal subclasses"}};
  for (std::size_t c = 0; c != lat.num_classes(); ++c) {
    std::vector<std::string> gens, sub;
    for (ElementId x : lat.subgroup(lat.class_rep(c)).generators)
      gens.push_back(g.element(x).cycle_string());
    for (std::size_t h : covers[c]) sub.push_back(labels.display[h]);
    rows.push_back({labels.ids[c], labels.display[c], std::to_string(lat.order(lat.class_rep(c))),
                    std::to_string(lat.class_members(c).size()),
                    gens.empty() ? "()" : impl::join(gens, " "),
                    sub.empty() ? "-" : impl::join(sub, " ")});
  }
  os << impl::table(rows);
  return os.str();
}

// ---------------------------------------------------------------------------
// Marks tables.

inline ojson marks_json(const SubgroupLattice& lat, const MarksTable& t, const std::string& level_label) {
  const ClassLabels labels = level_labels(lat, t.level);
  ojson j;
  j["level_label"] = level_label;
  j["class_labels"] = labels.display;
  j["matrix"] = t.matrix;
  return j;
}

inline std::string marks_text(const SubgroupLattice& lat, const MarksTable& t,
                              const std::string& level_label) {
  const ClassLabels labels = level_labels(lat, t.level);
  std::ostringstream os;
  os << "table of marks at level " << level_label << " of " << lat.group().spec().text
     << " (row K, column I: |(L/K)^I|)\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{""};
  for (const auto& l : labels.display) head.push_back(l);
  rows.push_back(head);
  for (std::size_t k = 0; k != t.matrix.size(); ++k) {
    std::vector<std::string> r{level_label + "/" + labels.display[k]};
    for (auto v : t.matrix[k]) r.push_back(std::to_string(v));
    rows.push_back(std::move(r));
  }
  os << impl::table(rows);
  os << "element coordinates for this level, in order: " << impl::join(labels.display, ",") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Residuals.

inline ojson residual_json(const SubgroupLattice& lat, std::uint64_t p) {
  const ClassLabels labels = class_labels(lat);
  ojson j;
  j["group"] = lat.group().spec().text;
  j["prime"] = p;
  auto& rows = j["rows"] = ojson::array();
  for (std::size_t c = lat.num_classes(); c-- > 0;) {
    ojson r;
    r["subgroup"] = labels.display[c];
    r["residual"] = labels.display[lat.class_of(p_residual(lat, lat.class_rep(c), p))];
    rows.push_back(std::move(r));
  }
  return j;
}

inline std::string residual_text(const SubgroupLattice& lat, std::uint64_t p) {
  const ClassLabels labels = class_labels(lat);
  const std::string o = "O^" + std::to_string(p);
  std::vector<std::vector<std::string>> rows{{"H", o + "(H)"}};
  for (std::size_t c = lat.num_classes(); c-- > 0;)
    rows.push_back(
        {labels.display[c], labels.display[lat.class_of(p_residual(lat, lat.class_rep(c), p))]});
  return o + " residuals in " + lat.group().spec().text + "\n" + impl::table(rows);
}

// ---------------------------------------------------------------------------
// Spectra.

inline std::string node_label(const ClassLabels& labels, const SpectrumNode& n) {
  return "p_{" + labels.display[n.ideal.canonical_class] + "," + n.ideal.p.str() + "}";
}

inline ojson spectrum_node_json(const ClassLabels& labels, const SpectrumNode& n, std::size_t id) {
  ojson e;
  e["id"] = id;
  e["p"] = n.ideal.p.str();
  e["residual_class_label"] = labels.display[n.ideal.canonical_class];
  auto& m = e["member_subgroup_labels"] = ojson::array();
  for (std::size_t c : n.members) m.push_back(labels.display[c]);
  return e;
}

inline ojson spectrum_json(const SubgroupLattice& lat, const SpectrumPoset& s) {
  const ClassLabels labels = class_labels(lat);
  ojson j;
  j["group"] = lat.group().spec().text;
  auto& nodes = j["nodes"] = ojson::array();
  for (std::size_t i = 0; i != s.nodes.size(); ++i)
    nodes.push_back(spectrum_node_json(labels, s.nodes[i], i));
  auto& edges = j["edges"] = ojson::array();
  for (auto [a, b] : s.edges) edges.push_back({a, b});
  auto& fibers = j["fibers"] = ojson::object();
  for (const auto& [k, ids] : s.fibers) fibers[k.str()] = ids;
  j["krull_dimension"] = s.krull_dimension;
  return j;
}

// One fiber as {group, p, nodes, edges}, with the global node ids.
inline ojson fiber_json(const SubgroupLattice& lat, const SpectrumPoset& s, PrimeKey key) {
  const ClassLabels labels = class_labels(lat);
  const auto& ids = *s.fiber(key);
  ojson j;
  j["group"] = lat.group().spec().text;
  j["p"] = key.str();
  auto& nodes = j["nodes"] = ojson::array();
  for (std::size_t id : ids) nodes.push_back(spectrum_node_json(labels, s.nodes[id], id));
  auto& edges = j["edges"] = ojson::array();
  for (auto [a, b] : s.edges)
    if (std::count(ids.begin(), ids.end(), a) && std::count(ids.begin(), ids.end(), b))
      edges.push_back({a, b});
  return j;
}

namespace impl {

inline bool in_ids(const std::vector<std::size_t>& ids, std::size_t x) {
  return std::find(ids.begin(), ids.end(), x) != ids.end();
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

inline void dot_fiber(std::ostream& os, const ClassLabels& labels, const SpectrumPoset& s,
                      PrimeKey key, const std::vector<std::size_t>& ids) {
  os << "digraph " << dot_quote("fiber_" + key.str()) << " {\n  rankdir=BT;\n";
  for (std::size_t id : ids)
    os << "  n" << id << " [label=" << dot_quote(node_label(labels, s.nodes[id])) << "];\n";
  for (auto [a, b] : s.edges)
    if (in_ids(ids, a) && in_ids(ids, b)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
}

// Longest-path rank of each node within its fiber, minimal nodes at 0.
inline std::vector<std::size_t> fiber_ranks(const SpectrumPoset& s, const std::vector<std::size_t>& ids) {
  std::map<std::size_t, std::size_t> rank;
  for (std::size_t id : ids) rank[id] = 0;
  for (std::size_t round = 0; round != ids.size(); ++round)
    for (auto [a, b] : s.edges)
      if (rank.count(a) && rank.count(b)) rank[b] = std::max(rank[b], rank[a] + 1);
  std::vector<std::size_t> out;
  for (std::size_t id : ids) out.push_back(rank[id]);
  return out;
}

inline void text_fiber(std::ostream& os, const ClassLabels& labels, const SpectrumPoset& s,
                       PrimeKey key, const std::vector<std::size_t>& ids) {
  os << "fiber " << key.str() << ": " << ids.size() << (ids.size() == 1 ? " prime\n" : " primes\n");
  const auto ranks = fiber_ranks(s, ids);
  const std::size_t top = ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
  for (std::size_t r = 0; r <= top && !ids.empty(); ++r) {
    std::vector<std::string> at;
    for (std::size_t i = 0; i != ids.size(); ++i)
      if (ranks[i] == r) at.push_back(node_label(labels, s.nodes[ids[i]]));
    os << std::string(2 + 2 * r, ' ') << "rank " << r << ": " << join(at, " ") << "\n";
  }
}

} // namespace impl

inline std::string spectrum_dot(const SubgroupLattice& lat, const SpectrumPoset& s) {
  const ClassLabels labels = class_labels(lat);
  std::ostringstream os;
  for (const auto& [k, ids] : s.fibers) impl::dot_fiber(os, labels, s, k, ids);
  os << "digraph \"spectrum\" {\n  rankdir=BT;\n";
  for (const auto& [k, ids] : s.fibers) {
    os << "  subgraph " << impl::dot_quote("cluster_" + k.str()) << " {\n    label="
       << impl::dot_quote(k.str()) << ";\n";
    for (std::size_t id : ids)
      os << "    n" << id << " [label=" << impl::dot_quote(node_label(labels, s.nodes[id])) << "];\n";
    os << "  }\n";
  }
  for (auto [a, b] : s.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string fiber_dot(const SubgroupLattice& lat, const SpectrumPoset& s, PrimeKey key) {
  std::ostringstream os;
  impl::dot_fiber(os, class_labels(lat), s, key, *s.fiber(key));
  return os.str();
}

inline std::string spectrum_text(const SubgroupLattice& lat, const SpectrumPoset& s,
                                 const std::string& title) {
  const ClassLabels labels = class_labels(lat);
  std::ostringstream os;
  os << title << " of " << lat.group().spec().text << "\n";
  os << "Krull dimension: " << s.krull_dimension << "\n";
  for (const auto& [k, ids] : s.fibers) impl::text_fiber(os, labels, s, k, ids);
  os << "containments (a -> b means a is contained in b):\n";
  for (auto [a, b] : s.edges)
    os << "  " << node_label(labels, s.nodes[a]) << " -> " << node_label(labels, s.nodes[b]) << "\n";
  return os.str();
}

inline std::string fiber_text(const SubgroupLattice& lat, const SpectrumPoset& s, PrimeKey key) {
  const ClassLabels labels = class_labels(lat);
  const auto& ids = *s.fiber(key);
  std::ostringstream os;
  impl::text_fiber(os, labels, s, key, ids);
  os << "containments (a -> b means a is contained in b):\n";
  for (auto [a, b] : s.edges)
    if (impl::in_ids(ids, a) && impl::in_ids(ids, b))
      os << "  " << node_label(labels, s.nodes[a]) << " -> " << node_label(labels, s.nodes[b]) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Verification reports.

// Subgroup as "<class label>[<lattice index>]".
inline std::string subgroup_ref(const SubgroupLattice& lat, const ClassLabels& labels, std::size_t sub) {
  return labels.display[lat.class_of(sub)] + "[" + std::to_string(sub) + "]";
}

inline ojson report_json(const SubgroupLattice& lat, const VerificationReport& r) {
  const ClassLabels labels = class_labels(lat);
  ojson j;
  j["group"] = r.group;
  j["passed"] = r.count(CheckStatus::pass);
  j["failed"] = r.count(CheckStatus::fail);
  j["skipped"] = r.count(CheckStatus::skip);
  auto& items = j["instances"] = ojson::array();
  for (const auto& i : r.instances) {
    ojson e;
    e["group"] = r.group;
    e["axiom"] = i.axiom;
    ojson inst = ojson::object();
    inst["H"] = i.h ? ojson(subgroup_ref(lat, labels, *i.h)) : ojson(nullptr);
    inst["L"] = i.l ? ojson(subgroup_ref(lat, labels, *i.l)) : ojson(nullptr);
    inst["K"] = i.k ? ojson(subgroup_ref(lat, labels, *i.k)) : ojson(nullptr);
    inst["g"] = i.g ? ojson(lat.group().element(*i.g).cycle_string()) : ojson(nullptr);
    e["instance"] = std::move(inst);
    e["status"] = to_string(i.status);
    if (!i.witness.empty()) e["witness"] = i.witness;
    items.push_back(std::move(e));
  }
  return j;
}

inline std::string instance_text(const SubgroupLattice& lat, const ClassLabels& labels,
                                 const AxiomInstance& i) {
  std::string s = i.axiom;
  if (i.h) s += " H=" + subgroup_ref(lat, labels, *i.h);
  if (i.l) s += " L=" + subgroup_ref(lat, labels, *i.l);
  if (i.k) s += " K=" + subgroup_ref(lat, labels, *i.k);
  if (i.g) s += " g=" + lat.group().element(*i.g).cycle_string();
  return s;
}

inline std::string report_text(const SubgroupLattice& lat, const VerificationReport& r) {
  const ClassLabels labels = class_labels(lat);
  std::ostringstream os;
  const std::size_t pass = r.count(CheckStatus::pass), fail = r.count(CheckStatus::fail),
                    skip = r.count(CheckStatus::skip);
  if (fail == 0) {
    os << "all axioms verified: " << pass << " instances\n";
  } else {
    os << "axiom violations: " << fail << " of " << r.instances.size() << " instances\n";
    for (const AxiomInstance* i : r.failures())
      os << "FAIL " << instance_text(lat, labels, *i) << ": " << i->witness << "\n";
  }
  if (skip) {
    os << "skipped: " << skip << " instances\n";
    for (const auto& i : r.instances)
      if (i.status == CheckStatus::skip)
        os << "SKIP " << instance_text(lat, labels, i) << ": " << i.witness << "\n";
  }
  return os.str();
}

} // namespace btspec

#endif
