// Persistent cache of subgroup lattices, one JSON file per group.
//
// File layout: {spec_hash, spec, degree, generators, subgroups (hex
// bitsets), class_of, subconj}. Entries are rebuilt through
// SubgroupLattice::from_parts, which re-validates them, so a stale or
// corrupt file can only cost a recomputation.

#ifndef BTSPEC_CACHE_HPP_
#define BTSPEC_CACHE_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <unistd.h>

#include "json.hpp"
#include "lattice.hpp"

namespace btspec {

inline constexpr int cache_format_version = 1;

// BTSPEC_CACHE, else $XDG_CACHE_HOME/btspec, else $HOME/.cache/btspec;
// empty when none is set.
inline std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("BTSPEC_CACHE"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d)
    return std::filesystem::path(d) / "btspec";
  if (const char* d = std::getenv("HOME"); d && *d)
    return std::filesystem::path(d) / ".cache" / "btspec";
  return {};
}

// FNV-1a over the realized generators, so equal groups given by different
// spellings that realize identically share an entry.
inline std::string spec_hash(const FiniteGroup& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&](std::uint64_t v) {
    for (int i = 0; i != 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  feed(cache_format_version);
  feed(g.degree());
  for (const auto& p : g.generators()) {
    feed(p.degree());
    for (auto x : p.images()) feed(x);
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

inline nlohmann::ordered_json lattice_to_json(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  nlohmann::ordered_json j;
  j["format_version"] = cache_format_version;
  j["spec_hash"] = spec_hash(g);
  j["spec"] = g.spec().text;
  j["degree"] = g.degree();
  auto& gens = j["generators"] = nlohmann::ordered_json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  auto& subs = j["subgroups"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i != lat.size(); ++i) subs.push_back(lat.subgroup(i).members.to_hex());
  j["class_of"] = lat.class_map();
  auto& sc = j["subconj"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a != lat.num_classes(); ++a) {
    std::string row;
    for (std::size_t b = 0; b != lat.num_classes(); ++b) row.push_back(lat.subconj(a, b) ? '1' : '0');
    sc.push_back(row);
  }
  return j;
}

// Throws btspec::error when the entry does not describe `group`.
inline SubgroupLattice lattice_from_json(std::shared_ptr<const FiniteGroup> group,
                                         const nlohmann::json& j) {
  const FiniteGroup& g = *group;
  try {
    if (j.at("format_version").get<int>() != cache_format_version)
      throw error("cache entry has another format version");
    if (j.at("spec_hash").get<std::string>() != spec_hash(g))
      throw error("cache entry belongs to another group");
    if (j.at("degree").get<std::size_t>() != g.degree())
      throw error("cache entry has another degree");
    const auto& gens = j.at("generators");
    if (gens.size() != g.generators().size())
      throw error("cache entry has other generators");
    for (std::size_t i = 0; i != gens.size(); ++i)
      if (gens[i].get<std::vector<Permutation::point>>() != g.generators()[i].images())
        throw error("cache entry has other generators");
    std::vector<ElementSet> subs;
    for (const auto& s : j.at("subgroups"))
      subs.push_back(ElementSet::from_hex(s.get<std::string>(), g.order()));
    auto class_of = j.at("class_of").get<std::vector<std::size_t>>();
    std::vector<std::vector<bool>> subconj;
    for (const auto& row : j.at("subconj")) {
      std::vector<bool> r;
      for (char c : row.get<std::string>()) {
        if (c != '0' && c != '1') throw error("cache entry has a malformed subconj row");
        r.push_back(c == '1');
      }
      subconj.push_back(std::move(r));
    }
    return SubgroupLattice::from_parts(std::move(group), std::move(subs), class_of, subconj);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("malformed cache entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw error(std::string("malformed cache entry: ") + e.what());
  }
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const FiniteGroup& g) {
  return dir / (spec_hash(g) + ".json");
}

// Writes to a temporary file in `dir` and renames it into place. Throws
// btspec::error on I/O failure.
inline void cache_store(const std::filesystem::path& dir, const SubgroupLattice& lat) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw error("cannot create cache directory " + dir.string() + ": " + ec.message());
  const auto target = cache_path(dir, lat.group());
  const auto tmp = dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << lattice_to_json(lat).dump() << '\n';
    out.close();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      throw error("cannot write cache file " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw error("cannot move cache file into place: " + target.string());
  }
}

// nullopt when there is no entry (silently) or when it is unusable (with a
// warning on `warn`).
inline std::optional<SubgroupLattice> cache_load(const std::filesystem::path& dir,
                                                std::shared_ptr<const FiniteGroup> group,
                                                std::ostream& warn) {
  const auto path = cache_path(dir, *group);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    warn << "warning: cannot read cache file " << path.string() << "; recomputing\n";
    return std::nullopt;
  }
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    return lattice_from_json(std::move(group), j);
  } catch (const std::exception& e) {
    warn << "warning: ignoring cache file " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

// Cached lattice if valid, else a fresh one (stored back when possible).
// An empty `dir` disables the cache.
inline SubgroupLattice load_or_compute(std::shared_ptr<const FiniteGroup> group,
                                       const std::filesystem::path& dir, std::ostream& warn) {
  if (dir.empty()) return SubgroupLattice(std::move(group));
  if (auto lat = cache_load(dir, group, warn)) return std::move(*lat);
  SubgroupLattice lat(std::move(group));
  try {
    cache_store(dir, lat);
  } catch (const error& e) {
    warn << "warning: " << e.what() << "\n";
  }
  return lat;
}

} // namespace btspec

#endif
