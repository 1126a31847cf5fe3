#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <btspec/cli.hpp>

#include "support.hpp"

using namespace btspec;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_nocache(std::vector<std::string> args) {
  args.insert(args.begin(), "--no-cache");
  return run_cli(std::move(args));
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  Result r = run_nocache(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

struct TempDir {
  TempDir() {
    path = fs::temp_directory_path() /
           ("btspec-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  fs::path path;
};

std::shared_ptr<const FiniteGroup> group_of(const char* spec) {
  return std::make_shared<const FiniteGroup>(realize(parse_group_spec(spec)));
}

} // namespace

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run_nocache({"spec", "Q6"}).code, 2);
  EXPECT_EQ(run_nocache({"spec", "X5"}).code, 2);
  EXPECT_EQ(run_nocache({"frobnicate", "A4"}).code, 2);
  EXPECT_EQ(run_nocache({}).code, 2);
  EXPECT_EQ(run_nocache({"residual", "A4"}).code, 2);
  EXPECT_EQ(run_nocache({"residual", "A4", "--prime", "4"}).code, 2);
  EXPECT_EQ(run_nocache({"fibers", "A4", "--prime", "six"}).code, 2);
  EXPECT_EQ(run_nocache({"marks", "A4", "--level", "D4"}).code, 2);
  EXPECT_EQ(run_nocache({"marks", "A4", "--format", "dot"}).code, 2);
  EXPECT_EQ(run_nocache({"verify", "S3", "--axioms", "no_such_axiom"}).code, 2);
  EXPECT_EQ(run_nocache({"spec", "A4", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run_nocache({"member", "A4", "--ideal", "K4,3", "--level", "A4", "--element", "1,2"}).code, 2);
  EXPECT_EQ(run_nocache({"member", "A4", "--ideal", "K4", "--level", "A4", "--element", "1"}).code, 2);
  EXPECT_EQ(run_nocache({"member", "A4", "--ideal", "K4,3", "--level", "A4", "--element", "1,x,0,0,0"}).code, 2);
  Result r = run_nocache({"spec", "Q6"});
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliExitCodes, DomainErrorsAndSuccess) {
  Result r = run_nocache({"--max-order", "10", "subgroups", "S4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("exceed"), std::string::npos);
  EXPECT_EQ(run_nocache({"subgroups", "S4", "--max-order", "10"}).code, 1);
  EXPECT_EQ(run_nocache({"subgroups", "S4"}).code, 0);
  EXPECT_EQ(run_nocache({"--help"}).code, 0);
}

TEST(CliExitCodes, Binary) {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(BTSPEC_CLI_PATH) + " --no-cache " + args + " >/dev/null 2>&1";
    int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("spec A4"), 0);
  EXPECT_EQ(status("spec Q6"), 2);
  EXPECT_EQ(status("--max-order 10 subgroups S4"), 1);
}

TEST(CliSpec, A4Json) {
  auto j = json_of({"spec", "A4"});
  EXPECT_EQ(j["group"], "A4");
  EXPECT_EQ(j["krull_dimension"], 4);
  EXPECT_EQ(j["fibers"]["0"].size(), 5u);
  EXPECT_EQ(j["fibers"]["2"].size(), 3u);
  EXPECT_EQ(j["fibers"]["3"].size(), 3u);
  EXPECT_EQ(j["fibers"]["GENERIC"].size(), 5u);
  ASSERT_EQ(j["nodes"].size(), 16u);
  for (std::size_t i = 0; i != j["nodes"].size(); ++i) {
    const auto& n = j["nodes"][i];
    EXPECT_EQ(n["id"], i);
    EXPECT_TRUE(n["p"].is_string());
    EXPECT_TRUE(n["residual_class_label"].is_string());
    EXPECT_FALSE(n["member_subgroup_labels"].empty());
  }
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"edges", "fibers", "group", "krull_dimension", "nodes"}));
  // p_{e,2} collects e, C2 and K4.
  for (const auto& n : j["nodes"])
    if (n["p"] == "2" && n["residual_class_label"] == "e") {
      EXPECT_EQ(n["member_subgroup_labels"], nlohmann::json({"e", "C2", "K4"}));
    }
  for (const auto& e : j["edges"]) {
    ASSERT_EQ(e.size(), 2u);
    EXPECT_LT(e[0].get<std::size_t>(), 16u);
  }
}

TEST(CliSpec, ExtraPrimeAndFibers) {
  auto j = json_of({"spec", "A4", "--prime", "5"});
  EXPECT_EQ(j["fibers"]["5"].size(), 5u);
  auto f = json_of({"fibers", "GL3_2", "--prime", "7"});
  EXPECT_EQ(f["p"], "7");
  EXPECT_EQ(f["nodes"].size(), 14u);
  EXPECT_EQ(f["edges"].size(), 24u);
  auto g = json_of({"fibers", "A4", "--prime", "generic"});
  EXPECT_EQ(g["p"], "GENERIC");
  EXPECT_EQ(g["nodes"].size(), 5u);
}

TEST(CliSpec, RingSpec) {
  auto t = json_of({"spec", "A4"});
  auto r = json_of({"ring-spec", "A4"});
  EXPECT_EQ(r["krull_dimension"], 1);
  EXPECT_EQ(t["nodes"], r["nodes"]);
  for (const auto& e : r["edges"]) {
    EXPECT_EQ(r["nodes"][e[0].get<std::size_t>()]["p"], "0");
    EXPECT_NE(r["nodes"][e[1].get<std::size_t>()]["p"], "0");
  }
}

TEST(CliSpec, Dot) {
  Result r = run_nocache({"spec", "A4", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  std::size_t digraphs = 0, rankdirs = 0;
  for (std::size_t pos = 0; (pos = r.out.find("digraph ", pos)) != std::string::npos; ++pos) ++digraphs;
  for (std::size_t pos = 0; (pos = r.out.find("rankdir=BT;", pos)) != std::string::npos; ++pos) ++rankdirs;
  EXPECT_EQ(digraphs, 5u);
  EXPECT_EQ(rankdirs, 5u);
  EXPECT_NE(r.out.find("digraph \"fiber_GENERIC\""), std::string::npos);
  EXPECT_NE(r.out.find("[label=\"p_{C3,2}\"]"), std::string::npos);
  // Cross-edge p_{e,0} -> p_{e,2} only in the combined graph.
  const std::size_t combined = r.out.find("digraph \"spectrum\"");
  ASSERT_NE(combined, std::string::npos);
  EXPECT_NE(r.out.find("n0 -> n5;", combined), std::string::npos);
  EXPECT_EQ(r.out.find("n0 -> n5;"), r.out.find("n0 -> n5;", combined));
}

TEST(CliSpec, TextRanks) {
  Result r = run_nocache({"spec", "A4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Krull dimension: 4"), std::string::npos);
  EXPECT_NE(r.out.find("fiber 2: 3 primes"), std::string::npos);
  EXPECT_NE(r.out.find("rank 1: p_{C3,0} p_{K4,0}"), std::string::npos);
}

TEST(CliOutput, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"spec", "S4", "--format", "dot"},
        std::vector<std::string>{"spec", "D9", "--format", "json"},
        std::vector<std::string>{"verify", "D4", "--format", "json"},
        std::vector<std::string>{"subgroups", "GL3_2"}}) {
    Result a = run_nocache(args), b = run_nocache(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliMarks, JsonSchemaAndLevels) {
  auto j = json_of({"marks", "A4"});
  EXPECT_EQ(j["level_label"], "A4");
  EXPECT_EQ(j["class_labels"], nlohmann::json({"e", "C2", "C3", "K4", "A4"}));
  EXPECT_EQ(j["matrix"][3], nlohmann::json({3, 3, 0, 3, 0}));
  EXPECT_EQ(j.size(), 3u);
  auto k = json_of({"marks", "A4", "--level", "K4"});
  EXPECT_EQ(k["level_label"], "K4");
  EXPECT_EQ(k["class_labels"].size(), 5u);  // e, three C2, K4
  auto c = json_of({"marks", "S4", "--level", "o4c1"});
  EXPECT_EQ(c["level_label"], "C4");
}

TEST(CliResidual, GL32Table) {
  auto j = json_of({"residual", "GL3_2", "--prime", "3"});
  ASSERT_EQ(j["rows"].size(), 15u);
  std::map<std::string, std::string> m;
  for (const auto& r : j["rows"]) m[r["subgroup"]] = r["residual"];
  EXPECT_EQ(m["C7⋊C3"], "C7");
  EXPECT_EQ(m["C3"], "e");
  EXPECT_EQ(m["A4a"], "K4a");
  EXPECT_EQ(m["S3"], "S3");
  Result t = run_nocache({"residual", "GL3_2", "--prime", "7"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("O^7(H)"), std::string::npos);
}

TEST(CliVerify, TextAndJson) {
  Result r = run_nocache({"verify", "S3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("all axioms verified: ", 0), 0u);
  EXPECT_NE(r.out.find(" instances\n"), std::string::npos);
  auto j = json_of({"verify", "C2", "--axioms", "frobenius,conjugacy"});
  EXPECT_EQ(j["failed"], 0);
  ASSERT_FALSE(j["instances"].empty());
  for (const auto& i : j["instances"]) {
    EXPECT_EQ(i["group"], "C2");
    EXPECT_TRUE(i["axiom"] == "frobenius" || i["axiom"].get<std::string>().rfind("conj_", 0) == 0);
    EXPECT_TRUE(i["instance"].contains("H") && i["instance"].contains("L") &&
                i["instance"].contains("K") && i["instance"].contains("g"));
    EXPECT_EQ(i["status"], "pass");
    EXPECT_FALSE(i.contains("witness"));
  }
  Result seeded = run_nocache({"--seed", "0x1234", "verify", "C3"});
  EXPECT_EQ(seeded.code, 0);
}

TEST(CliMember, Examples) {
  Result r = run_nocache({"member", "A4", "--ideal", "K4,3", "--level", "A4", "--element", "2,0,0,-1,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("marks: 21,-3,0,-3,0"), std::string::npos);
  EXPECT_NE(r.out.find("p_{K4,3} at level A4: member"), std::string::npos);
  auto j = json_of({"member", "A4", "--ideal", "K4,2", "--level", "A4", "--element", "2,0,0,-1,0"});
  EXPECT_EQ(j["member"], false);
  auto k = json_of({"member", "A4", "--ideal", "e,GENERIC", "--level", "C3", "--element", "0,5"});
  EXPECT_EQ(k["member"], true);  // marks (5, 0), generic modulus 5
}

TEST(Cache, RoundTripGL32) {
  TempDir dir;
  auto g = group_of("GL3_2");
  SubgroupLattice fresh(g);
  cache_store(dir.path, fresh);
  std::ostringstream warn;
  auto loaded = cache_load(dir.path, g, warn);
  ASSERT_TRUE(loaded.has_value()) << warn.str();
  EXPECT_TRUE(warn.str().empty());
  EXPECT_EQ(class_labels(*loaded).display, class_labels(fresh).display);
  EXPECT_EQ(class_labels(*loaded).ids, class_labels(fresh).ids);
  EXPECT_EQ(loaded->subconj_matrix(), fresh.subconj_matrix());
  ASSERT_EQ(loaded->size(), fresh.size());
  for (std::size_t i = 0; i != fresh.size(); ++i)
    EXPECT_EQ(loaded->subgroup(i).members, fresh.subgroup(i).members);
  for (const auto& e : fs::directory_iterator(dir.path))
    EXPECT_EQ(e.path().extension(), ".json");  // no temporary left behind
}

TEST(Cache, MissingDirectoryIsSilent) {
  TempDir dir;
  auto g = group_of("S4");
  std::ostringstream warn;
  EXPECT_FALSE(cache_load(dir.path / "absent", g, warn).has_value());
  SubgroupLattice lat = load_or_compute(g, dir.path / "absent", warn);
  EXPECT_EQ(lat.size(), 30u);
  EXPECT_TRUE(warn.str().empty());
  EXPECT_TRUE(fs::exists(cache_path(dir.path / "absent", *g)));
}

TEST(Cache, CorruptAndStaleEntriesAreRecomputed) {
  TempDir dir;
  auto g = group_of("A4");
  cache_store(dir.path, SubgroupLattice(g));
  const fs::path file = cache_path(dir.path, *g);
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  {
    std::ofstream out(file, std::ios::trunc);
    out << text.substr(0, text.size() / 2);
  }
  std::ostringstream warn;
  EXPECT_FALSE(cache_load(dir.path, g, warn).has_value());
  EXPECT_NE(warn.str().find("warning"), std::string::npos);
  SubgroupLattice lat = load_or_compute(g, dir.path, warn);
  EXPECT_EQ(lat.size(), 10u);

  // A well-formed entry whose subconjugacy matrix was tampered with.
  auto j = nlohmann::json::parse(text);
  std::string row = j["subconj"][1];
  row[2] = row[2] == '1' ? '0' : '1';
  j["subconj"][1] = row;
  {
    std::ofstream out(file, std::ios::trunc);
    out << j.dump();
  }
  std::ostringstream warn2;
  EXPECT_FALSE(cache_load(dir.path, g, warn2).has_value());
  EXPECT_NE(warn2.str().find("warning"), std::string::npos);

  // An entry for another group stored under this group's name.
  {
    std::ofstream out(file, std::ios::trunc);
    out << lattice_to_json(SubgroupLattice(group_of("S4"))).dump();
  }
  std::ostringstream warn3;
  EXPECT_FALSE(cache_load(dir.path, g, warn3).has_value());
  EXPECT_NE(warn3.str().find("warning"), std::string::npos);
}

TEST(Cache, CliUsesAndRefreshesCache) {
  TempDir dir;
  Result a = run_cli({"--cache-dir", dir.path.string(), "spec", "S4", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_TRUE(a.err.empty());
  EXPECT_TRUE(fs::exists(cache_path(dir.path, *group_of("S4"))));
  Result b = run_cli({"--cache-dir", dir.path.string(), "spec", "S4", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(b.err.empty());
  {
    std::ofstream out(cache_path(dir.path, *group_of("S4")), std::ios::trunc);
    out << "{\"spec_hash\":";
  }
  Result c = run_cli({"--cache-dir", dir.path.string(), "spec", "S4", "--format", "json"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(a.out, c.out);
  EXPECT_NE(c.err.find("warning"), std::string::npos);
}

TEST(Cache, HashDistinguishesGroups) {
  EXPECT_NE(spec_hash(*group_of("A4")), spec_hash(*group_of("S4")));
  EXPECT_EQ(spec_hash(*group_of("A4")), spec_hash(*group_of("A4")));
  EXPECT_EQ(spec_hash(*group_of("GL3_2")).size(), 16u);
}
