#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "classpower/classpower.hpp"

using namespace classpower;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("classpower_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("group input round trip: generators") {
  TempDir tmp;
  nlohmann::ordered_json doc;
  doc["name"] = "S3";
  doc["degree"] = 3;
  doc["generators"] = {{1, 2, 0}, {1, 0, 2}};
  std::ofstream(tmp.file("s3.json")) << doc.dump(2);
  GroupInput in = load_group_input(tmp.file("s3.json"));
  FiniteGroup G = build_group_input(in);
  CHECK(G.order() == 6);
}

TEST_CASE("group input round trip: presentation with inverse-suffix words") {
  TempDir tmp;
  nlohmann::ordered_json doc;
  doc["name"] = "M16";
  doc["presentation"] = {{"generators", {"a", "x"}},
                         {"relators", {"aaaaaaaa", "xx", "xaxa'a'a'a'a'"}},
                         {"order", 16}};
  std::ofstream(tmp.file("m16.json")) << doc.dump(2);
  FiniteGroup G = build_group_input(load_group_input(tmp.file("m16.json")));
  CHECK(G.order() == 16);
}

TEST_CASE("group input parse errors") {
  TempDir tmp;
  std::ofstream(tmp.file("broken.json")) << "{ not json";
  CHECK_THROWS_AS(load_group_input(tmp.file("broken.json")), ParseError);
  CHECK_THROWS_AS(load_group_input(tmp.file("missing.json")), ParseError);
}

TEST_CASE("enumeration cache reproduces the exact indexing") {
  TempDir tmp;
  ::setenv("CLASSPOWER_CACHE_DIR", tmp.path.c_str(), 1);
  std::vector<Perm> gens{Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})};
  FiniteGroup first = enumerate_group_cached(gens);
  CHECK(first.order() == 24);
  bool wrote_cache = !std::filesystem::is_empty(tmp.path);
  CHECK(wrote_cache);
  FiniteGroup second = enumerate_group_cached(gens);
  CHECK(first.elements() == second.elements());
  CHECK(first.generator_indices() == second.generator_indices());
  ::unsetenv("CLASSPOWER_CACHE_DIR");
}

TEST_CASE("cli: analyze catalogue groups") {
  auto a4 = run_cli("analyze --group catalogue:A4 --max-n 3");
  CHECK(a4.exit_code == 0);
  CHECK(a4.output.find("TrivialPlusClass") != std::string::npos);

  auto z1 = run_cli("analyze --group catalogue:Z1");
  CHECK(z1.exit_code == 0);
  CHECK(z1.output.find("0 hits") != std::string::npos);
}

TEST_CASE("cli: analyze an imported table") {
  auto m11 = run_cli("analyze --table " + std::string(FIXTURES_DIR) + "/M11.json --max-n 6");
  CHECK(m11.exit_code == 0);
  CHECK(m11.output.find("0 hits") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 1") {
  CHECK(run_cli("analyze").exit_code == 1);
  CHECK(run_cli("analyze --group catalogue:A4 --max-n 99").exit_code == 1);
  CHECK(run_cli("analyze --group catalogue:A4 --tolerance 0.5").exit_code == 1);
  CHECK(run_cli("analyze --group catalogue:NoSuchGroup").exit_code == 1);
  CHECK(run_cli("analyze --table /nonexistent.json").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("cli: analyze a group from a file") {
  TempDir tmp;
  nlohmann::ordered_json doc;
  doc["name"] = "S3file";
  doc["degree"] = 3;
  doc["generators"] = {{1, 2, 0}, {1, 0, 2}};
  std::ofstream(tmp.file("s3.json")) << doc.dump(2);
  auto res = run_cli("analyze --group " + tmp.file("s3.json") + " --max-n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("S3file") != std::string::npos);
}

TEST_CASE("cli: analyzing a corrupted table is a finding (exit 2)") {
  TempDir tmp;
  nlohmann::json doc = nlohmann::json::parse(slurp(std::string(FIXTURES_DIR) + "/M11.json"));
  doc["irreducibles"][4][2][0] = -9.0;
  const std::string path = tmp.file("broken_m11.json");
  std::ofstream(path) << doc.dump(2);
  auto res = run_cli("analyze --table " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("validation failed") != std::string::npos);
}

TEST_CASE("cli: full suite runs clean") {
  auto res = run_cli("suite --max-n 4");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("0 findings") != std::string::npos);
}

TEST_CASE("cli: chartable computes, exports, verifies") {
  TempDir tmp;
  auto s3 = run_cli("chartable --group catalogue:S3");
  CHECK(s3.exit_code == 0);
  CHECK(s3.output.find("\"order\": 6") != std::string::npos);

  const std::string out = tmp.file("a4.json");
  CHECK(run_cli("chartable --group catalogue:A4 --out " + out).exit_code == 0);
  CharacterTable t = import_table(out);
  CHECK(t.group_order == 12);

  // verification against itself succeeds
  auto ok = run_cli("chartable --group catalogue:A4 --verify-against " + out);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("match") != std::string::npos);

  // corrupt one value: import fails validation, exit 2
  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  doc["irreducibles"][2][1][0] = 2.5;
  std::ofstream(out) << doc.dump(2) << "\n";
  auto bad = run_cli("chartable --group catalogue:A4 --verify-against " + out);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: identical config gives byte-identical reports") {
  TempDir tmp;
  const std::string r1 = tmp.file("r1.json"), r2 = tmp.file("r2.json");
  CHECK(run_cli("analyze --group catalogue:SL23 --format json --seed 42 --out " + r1).exit_code ==
        0);
  CHECK(run_cli("analyze --group catalogue:SL23 --format json --seed 42 --out " + r2).exit_code ==
        0);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(!slurp(r1).empty());
}

TEST_CASE("cli: csv report format") {
  auto csv = run_cli("analyze --group catalogue:S3 --format csv --max-n 3");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("group,class,n,shape,agreement,conclusions_passed,conclusions_total",
                         0) == 0);
}

TEST_CASE("cli: suite conjecture census") {
  auto census = run_cli("suite --only conjectures --max-n 3");
  CHECK(census.exit_code == 0);
  CHECK(census.output.find("census") != std::string::npos);
  CHECK(census.output.find("A4") != std::string::npos);
}
