#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gerbe/cli.hpp"
#include "gerbe/io.hpp"
#include "gerbe/library.hpp"

using namespace gerbe;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "gerbe-cli-test") {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

RunConfig config_for(const std::string& command, const std::string& input) {
  RunConfig c;
  c.command = command;
  c.input = input;
  return c;
}

}  // namespace

TEST_CASE("group JSON: table form") {
  const json j = json::parse(R"({"name":"Z3","order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]})");
  const FiniteGroup g = parse_group(j, "");
  CHECK(g.order() == 3);
  CHECK(g.name() == "Z3");
}

TEST_CASE("group JSON: generator form") {
  const json j = json::parse(R"({"name":"S3","degree":3,"generators":[[1,2,0],[1,0,2]]})");
  const FiniteGroup g = parse_group(j, "");
  CHECK(g.order() == 6);
}

TEST_CASE("group JSON errors carry the offending path") {
  const json j = json::parse(R"({"name":"bad","order":2,"table":[[0,1],["x",0]]})");
  try {
    parse_group(j, "");
    FAIL("expected error");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_input);
    CHECK(std::string(e.what()).find("/table/1/0") != std::string::npos);
  }
}

TEST_CASE("group JSON order mismatch is caught") {
  const json j = json::parse(R"({"order":3,"table":[[0,1],[1,0]]})");
  CHECK_THROWS_AS((void)parse_group(j, ""), error);
}

TEST_CASE("extension JSON with inline groups") {
  const json j = json::parse(R"({
    "G": {"name":"Z2","order":2,"table":[[0,1],[1,0]]},
    "H": {"name":"Z4","order":4,"table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
    "Q": {"name":"Z2","order":2,"table":[[0,1],[1,0]]},
    "iota": [0,2],
    "pi": [0,1,0,1]
  })");
  const Extension ext = parse_extension(j, "", "");
  CHECK(ext.h().order() == 4);
  CHECK(ext.section == std::vector<int>{0, 1});
}

TEST_CASE("extension JSON with group file references") {
  TempDir dir;
  dir.write("z2.json", R"({"name":"Z2","order":2,"table":[[0,1],[1,0]]})");
  const std::string ext_path = dir.write("ext.json", R"({
    "G": "z2.json",
    "H": {"name":"Z4","order":4,"table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
    "Q": "z2.json",
    "iota": [0,2],
    "pi": [0,1,0,1]
  })");
  const json j = load_json_file(ext_path);
  const Extension ext = parse_extension(j, dir.path.string(), "");
  CHECK(ext.g().name() == "Z2");
  CHECK(ext.h().order() == 4);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4", "") == Rational(3, 4));
  CHECK(parse_rational("-6", "") == Rational(-6));
  CHECK(parse_rational("2/-4", "") == Rational(-1, 2));
  CHECK(rational_str(Rational(-1, 2)) == "-1/2");
  CHECK(rational_str(Rational(81)) == "81");
  CHECK_THROWS_AS((void)parse_rational("x", ""), error);
  CHECK_THROWS_AS((void)parse_rational("1/0", ""), error);
}

TEST_CASE("unsupported schema version is rejected") {
  const json j = json::parse(R"({"format":2,"order":1,"table":[[0]]})");
  try {
    parse_group(j, "");
    FAIL("expected error");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("format") != std::string::npos);
  }
}

TEST_CASE("run: library lists at least seven extensions") {
  const RunResult r = run(config_for("library", ""));
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.report);
  CHECK(j["extensions"].size() >= 7);
  bool q8_banded = false, s3_nonbanded = false;
  for (const auto& e : j["extensions"]) {
    if (e["name"] == "q8") q8_banded = e["banded"];
    if (e["name"] == "s3") s3_nonbanded = !e["banded"];
  }
  CHECK(q8_banded);
  CHECK(s3_nonbanded);
}

TEST_CASE("run: duality-check on the bundled Q8 extension passes genus 0..3") {
  RunConfig c = config_for("duality-check", "builtin:q8");
  c.genus_min = 0;
  c.genus_max = 3;
  const RunResult r = run(c);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.report);
  REQUIRE(j["rows"].size() == 4);
  for (const auto& row : j["rows"]) CHECK(row["pass"] == true);
}

TEST_CASE("run: malformed table exits 2 with a NotLatinSquare diagnostic") {
  TempDir dir;
  const std::string path =
      dir.write("bad.json", R"({"name":"bad","order":2,"table":[[0,1],[1,1]]})");
  const RunResult r = run(config_for("irreps", path));
  CHECK(r.exit_code == 2);
  CHECK(r.report.empty());
  CHECK(r.diagnostic.find("NotLatinSquare") != std::string::npos);
}

TEST_CASE("run: unknown builtin exits 2") {
  const RunResult r = run(config_for("dual", "builtin:nope"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("run: genus range and budget limits are enforced") {
  RunConfig c = config_for("duality-check", "builtin:z4");
  c.genus_min = 2;
  c.genus_max = 1;
  CHECK(run(c).exit_code == 2);
  c.genus_min = 0;
  c.genus_max = 7;
  CHECK(run(c).exit_code == 2);
  RunConfig o = config_for("oracle", "builtin:z4");
  o.budget = 2'000'000'000;
  CHECK(run(o).exit_code == 2);
}

TEST_CASE("run: reports are byte-identical across runs") {
  for (const auto* name : {"q8", "s4"}) {
    RunConfig c = config_for("duality-check", std::string("builtin:") + name);
    c.genus_min = 0;
    c.genus_max = 3;
    c.seed = 123;
    const RunResult a = run(c);
    const RunResult b = run(c);
    CHECK(a.exit_code == 0);
    CHECK(a.report == b.report);
  }
  RunConfig d = config_for("dual", "builtin:s4");
  const RunResult a = run(d);
  const RunResult b = run(d);
  CHECK(a.report == b.report);
}

TEST_CASE("run: library dump round-trips through the JSON schema") {
  RunConfig dump = config_for("library", "");
  dump.dump = "q8";
  const RunResult dumped = run(dump);
  REQUIRE(dumped.exit_code == 0);

  TempDir dir;
  const std::string path = dir.write("q8.json", dumped.report);
  RunConfig c = config_for("duality-check", path);
  c.genus_min = 0;
  c.genus_max = 2;
  const RunResult from_file = run(c);
  CHECK(from_file.exit_code == 0);

  c.input = "builtin:q8";
  const RunResult from_builtin = run(c);
  const auto a = json::parse(from_file.report);
  const auto b = json::parse(from_builtin.report);
  CHECK(a["rows"] == b["rows"]);
}

TEST_CASE("run: oracle command agrees with the formula") {
  RunConfig c = config_for("oracle", "builtin:s3");
  c.genus_min = c.genus_max = 2;
  const RunResult r = run(c);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.report);
  CHECK(j["hom_count"] == "486");
  CHECK(j["match"] == true);
}

TEST_CASE("run: rcoeff end to end") {
  TempDir dir;
  const std::string path = dir.write(
      "samples.json", R"({"samples": [[1, "4"], [2, "7"], [3, "12"], [4, "19"]]})");
  RunConfig c = config_for("rcoeff", path);
  c.degree = 2;
  const RunResult r = run(c);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.report);
  CHECK(j["r0"] == "3");  // r^2 + 3
  CHECK(j["coefficients"] == json::parse(R"(["3","0","1"])"));
}

TEST_CASE("run: irreps with characters emits a class-indexed table") {
  RunConfig c = config_for("irreps", "builtin:s3");
  c.characters = true;
  const RunResult r = run(c);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.report);
  CHECK(j["dims"] == json::parse("[1,1,2]"));
  CHECK(j["characters"].size() == 3);
  CHECK(j["classes"].size() == 3);
}
