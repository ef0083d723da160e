#include <cstdio>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gridsign/cli.hpp"
#include "gridsign/errors.hpp"
#include "gridsign/homology.hpp"
#include "gridsign/io.hpp"
#include "testgrids.hpp"

using namespace gridsign;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
  Json doc;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  r.doc = Json::parse(r.out);  // stdout must be valid JSON on every exit code
  return r;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gridsign-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& contents) const {
    const auto p = path / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("sign file round trip") {
  const RectUniverse u(3);
  const SignAssignment s = solve_signs(u);
  const SignAssignment back = sign_from_json(sign_to_json(u, s).dump(), u);
  CHECK(back == s);
}

TEST_CASE("sign file rejections") {
  const RectUniverse u(2);
  const SignAssignment s = solve_signs(u);
  Json doc = sign_to_json(u, s);

  SUBCASE("missing rectangle key") {
    doc["rects"].erase(0);
    CHECK_THROWS_AS(sign_from_json(doc.dump(), u), Error);
    try {
      sign_from_json(doc.dump(), u);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MissingRectangle);
    }
  }
  SUBCASE("duplicate rectangle key") {
    doc["rects"].push_back(doc["rects"][0]);
    try {
      sign_from_json(doc.dump(), u);
      FAIL("expected duplicate");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DuplicateRectangle);
    }
  }
  SUBCASE("unknown rectangle key") {
    doc["rects"][0]["w"] = 7;
    CHECK_THROWS_AS(sign_from_json(doc.dump(), u), Error);
  }
  SUBCASE("bad sign value") {
    doc["rects"][0]["sign"] = 2;
    CHECK_THROWS_AS(sign_from_json(doc.dump(), u), Error);
  }
  SUBCASE("size mismatch against the grid") {
    const RectUniverse u3(3);
    try {
      sign_from_json(doc.dump(), u3);
      FAIL("expected mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SizeMismatch);
    }
  }
  SUBCASE("unknown top-level key") {
    doc["comment"] = "nope";
    CHECK_THROWS_AS(sign_from_json(doc.dump(), u), Error);
  }
}

TEST_CASE("empty tables emit empty arrays") {
  const Json entries = table_entries_json(HomologyTable{});
  CHECK(entries.is_array());
  CHECK(entries.empty());
  CHECK(entries.dump() == "[]");
  CHECK(euler_to_json({}).dump() == "{}");
}

TEST_CASE("fraction strings for Alexander gradings") {
  CHECK(a2_fraction(0) == "0");
  CHECK(a2_fraction(-2) == "-1");
  CHECK(a2_fraction(4) == "2");
  CHECK(a2_fraction(1) == "1/2");
  CHECK(a2_fraction(-3) == "-3/2");
}

TEST_CASE("report emission is byte stable") {
  Json doc;
  doc["b"] = 1;
  doc["a"] = Json::array({1, 2});
  const std::string once = emit_report(doc);
  CHECK(once == emit_report(doc));
  CHECK(once.back() == '\n');
  CHECK(once.find("\"b\"") < once.find("\"a\""));  // insertion order preserved
  CHECK(once.find('\r') == std::string::npos);
}

TEST_CASE("cli validate") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::unknot2_json());
  const auto r = run_cli({"validate", grid});
  CHECK(r.code == 0);
  CHECK(r.doc["valid"] == true);
  CHECK(r.doc["m"] == 1);

  const auto bad = dir.file("bad.json", R"({"n": 2, "O": [1, 2], "X": [1, 2]})");
  const auto rb = run_cli({"validate", bad});
  CHECK(rb.code == 1);
  CHECK(rb.doc["valid"] == false);
  CHECK(rb.doc["error"]["code"] == "marking_collision");
}

TEST_CASE("cli solve, verify, count pipeline") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::unknot3_json());
  const auto signs = dir.file("signs.json");

  const auto solved = run_cli({"--quiet", "signs", "solve", grid, "--out", signs});
  CHECK(solved.code == 0);
  CHECK(solved.doc["convention"] == "true");
  CHECK(std::filesystem::exists(signs));

  const auto verified = run_cli({"signs", "verify", grid, signs});
  CHECK(verified.code == 0);
  CHECK(verified.doc["verified"] == true);

  const auto counted = run_cli({"signs", "count", grid});
  CHECK(counted.code == 0);
  CHECK(counted.doc["solutions"] == "32");
  CHECK(counted.doc["kernel_dimension"] == 5);
}

TEST_CASE("cli verify flags the all-plus-one assignment with exit 2") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::unknot2_json());
  const RectUniverse u(2);
  SignAssignment ones{2, SignConvention::True, std::vector<std::int8_t>(4, +1)};
  const auto signs = dir.file("ones.json", emit_report(sign_to_json(u, ones)));

  const auto r = run_cli({"signs", "verify", grid, signs});
  CHECK(r.code == 2);
  CHECK(r.doc["verified"] == false);
  REQUIRE(r.doc["violations"].size() == 2);
  for (const auto& v : r.doc["violations"]) CHECK(v["kind"] == "vertical");
}

TEST_CASE("cli twist flips the convention and is involutive") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::unknot3_json());
  const auto signs = dir.file("signs.json");
  run_cli({"--quiet", "signs", "solve", grid, "--out", signs});

  const auto twisted = dir.file("twisted.json");
  const auto r1 = run_cli({"--quiet", "signs", "twist", signs, "--grid", grid, "--out", twisted});
  CHECK(r1.code == 0);
  CHECK(r1.doc["convention"] == "false");

  const auto rv = run_cli({"signs", "verify", grid, twisted});
  CHECK(rv.code == 0);  // verified against its own (false) convention

  const auto forced = run_cli({"signs", "verify", grid, twisted, "--convention", "true"});
  CHECK(forced.code == 2);
  for (const auto& v : forced.doc["violations"]) CHECK(v["kind"] != "square");

  const auto back = run_cli({"--quiet", "signs", "twist", twisted, "--grid", grid});
  CHECK(back.doc == Json::parse(read_file(signs)));
}

TEST_CASE("cli gauge-diff") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::unknot3_json());
  const RectUniverse u(3);
  const SignAssignment s = solve_signs(u);
  GaugeFunction f{3, std::vector<std::int8_t>(static_cast<size_t>(u.state_count()), +1)};
  f.value[2] = -1;
  f.value[4] = -1;
  const auto s1 = dir.file("s1.json", emit_report(sign_to_json(u, s)));
  const auto s2 = dir.file("s2.json", emit_report(sign_to_json(u, gauge_apply(u, s, f))));

  const auto r = run_cli({"signs", "gauge-diff", grid, s1, s2});
  CHECK(r.code == 0);
  CHECK(r.doc["gauge_equivalent"] == true);
  REQUIRE(r.doc["f"].size() == 6);
  CHECK(r.doc["f"][0] == 1);
  CHECK(r.doc["f"][2] == -1);

  // Different solutions from the enumeration are equivalent as well.
  const auto sols = enumerate_solutions(u);
  const auto s3 = dir.file("s3.json", emit_report(sign_to_json(u, sols[17])));
  CHECK(run_cli({"signs", "gauge-diff", grid, s1, s3}).code == 0);
}

TEST_CASE("cli complex check") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::split4_json());
  const auto signs = dir.file("signs.json");
  run_cli({"--quiet", "signs", "solve", grid, "--out", signs});

  const auto tilde = run_cli({"complex", "check", grid, signs});
  CHECK(tilde.code == 0);
  CHECK(tilde.doc["d_squared_zero"] == true);
  CHECK(tilde.doc["generators"] == 24);

  const auto dump = dir.file("dump.json");
  const auto full = run_cli({"complex", "check", grid, signs, "--version", "full", "--dump", dump});
  CHECK(full.code == 0);
  CHECK(full.doc["version"] == "full");
  const Json dumped = Json::parse(read_file(dump));
  CHECK(dumped["version"] == "full");
  CHECK(dumped["generators"].size() == 24);

  // A corrupted sign file is refused at the verification gate.
  const RectUniverse u(4);
  SignAssignment corrupt = sign_from_json(read_file(signs), u);
  corrupt.sign[0] = static_cast<std::int8_t>(-corrupt.sign[0]);
  const auto bad = dir.file("bad.json", emit_report(sign_to_json(u, corrupt)));
  const auto refused = run_cli({"complex", "check", grid, bad});
  CHECK(refused.code == 2);
  CHECK(refused.doc["verified"] == false);
}

TEST_CASE("cli homology and euler") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::unknot2_json());
  const auto signs = dir.file("signs.json");
  run_cli({"--quiet", "signs", "solve", grid, "--out", signs});

  const auto r = run_cli({"homology", grid, signs});
  CHECK(r.code == 0);
  CHECK(r.doc["grid"]["n"] == 2);
  CHECK(r.doc["coefficients"] == "z");
  REQUIRE(r.doc["entries"].size() == 2);
  CHECK(r.doc["entries"][0] == Json({{"M", -1}, {"A2", -2}, {"free_rank", 1}, {"torsion", Json::array()}}));
  CHECK(r.doc["entries"][1]["M"] == 0);
  CHECK(r.doc["euler"] == Json({{"-1", -1}, {"0", 1}}));

  const auto z2 = run_cli({"homology", grid, signs, "--coefficients", "z2"});
  CHECK(z2.code == 0);
  CHECK(z2.doc["coefficients"] == "z2");

  const auto euler = run_cli({"euler", grid, signs});
  CHECK(euler.code == 0);
  CHECK(euler.doc["euler"] == Json({{"-1", -1}, {"0", 1}}));
  CHECK_FALSE(euler.doc.contains("entries"));

  // The verification gate also guards homology.
  const RectUniverse u(2);
  SignAssignment ones{2, SignConvention::True, std::vector<std::int8_t>(4, +1)};
  const auto bad = dir.file("ones.json", emit_report(sign_to_json(u, ones)));
  CHECK(run_cli({"homology", grid, bad}).code == 2);
}

TEST_CASE("cli compare") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::split4_json());
  const auto r = run_cli({"compare", grid});
  CHECK(r.code == 0);
  CHECK(r.doc["tables_agree"] == true);
  CHECK(r.doc["z2_consistent"]["true"] == true);
  CHECK(r.doc["z2_consistent"]["false"] == true);
  CHECK(r.doc["true"]["entries"] == r.doc["false"]["entries"]);

  const auto refused = run_cli({"compare", grid, "--max-n", "3"});
  CHECK(refused.code == 1);
  CHECK(refused.doc["error"]["code"] == "bound_exceeded");
}

TEST_CASE("cli output is deterministic") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::split4_json());
  const auto a = run_cli({"--quiet", "signs", "solve", grid});
  const auto b = run_cli({"--quiet", "signs", "solve", grid});
  CHECK(a.out == b.out);
}

TEST_CASE("cli error paths keep stdout as JSON") {
  TempDir dir;
  const auto missing = run_cli({"validate", dir.file("absent.json")});
  CHECK(missing.code == 1);
  CHECK(missing.doc["valid"] == false);

  const auto usage = run_cli({"signs"});
  CHECK(usage.code == 1);
  CHECK(usage.doc.contains("error"));

  const auto unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 1);

  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.doc.contains("help"));

  const auto nothing = run_cli({});
  CHECK(nothing.code == 1);
}

TEST_CASE("cli quiet flag silences the summary") {
  TempDir dir;
  const auto grid = dir.file("grid.json", testgrids::unknot2_json());
  const auto loud = run_cli({"validate", grid});
  const auto quiet = run_cli({"--quiet", "validate", grid});
  CHECK_FALSE(loud.err.empty());
  CHECK(quiet.err.empty());
  CHECK(loud.out == quiet.out);
}
