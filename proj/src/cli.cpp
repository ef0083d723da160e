#include "gridsign/cli.hpp"

#include <ostream>

#include "CLI11.hpp"

#include "gridsign/complex.hpp"
#include "gridsign/errors.hpp"
#include "gridsign/homology.hpp"
#include "gridsign/io.hpp"

namespace gridsign {

namespace {

constexpr int kDefaultCompareBound = 5;

struct Output {
  Json doc;
  int code = 0;
  std::string summary;
};

SignConvention parse_convention(const std::string& s) {
  if (s == "true") return SignConvention::True;
  if (s == "false") return SignConvention::False;
  fail(Errc::MalformedInput, "convention must be 'true' or 'false'");
}

CoefficientRing parse_ring(const std::string& s) {
  if (s == "z") return CoefficientRing::Z;
  if (s == "z2") return CoefficientRing::Z2;
  fail(Errc::MalformedInput, "coefficients must be 'z' or 'z2'");
}

ComplexVersion parse_version(const std::string& s) {
  if (s == "full") return ComplexVersion::Full;
  if (s == "tilde") return ComplexVersion::Tilde;
  fail(Errc::MalformedInput, "version must be 'full' or 'tilde'");
}

GridDiagram load_grid(const std::string& path) {
  return parse_grid(read_file(path));
}

Output cmd_validate(const std::string& grid_path) {
  Output out;
  try {
    const GridDiagram d = load_grid(grid_path);
    out.doc["valid"] = true;
    out.doc["n"] = d.n;
    out.doc["m"] = d.m;
    Json comps = Json::array();
    for (int c : d.x_component) comps.push_back(c + 1);
    out.doc["components"] = std::move(comps);
    out.summary = "valid grid: n=" + std::to_string(d.n) + ", " + std::to_string(d.m) + " component(s)";
  } catch (const Error& e) {
    out.doc["valid"] = false;
    out.doc["error"] = Json{{"code", errc_name(e.code())}, {"message", e.what()}};
    out.code = 1;
    out.summary = std::string("invalid grid: ") + e.what();
  }
  return out;
}

Output cmd_signs_solve(const std::string& grid_path, const std::string& out_path, int bound) {
  const GridDiagram d = load_grid(grid_path);
  const RectUniverse u(d.n, bound);
  SolveStats stats;
  const SignAssignment s = solve_signs(u, &stats);
  Output out;
  out.doc = sign_to_json(u, s);
  if (!out_path.empty()) write_file(out_path, emit_report(out.doc));
  out.summary = "solved: " + std::to_string(stats.variables) + " rectangles, rank " +
                std::to_string(stats.rank) + ", kernel dimension " + std::to_string(stats.kernel_dim);
  return out;
}

Output cmd_signs_verify(const std::string& grid_path, const std::string& signs_path,
                        const std::string& convention_flag, int bound) {
  const GridDiagram d = load_grid(grid_path);
  const RectUniverse u(d.n, bound);
  const SignAssignment s = sign_from_json(read_file(signs_path), u);
  const SignConvention conv = convention_flag.empty() ? s.convention : parse_convention(convention_flag);
  const VerifyReport rep = verify_axioms(u, s, conv);
  Output out;
  out.doc = verify_report_json(u, rep, conv);
  out.code = rep.pass ? 0 : 2;
  out.summary = rep.pass
                    ? "verified: " + std::to_string(rep.constraints_checked) + " constraints hold"
                    : "verification failed: " + std::to_string(rep.violations.size()) + " violated class(es)";
  return out;
}

Output cmd_signs_twist(const std::string& signs_path, const std::string& grid_path,
                       const std::string& out_path, int bound) {
  const GridDiagram d = load_grid(grid_path);
  const RectUniverse u(d.n, bound);
  const SignAssignment s = sign_from_json(read_file(signs_path), u);
  const SignAssignment t = twist(u, s);
  Output out;
  out.doc = sign_to_json(u, t);
  if (!out_path.empty()) write_file(out_path, emit_report(out.doc));
  out.summary = std::string("twisted: convention is now '") + convention_name(t.convention) + "'";
  return out;
}

Output cmd_signs_gauge_diff(const std::string& grid_path, const std::string& s1_path,
                            const std::string& s2_path, int bound) {
  const GridDiagram d = load_grid(grid_path);
  const RectUniverse u(d.n, bound);
  const SignAssignment a = sign_from_json(read_file(s1_path), u);
  const SignAssignment b = sign_from_json(read_file(s2_path), u);
  const GaugeDiffResult res = gauge_difference(u, a, b);
  Output out;
  switch (res.status) {
    case GaugeDiffStatus::Found: {
      out.doc["status"] = "found";
      out.doc["gauge_equivalent"] = true;
      Json f = Json::array();
      for (auto v : res.f.value) f.push_back(static_cast<int>(v));
      out.doc["f"] = std::move(f);
      out.doc["state_order"] = "lexicographic";
      out.summary = "gauge equivalent";
      break;
    }
    case GaugeDiffStatus::NotGaugeEquivalent:
      out.doc["status"] = "not_equivalent";
      out.doc["gauge_equivalent"] = false;
      out.doc["reason"] = res.note;
      out.code = 2;
      out.summary = "not gauge equivalent";
      break;
    case GaugeDiffStatus::DisconnectedStates:
      out.doc["status"] = "disconnected";
      out.doc["gauge_equivalent"] = nullptr;
      out.doc["reason"] = res.note;
      out.code = 2;
      out.summary = "state graph disconnected";
      break;
  }
  return out;
}

Output cmd_signs_count(const std::string& grid_path, int bound) {
  const GridDiagram d = load_grid(grid_path);
  const RectUniverse u(d.n, bound);
  const SolutionCount c = count_solutions(u);
  Output out;
  out.doc["n"] = d.n;
  out.doc["variables"] = c.variables;
  out.doc["rank"] = c.rank;
  out.doc["kernel_dimension"] = c.kernel_dim;
  out.doc["solutions"] = c.solutions;
  out.summary = c.solutions + " solutions (kernel dimension " + std::to_string(c.kernel_dim) + ")";
  return out;
}

Output cmd_complex_check(const std::string& grid_path, const std::string& signs_path,
                         const std::string& version_flag, const std::string& dump_path, int bound) {
  const GridDiagram d = load_grid(grid_path);
  const RectUniverse u(d.n, bound);
  const SignAssignment s = sign_from_json(read_file(signs_path), u);
  const ComplexVersion version = parse_version(version_flag);

  Output out;
  const VerifyReport rep = verify_axioms(u, s, s.convention);
  if (!rep.pass) {
    out.doc = verify_report_json(u, rep, s.convention);
    out.code = 2;
    out.summary = "refused: sign assignment fails verification";
    return out;
  }

  const BigradedComplex c = build_complex(d, u, s, version);
  const bool zero = all_zero(d_squared(c));
  long long entries = 0;
  for (const auto& col : c.diff) entries += static_cast<long long>(col.size());

  out.doc["version"] = version == ComplexVersion::Full ? "full" : "tilde";
  out.doc["convention"] = convention_name(s.convention);
  out.doc["verified"] = true;
  out.doc["generators"] = static_cast<long long>(c.generators.size());
  out.doc["differential_entries"] = entries;
  out.doc["d_squared_zero"] = zero;
  if (!dump_path.empty()) write_file(dump_path, emit_report(complex_dump_json(c)));
  out.code = zero ? 0 : 3;
  out.summary = zero ? "d^2 = 0" : "d^2 != 0 for a verified assignment";
  return out;
}

Output cmd_homology(const std::string& grid_path, const std::string& signs_path,
                    const std::string& ring_flag, const std::string& out_path, bool euler_only,
                    int bound) {
  const GridDiagram d = load_grid(grid_path);
  const RectUniverse u(d.n, bound);
  const SignAssignment s = sign_from_json(read_file(signs_path), u);
  const CoefficientRing ring = parse_ring(ring_flag);

  Output out;
  const VerifyReport rep = verify_axioms(u, s, s.convention);
  if (!rep.pass) {
    out.doc = verify_report_json(u, rep, s.convention);
    out.code = 2;
    out.summary = "refused: sign assignment fails verification";
    return out;
  }

  const BigradedComplex c = build_complex(d, u, s, ComplexVersion::Tilde);
  const HomologyTable table = bigraded_homology(c, ring);
  const auto chi = euler_characteristic(table);

  out.doc["grid"] = grid_to_json(d);
  out.doc["convention"] = convention_name(s.convention);
  if (euler_only) {
    out.doc["euler"] = euler_to_json(chi);
    out.summary = "euler characteristic over " + std::to_string(chi.size()) + " Alexander grading(s)";
  } else {
    out.doc["coefficients"] = ring == CoefficientRing::Z ? "z" : "z2";
    out.doc["entries"] = table_entries_json(table);
    out.doc["euler"] = euler_to_json(chi);
    out.summary = std::to_string(table.entries.size()) + " nonzero bigrading(s)";
  }
  if (!out_path.empty()) write_file(out_path, emit_report(out.doc));
  return out;
}

// Universal coefficients: the Z/2 dimension at Maslov grading M equals
// the free rank plus the even torsion at M and at M-1.
bool z2_consistent(const HomologyTable& z, const HomologyTable& z2) {
  std::map<std::pair<int, int>, long long> free_rank, even_torsion, dim2;
  for (const auto& e : z.entries) {
    free_rank[{e.alexander2, e.maslov}] = e.free_rank;
    long long even = 0;
    for (long long t : e.torsion) even += t % 2 == 0;
    if (even) even_torsion[{e.alexander2, e.maslov}] = even;
  }
  for (const auto& e : z2.entries) dim2[{e.alexander2, e.maslov}] = e.free_rank;

  std::map<std::pair<int, int>, long long> expected;
  for (const auto& [key, v] : free_rank) expected[key] += v;
  for (const auto& [key, v] : even_torsion) {
    expected[key] += v;
    expected[{key.first, key.second + 1}] += v;
  }
  for (auto it = expected.begin(); it != expected.end();)
    it = it->second == 0 ? expected.erase(it) : std::next(it);
  return expected == dim2;
}

Output cmd_compare(const std::string& grid_path, int max_n, int bound) {
  const GridDiagram d = load_grid(grid_path);
  if (d.n > max_n)
    fail(Errc::BoundExceeded,
         "n=" + std::to_string(d.n) + " exceeds --max-n " + std::to_string(max_n));

  const RectUniverse u(d.n, bound);
  const ConstraintSystem cs = build_constraints(u);
  const SignAssignment s = solve_signs(u, cs);
  const SignAssignment st = twist(u, s);
  if (!verify_axioms(u, cs, s, SignConvention::True).pass ||
      !verify_axioms(u, cs, st, SignConvention::False).pass)
    fail(Errc::Internal, "solver output failed verification");

  const BigradedComplex ct = build_complex(d, u, s, ComplexVersion::Tilde);
  const BigradedComplex cf = build_complex(d, u, st, ComplexVersion::Tilde);
  const HomologyTable tz = bigraded_homology(ct, CoefficientRing::Z);
  const HomologyTable fz = bigraded_homology(cf, CoefficientRing::Z);
  const HomologyTable tz2 = bigraded_homology(ct, CoefficientRing::Z2);
  const HomologyTable fz2 = bigraded_homology(cf, CoefficientRing::Z2);

  Output out;
  out.doc["grid"] = grid_to_json(d);
  out.doc["true"] = Json{{"entries", table_entries_json(tz)}, {"euler", euler_to_json(euler_characteristic(tz))}};
  out.doc["false"] = Json{{"entries", table_entries_json(fz)}, {"euler", euler_to_json(euler_characteristic(fz))}};
  out.doc["tables_agree"] = tz.entries == fz.entries;
  out.doc["z2_consistent"] = Json{{"true", z2_consistent(tz, tz2)}, {"false", z2_consistent(fz, fz2)}};
  out.summary = tz.entries == fz.entries ? "true and false tables agree" : "true and false tables differ";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sign assignments and integer grid homology for grid diagrams"};
  app.name("gridsign");

  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress the stderr summary");
  int bound = kDefaultEnumerationBound;
  app.add_option("--bound", bound, "state enumeration bound (default 8)")->check(CLI::Range(1, 12));

  std::string grid_path, signs_path, s2_path, out_path, dump_path;
  std::string convention_flag, version_flag = "tilde", ring_flag = "z";
  int max_n = kDefaultCompareBound;

  auto* validate = app.add_subcommand("validate", "validate a grid file");
  validate->add_option("FILE", grid_path, "grid file")->required();

  auto* signs = app.add_subcommand("signs", "sign assignment operations");
  signs->require_subcommand(1);
  auto* solve = signs->add_subcommand("solve", "solve for the canonical true sign assignment");
  solve->add_option("FILE", grid_path, "grid file")->required();
  solve->add_option("--out", out_path, "also write the sign file here");
  auto* verify = signs->add_subcommand("verify", "verify a sign assignment against its axioms");
  verify->add_option("FILE", grid_path, "grid file")->required();
  verify->add_option("SIGNS", signs_path, "sign file")->required();
  verify->add_option("--convention", convention_flag, "override the file's convention (true|false)");
  auto* twist_cmd = signs->add_subcommand("twist", "twist a sign assignment by the state parity");
  twist_cmd->add_option("SIGNS", signs_path, "sign file")->required();
  twist_cmd->add_option("--grid", grid_path, "grid file")->required();
  twist_cmd->add_option("--out", out_path, "also write the sign file here");
  auto* gauge_diff = signs->add_subcommand("gauge-diff", "gauge function relating two sign assignments");
  gauge_diff->add_option("FILE", grid_path, "grid file")->required();
  gauge_diff->add_option("S1", signs_path, "first sign file")->required();
  gauge_diff->add_option("S2", s2_path, "second sign file")->required();
  auto* count = signs->add_subcommand("count", "count the true sign assignments");
  count->add_option("FILE", grid_path, "grid file")->required();

  auto* complex_cmd = app.add_subcommand("complex", "chain complex operations");
  complex_cmd->require_subcommand(1);
  auto* check = complex_cmd->add_subcommand("check", "build the complex and check d^2 = 0");
  check->add_option("FILE", grid_path, "grid file")->required();
  check->add_option("SIGNS", signs_path, "sign file")->required();
  check->add_option("--version", version_flag, "full|tilde (default tilde)");
  check->add_option("--dump", dump_path, "write a complex dump here");

  auto* homology_cmd = app.add_subcommand("homology", "bigraded homology of the tilde complex");
  homology_cmd->add_option("FILE", grid_path, "grid file")->required();
  homology_cmd->add_option("SIGNS", signs_path, "sign file")->required();
  homology_cmd->add_option("--coefficients", ring_flag, "z|z2 (default z)");
  homology_cmd->add_option("--out", out_path, "also write the report here");

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of the tilde homology");
  euler_cmd->add_option("FILE", grid_path, "grid file")->required();
  euler_cmd->add_option("SIGNS", signs_path, "sign file")->required();

  auto* compare_cmd = app.add_subcommand("compare", "true-vs-false and Z-vs-Z/2 comparison report");
  compare_cmd->add_option("FILE", grid_path, "grid file")->required();
  compare_cmd->add_option("--max-n", max_n, "refuse grids larger than this (default 5)");

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    Json doc;
    doc["help"] = app.help();
    out << emit_report(doc);
    return 0;
  } catch (const CLI::ParseError& e) {
    Json doc;
    doc["error"] = Json{{"code", "usage"}, {"message", e.what()}};
    out << emit_report(doc);
    if (!quiet) err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    Output result;
    if (validate->parsed())
      result = cmd_validate(grid_path);
    else if (solve->parsed())
      result = cmd_signs_solve(grid_path, out_path, bound);
    else if (verify->parsed())
      result = cmd_signs_verify(grid_path, signs_path, convention_flag, bound);
    else if (twist_cmd->parsed())
      result = cmd_signs_twist(signs_path, grid_path, out_path, bound);
    else if (gauge_diff->parsed())
      result = cmd_signs_gauge_diff(grid_path, signs_path, s2_path, bound);
    else if (count->parsed())
      result = cmd_signs_count(grid_path, bound);
    else if (check->parsed())
      result = cmd_complex_check(grid_path, signs_path, version_flag, dump_path, bound);
    else if (homology_cmd->parsed())
      result = cmd_homology(grid_path, signs_path, ring_flag, out_path, false, bound);
    else if (euler_cmd->parsed())
      result = cmd_homology(grid_path, signs_path, "z", out_path, true, bound);
    else if (compare_cmd->parsed())
      result = cmd_compare(grid_path, max_n, bound);
    else
      fail(Errc::MalformedInput, "no subcommand given");

    out << emit_report(result.doc);
    if (!quiet && !result.summary.empty()) err << result.summary << "\n";
    return result.code;
  } catch (const Error& e) {
    Json doc;
    doc["error"] = Json{{"code", errc_name(e.code())}, {"message", e.what()}};
    out << emit_report(doc);
    if (!quiet) err << "error: " << e.what() << "\n";
    return errc_category(e.code());
  } catch (const std::exception& e) {
    Json doc;
    doc["error"] = Json{{"code", "internal"}, {"message", e.what()}};
    out << emit_report(doc);
    if (!quiet) err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace gridsign
