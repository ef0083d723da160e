#include "gridsign/io.hpp"

#include <fstream>
#include <sstream>

#include "gridsign/errors.hpp"

namespace gridsign {

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

void require_keys(const Json& obj, std::initializer_list<const char*> keys, const char* what) {
  if (!obj.is_object()) fail(Errc::MalformedInput, std::string(what) + " must be a JSON object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) fail(Errc::MalformedInput, std::string("unknown key '") + item.key() + "' in " + what);
  }
  for (const char* k : keys)
    if (!obj.contains(k)) fail(Errc::MalformedInput, std::string("missing key '") + k + "' in " + what);
}

int require_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) fail(Errc::MalformedInput, std::string(what) + " must be an integer");
  const long long x = v.get<long long>();
  if (x < -1000000 || x > 1000000) fail(Errc::MalformedInput, std::string(what) + " is out of range");
  return static_cast<int>(x);
}

std::vector<int> require_int_array(const Json& v, size_t len, const char* what) {
  if (!v.is_array() || v.size() != len)
    fail(Errc::MalformedInput, std::string(what) + " must be an array of length " + std::to_string(len));
  std::vector<int> out;
  out.reserve(len);
  for (const auto& e : v) out.push_back(require_int(e, what));
  return out;
}

}  // namespace

GridDiagram parse_grid(const std::string& text) {
  const Json j = parse_json(text);
  require_keys(j, {"n", "O", "X"}, "grid file");
  const int n = require_int(j.at("n"), "n");
  if (n < 1) fail(Errc::MalformedInput, "n must be positive");
  const auto o = require_int_array(j.at("O"), static_cast<size_t>(n), "O");
  const auto x = require_int_array(j.at("X"), static_cast<size_t>(n), "X");
  return make_grid_diagram(n, o, x);
}

Json grid_to_json(const GridDiagram& d) {
  Json j;
  j["n"] = d.n;
  Json o = Json::array(), x = Json::array();
  for (int r = 0; r < d.n; ++r) {
    o.push_back(d.o_col[r] + 1);
    x.push_back(d.x_col[r] + 1);
  }
  j["O"] = std::move(o);
  j["X"] = std::move(x);
  return j;
}

Json state_json(const GridState& x) {
  Json a = Json::array();
  for (int v : x.sigma) a.push_back(v + 1);
  return a;
}

Json rect_key_json(const EmptyRect& r) {
  Json j;
  j["state"] = state_json(r.start);
  j["sw"] = Json::array({r.sw_col, r.sw_row});
  j["w"] = r.w;
  j["h"] = r.h;
  return j;
}

Json sign_to_json(const RectUniverse& u, const SignAssignment& s) {
  if (static_cast<long long>(s.sign.size()) != u.rect_count())
    fail(Errc::MissingRectangle, "sign assignment is not total on the empty rectangles");
  Json j;
  j["n"] = u.n();
  j["convention"] = convention_name(s.convention);
  Json rects = Json::array();
  for (long long i = 0; i < u.rect_count(); ++i) {
    Json e = rect_key_json(u.rect(static_cast<int>(i)));
    e["sign"] = static_cast<int>(s.sign[static_cast<size_t>(i)]);
    rects.push_back(std::move(e));
  }
  j["rects"] = std::move(rects);
  return j;
}

SignAssignment sign_from_json(const std::string& text, const RectUniverse& u) {
  const Json j = parse_json(text);
  require_keys(j, {"n", "convention", "rects"}, "sign file");
  const int n = require_int(j.at("n"), "n");
  if (n != u.n())
    fail(Errc::SizeMismatch,
         "sign file n=" + std::to_string(n) + " does not match grid n=" + std::to_string(u.n()));
  const auto& conv = j.at("convention");
  if (!conv.is_string() || (conv != "true" && conv != "false"))
    fail(Errc::MalformedInput, "convention must be \"true\" or \"false\"");

  SignAssignment s;
  s.n = n;
  s.convention = conv == "true" ? SignConvention::True : SignConvention::False;
  s.sign.assign(static_cast<size_t>(u.rect_count()), 0);
  std::vector<char> seen(static_cast<size_t>(u.rect_count()), 0);

  const auto& rects = j.at("rects");
  if (!rects.is_array()) fail(Errc::MalformedInput, "rects must be an array");
  for (const auto& e : rects) {
    require_keys(e, {"state", "sw", "w", "h", "sign"}, "rectangle entry");
    auto one_line = require_int_array(e.at("state"), static_cast<size_t>(n), "state");
    Perm sigma(one_line.size());
    for (size_t i = 0; i < one_line.size(); ++i) {
      if (one_line[i] < 1 || one_line[i] > n) fail(Errc::MalformedInput, "state entry out of range");
      sigma[i] = one_line[i] - 1;
    }
    if (!is_permutation(sigma)) fail(Errc::MalformedInput, "state is not a permutation");
    const auto sw = require_int_array(e.at("sw"), 2, "sw");
    const int w = require_int(e.at("w"), "w");
    const int h = require_int(e.at("h"), "h");
    const int sign = require_int(e.at("sign"), "sign");
    if (sign != 1 && sign != -1) fail(Errc::MalformedInput, "sign must be 1 or -1");
    const int idx = u.rect_index(GridState(std::move(sigma)), sw[0], sw[1], w, h);
    if (idx < 0) fail(Errc::MalformedInput, "unknown rectangle key in sign file");
    if (seen[static_cast<size_t>(idx)]) fail(Errc::DuplicateRectangle, "duplicate rectangle key in sign file");
    seen[static_cast<size_t>(idx)] = 1;
    s.sign[static_cast<size_t>(idx)] = static_cast<std::int8_t>(sign);
  }
  for (char c : seen)
    if (!c) fail(Errc::MissingRectangle, "sign file does not cover every empty rectangle");
  return s;
}

Json verify_report_json(const RectUniverse& u, const VerifyReport& rep, SignConvention convention) {
  Json j;
  j["verified"] = rep.pass;
  j["convention"] = convention_name(convention);
  j["constraints_checked"] = rep.constraints_checked;
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    Json e;
    e["kind"] = class_kind_name(v.constraint.kind);
    e["state"] = state_json(u.state(v.constraint.state_rank));
    if (v.constraint.kind != ClassKind::Square) e["param"] = v.constraint.param;
    Json rects = Json::array();
    for (int var : v.constraint.vars) rects.push_back(rect_key_json(u.rect(var)));
    e["rects"] = std::move(rects);
    e["observed"] = v.observed;
    e["expected"] = v.expected;
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json table_entries_json(const HomologyTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json je;
    je["M"] = e.maslov;
    je["A2"] = e.alexander2;
    je["free_rank"] = e.free_rank;
    je["torsion"] = e.torsion;
    entries.push_back(std::move(je));
  }
  return entries;
}

std::string a2_fraction(int alexander2) {
  if (alexander2 % 2 == 0) return std::to_string(alexander2 / 2);
  return std::to_string(alexander2) + "/2";
}

Json euler_to_json(const std::map<int, long long>& chi) {
  Json j = Json::object();
  for (const auto& [a2, coeff] : chi) j[a2_fraction(a2)] = coeff;
  return j;
}

Json complex_dump_json(const BigradedComplex& c) {
  Json j;
  j["version"] = c.version == ComplexVersion::Full ? "full" : "tilde";
  j["n"] = c.n;
  j["m"] = c.m;
  Json gens = Json::array();
  for (size_t g = 0; g < c.generators.size(); ++g) {
    Json jg;
    jg["state"] = state_json(c.generators[g]);
    jg["M"] = c.gradings[g].maslov;
    jg["A2"] = c.gradings[g].alexander2;
    Json entries = Json::array();
    for (const auto& [tgt, poly] : c.diff[g]) {
      Json je;
      je["to"] = state_json(c.generators[static_cast<size_t>(tgt)]);
      Json terms = Json::array();
      for (const auto& t : poly) {
        Json jt;
        jt["coef"] = t.coef;
        jt["u_exps"] = t.mon.u;
        jt["v_exps"] = t.mon.v;
        terms.push_back(std::move(jt));
      }
      je["terms"] = std::move(terms);
      entries.push_back(std::move(je));
    }
    jg["entries"] = std::move(entries);
    gens.push_back(std::move(jg));
  }
  j["generators"] = std::move(gens);
  return j;
}

std::string emit_report(const Json& doc) {
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MalformedInput, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::MalformedInput, "cannot write file: " + path);
  out << bytes;
  if (!out) fail(Errc::MalformedInput, "failed writing file: " + path);
}

}  // namespace gridsign
