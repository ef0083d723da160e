#include "gridsign/signs.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "gridsign/errors.hpp"
#include "gridsign/gf2.hpp"
#include "gridsign/parallel.hpp"

namespace gridsign {

const char* convention_name(SignConvention c) {
  return c == SignConvention::True ? "true" : "false";
}

SignConvention flip(SignConvention c) {
  return c == SignConvention::True ? SignConvention::False : SignConvention::True;
}

namespace {

void check_total(const RectUniverse& u, const SignAssignment& s) {
  if (s.n != u.n()) fail(Errc::SizeMismatch, "sign assignment grid size does not match");
  if (static_cast<long long>(s.sign.size()) != u.rect_count())
    fail(Errc::MissingRectangle, "sign assignment is not total on the empty rectangles");
}

Constraint constraint_of_group(const Index2Group& g, long long state_rank) {
  Constraint c;
  c.kind = g.kind;
  c.state_rank = state_rank;
  c.param = g.param;
  if (g.kind == ClassKind::Square) {
    c.vars = {g.decomps[0].first, g.decomps[0].second, g.decomps[1].first, g.decomps[1].second};
    c.target = true;
  } else {
    c.vars = {g.decomps[0].first, g.decomps[0].second};
    c.target = g.kind == ClassKind::VerticalAnnulus;
  }
  std::sort(c.vars.begin(), c.vars.end());
  return c;
}

bool expected_parity(ClassKind kind, bool target, SignConvention conv) {
  if (kind == ClassKind::Square || conv == SignConvention::True) return target;
  return !target;
}

}  // namespace

ConstraintSystem build_constraints(const RectUniverse& u) {
  const long long num_states = u.state_count();
  std::vector<std::vector<Constraint>> per_state(static_cast<size_t>(num_states));

  parallel_for(num_states, [&](long long i) {
    auto groups = index2_classes(u.state(i), u);
    auto& local = per_state[static_cast<size_t>(i)];
    local.reserve(groups.size());
    for (auto& g : groups) {
      if (g.anomalous)
        fail(Errc::AnomalousClass,
             "state " + std::to_string(i) + ": " + (g.note.empty() ? "malformed class" : g.note));
      local.push_back(constraint_of_group(g, i));
    }
  });

  ConstraintSystem cs;
  cs.n = u.n();
  cs.variables = u.rect_count();
  // An annulus class is found from both of its endpoint states with the
  // same variable set; keep the first occurrence only.
  std::set<std::pair<std::vector<int>, bool>> seen;
  for (auto& bucket : per_state)
    for (auto& c : bucket)
      if (seen.emplace(c.vars, c.target).second) cs.rows.push_back(std::move(c));
  return cs;
}

SignAssignment solve_signs(const RectUniverse& u, SolveStats* stats) {
  return solve_signs(u, build_constraints(u), stats);
}

SignAssignment solve_signs(const RectUniverse& u, const ConstraintSystem& cs, SolveStats* stats) {
  Gf2Solver solver(static_cast<int>(cs.variables));
  for (const auto& row : cs.rows) solver.add_row(row.vars, row.target);
  solver.finalize();
  if (solver.inconsistent())
    fail(Errc::Inconsistent, "constraint system is inconsistent; this indicates a bug");

  SignAssignment s;
  s.n = u.n();
  s.convention = SignConvention::True;
  const auto bits = solver.particular_solution();
  s.sign.resize(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) s.sign[i] = bits[i] ? -1 : +1;

  if (stats != nullptr) {
    stats->variables = cs.variables;
    stats->rank = solver.rank();
    stats->kernel_dim = cs.variables - solver.rank();
  }
  return s;
}

VerifyReport verify_axioms(const RectUniverse& u, const SignAssignment& s, SignConvention convention) {
  return verify_axioms(u, build_constraints(u), s, convention);
}

VerifyReport verify_axioms(const RectUniverse& u, const ConstraintSystem& cs, const SignAssignment& s,
                           SignConvention convention) {
  check_total(u, s);
  VerifyReport rep;
  rep.constraints_checked = static_cast<long long>(cs.rows.size());
  for (const auto& row : cs.rows) {
    int product = 1;
    for (int var : row.vars) product *= s.sign[static_cast<size_t>(var)];
    const int expected = expected_parity(row.kind, row.target, convention) ? -1 : +1;
    if (product != expected) rep.violations.push_back(Violation{row, product, expected});
  }
  rep.pass = rep.violations.empty();
  return rep;
}

SignAssignment gauge_apply(const RectUniverse& u, const SignAssignment& s, const GaugeFunction& f) {
  check_total(u, s);
  if (f.n != u.n() || static_cast<long long>(f.value.size()) != u.state_count())
    fail(Errc::SizeMismatch, "gauge function size does not match the state set");
  SignAssignment out = s;
  const long long num_states = u.state_count();
  for (long long st = 0; st < num_states; ++st) {
    auto [lo, hi] = u.rect_range(st);
    const int fs = f.value[static_cast<size_t>(st)];
    for (int i = lo; i < hi; ++i)
      out.sign[static_cast<size_t>(i)] = static_cast<std::int8_t>(
          fs * f.value[static_cast<size_t>(u.end_rank(i))] * s.sign[static_cast<size_t>(i)]);
  }
  return out;
}

GaugeDiffResult gauge_difference(const RectUniverse& u, const SignAssignment& a, const SignAssignment& b) {
  check_total(u, a);
  check_total(u, b);
  if (a.convention != b.convention)
    fail(Errc::MalformedInput, "gauge difference requires matching conventions");

  const long long num_states = u.state_count();
  GaugeDiffResult res;
  res.f.n = u.n();
  res.f.value.assign(static_cast<size_t>(num_states), 0);
  res.f.value[0] = +1;

  // Spanning tree by breadth-first search from the identity state.
  std::deque<long long> queue = {0};
  while (!queue.empty()) {
    const long long st = queue.front();
    queue.pop_front();
    auto [lo, hi] = u.rect_range(st);
    for (int i = lo; i < hi; ++i) {
      const long long to = u.end_rank(i);
      if (res.f.value[static_cast<size_t>(to)] != 0) continue;
      const int ratio = a.sign[static_cast<size_t>(i)] * b.sign[static_cast<size_t>(i)];
      res.f.value[static_cast<size_t>(to)] =
          static_cast<std::int8_t>(ratio * res.f.value[static_cast<size_t>(st)]);
      queue.push_back(to);
    }
  }

  for (long long st = 0; st < num_states; ++st) {
    if (res.f.value[static_cast<size_t>(st)] == 0) {
      res.status = GaugeDiffStatus::DisconnectedStates;
      res.note = "state transition graph is disconnected";
      return res;
    }
  }

  for (long long st = 0; st < num_states; ++st) {
    auto [lo, hi] = u.rect_range(st);
    for (int i = lo; i < hi; ++i) {
      const int lhs = res.f.value[static_cast<size_t>(st)] *
                      res.f.value[static_cast<size_t>(u.end_rank(i))] * a.sign[static_cast<size_t>(i)];
      if (lhs != b.sign[static_cast<size_t>(i)]) {
        res.status = GaugeDiffStatus::NotGaugeEquivalent;
        res.note = "cycle inconsistency at rectangle " + std::to_string(i);
        return res;
      }
    }
  }
  res.status = GaugeDiffStatus::Found;
  return res;
}

SignAssignment twist(const RectUniverse& u, const SignAssignment& s) {
  check_total(u, s);
  SignAssignment out = s;
  out.convention = flip(s.convention);
  const long long num_states = u.state_count();
  for (long long st = 0; st < num_states; ++st) {
    if (perm_parity_sign(u.state(st).sigma) > 0) continue;
    auto [lo, hi] = u.rect_range(st);
    for (int i = lo; i < hi; ++i) out.sign[static_cast<size_t>(i)] = static_cast<std::int8_t>(-s.sign[static_cast<size_t>(i)]);
  }
  return out;
}

SolutionCount count_solutions(const RectUniverse& u) {
  SolveStats stats;
  solve_signs(u, &stats);
  SolutionCount c;
  c.variables = stats.variables;
  c.rank = stats.rank;
  c.kernel_dim = stats.kernel_dim;
  c.solutions = power_of_two_decimal(stats.kernel_dim);
  return c;
}

std::vector<SignAssignment> enumerate_solutions(const RectUniverse& u) {
  if (u.n() > kEnumerateBound)
    fail(Errc::BoundExceeded, "solution enumeration is limited to n <= " + std::to_string(kEnumerateBound));

  const ConstraintSystem cs = build_constraints(u);
  Gf2Solver solver(static_cast<int>(cs.variables));
  for (const auto& row : cs.rows) solver.add_row(row.vars, row.target);
  solver.finalize();
  if (solver.inconsistent())
    fail(Errc::Inconsistent, "constraint system is inconsistent; this indicates a bug");

  const auto base = solver.particular_solution();
  const auto kernel = solver.kernel_basis();
  const size_t k = kernel.size();

  std::vector<SignAssignment> out;
  out.reserve(size_t{1} << k);
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    auto bits = base;
    for (size_t b = 0; b < k; ++b)
      if (mask & (size_t{1} << b))
        for (int var : kernel[b]) bits[static_cast<size_t>(var)] ^= 1;
    SignAssignment s;
    s.n = u.n();
    s.convention = SignConvention::True;
    s.sign.resize(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) s.sign[i] = bits[i] ? -1 : +1;
    out.push_back(std::move(s));
  }
  return out;
}

SignAssignment orientation_to_signs(const RectUniverse& u, const OrientationSystem& o) {
  if (o.n != u.n() || static_cast<long long>(o.eps.size()) != u.state_count())
    fail(Errc::SizeMismatch, "orientation system size does not match the state set");
  if (o.eps[0] != +1)
    fail(Errc::MalformedInput, "orientation system must take value +1 at the identity state");
  GaugeFunction f{o.n, o.eps};
  return gauge_apply(u, solve_signs(u), f);
}

OrientationSystem signs_to_orientation(const RectUniverse& u, const SignAssignment& s) {
  if (s.convention != SignConvention::True)
    fail(Errc::MalformedInput, "orientation extraction requires the true convention");
  const SignAssignment canonical = solve_signs(u);
  GaugeDiffResult diff = gauge_difference(u, canonical, s);
  if (diff.status == GaugeDiffStatus::DisconnectedStates)
    fail(Errc::DisconnectedStates, diff.note);
  if (diff.status != GaugeDiffStatus::Found)
    fail(Errc::NotGaugeEquivalent,
         "true sign assignment outside the canonical gauge orbit; this indicates a bug");
  return OrientationSystem{u.n(), std::move(diff.f.value)};
}

std::string power_of_two_decimal(long long exponent) {
  if (exponent < 0) fail(Errc::Internal, "negative exponent");
  std::vector<int> digits = {1};  // little-endian decimal
  for (long long i = 0; i < exponent; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      const int v = d * 2 + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry) digits.push_back(carry);
  }
  std::string s(digits.rbegin(), digits.rend());
  for (auto& ch : s) ch = static_cast<char>('0' + ch);
  return s;
}

}  // namespace gridsign
