#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridsign/rect.hpp"

namespace gridsign {

// Sign conventions for the annulus constraint families. The true
// convention demands product -1 on every vertical thin annulus and +1 on
// every horizontal one; the false convention flips both targets. The
// square family is shared.
enum class SignConvention { True, False };

const char* convention_name(SignConvention c);
SignConvention flip(SignConvention c);

// Total map from the empty rectangles of a universe to {-1,+1}, stored in
// canonical rectangle order.
struct SignAssignment {
  int n = 0;
  SignConvention convention = SignConvention::True;
  std::vector<std::int8_t> sign;

  bool operator==(const SignAssignment&) const = default;
};

struct GaugeFunction {
  int n = 0;
  std::vector<std::int8_t> value;  // per state, lexicographic order
};

// Orientation choice over each reference class relative to the canonical
// solution; the identity state is pinned to +1. The pair (f, -f) of gauge
// functions acts identically, so this normalization makes the
// correspondence with sign assignments one-to-one.
struct OrientationSystem {
  int n = 0;
  std::vector<std::int8_t> eps;  // per state, lexicographic order; eps[0] == +1
};

// One GF(2) row. Encoding sign = (-1)^bit: vertical rows target parity 1
// over 2 variables, horizontal rows parity 0 over 2, square rows parity 1
// over 4. Targets are stored for the true convention.
struct Constraint {
  ClassKind kind = ClassKind::Square;
  long long state_rank = 0;  // state the class was collected from
  int param = -1;            // annulus column or row
  std::vector<int> vars;     // universe rectangle indices, ascending
  bool target = false;
};

struct ConstraintSystem {
  int n = 0;
  long long variables = 0;
  std::vector<Constraint> rows;  // deduplicated, deterministic order
};

ConstraintSystem build_constraints(const RectUniverse& u);

struct SolveStats {
  long long variables = 0;
  long long rank = 0;
  long long kernel_dim = 0;
};

// Canonical true solution: unique reduced echelon form with
// lexicographically smallest pivots, free variables at +1.
SignAssignment solve_signs(const RectUniverse& u, SolveStats* stats = nullptr);
SignAssignment solve_signs(const RectUniverse& u, const ConstraintSystem& cs, SolveStats* stats = nullptr);

struct Violation {
  Constraint constraint;
  int observed = 0;
  int expected = 0;
};

struct VerifyReport {
  bool pass = true;
  long long constraints_checked = 0;
  std::vector<Violation> violations;
};

// Exhaustive product check of every constraint class against the given
// convention's targets, independent of the GF(2) encoding.
VerifyReport verify_axioms(const RectUniverse& u, const SignAssignment& s, SignConvention convention);
VerifyReport verify_axioms(const RectUniverse& u, const ConstraintSystem& cs, const SignAssignment& s,
                           SignConvention convention);

// s'(r) = f(start) * f(end) * s(r); preserves each convention's family.
SignAssignment gauge_apply(const RectUniverse& u, const SignAssignment& s, const GaugeFunction& f);

enum class GaugeDiffStatus { Found, NotGaugeEquivalent, DisconnectedStates };

struct GaugeDiffResult {
  GaugeDiffStatus status = GaugeDiffStatus::Found;
  GaugeFunction f;  // valid when Found; normalized to +1 at the identity
  std::string note;
};

// Propagates sign ratios over a spanning tree of the state-transition
// graph and checks the remaining edges.
GaugeDiffResult gauge_difference(const RectUniverse& u, const SignAssignment& a, const SignAssignment& b);

// s'(r) = sgn(start) * s(r); flips the convention, involutive.
SignAssignment twist(const RectUniverse& u, const SignAssignment& s);

struct SolutionCount {
  long long variables = 0;
  long long rank = 0;
  long long kernel_dim = 0;
  std::string solutions;  // decimal string of 2^kernel_dim
};

SolutionCount count_solutions(const RectUniverse& u);

inline constexpr int kEnumerateBound = 3;

// Every solution of the true system, canonical order; n <= 3 only.
std::vector<SignAssignment> enumerate_solutions(const RectUniverse& u);

SignAssignment orientation_to_signs(const RectUniverse& u, const OrientationSystem& o);
OrientationSystem signs_to_orientation(const RectUniverse& u, const SignAssignment& s);

std::string power_of_two_decimal(long long exponent);

}  // namespace gridsign
