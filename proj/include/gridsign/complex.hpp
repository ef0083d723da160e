#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "gridsign/grading.hpp"
#include "gridsign/rect.hpp"
#include "gridsign/signs.hpp"

namespace gridsign {

// Monomial in the ground ring: one u variable per O marking, one v
// variable per link component. Exponent vectors are always sized (n, m);
// all zeros is the constant monomial. Degrees: deg u_i = (M -2, 2A -2),
// deg v_j = (M 0, 2A +2).
struct Monomial {
  std::vector<int> u;
  std::vector<int> v;

  bool is_constant() const;
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

struct Term {
  long long coef = 0;
  Monomial mon;

  bool operator==(const Term&) const = default;
};

using Poly = std::vector<Term>;  // sorted by monomial, zero coefficients dropped

Poly poly_normalize(std::vector<Term> terms);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, long long c);
Monomial mon_mul(const Monomial& a, const Monomial& b);
int maslov_degree(const Monomial& m);
int alexander2_degree(const Monomial& m);

enum class ComplexVersion { Full, Tilde };

inline constexpr int kDefaultFullComplexBound = 6;

// Sparse columns: per source generator, (target rank, coefficient) pairs
// with ascending targets and nonzero polynomials.
using SparseColumns = std::vector<std::vector<std::pair<long long, Poly>>>;

struct BigradedComplex {
  ComplexVersion version = ComplexVersion::Tilde;
  int n = 0;
  int m = 0;
  std::vector<GridState> generators;  // lexicographic
  std::vector<Grading> gradings;
  SparseColumns diff;
};

// The full differential weights each rectangle by its sign times
// u_i^{#(r . O_i)} v_{comp(j)}^{#(r . X_j)}; the tilde version keeps only
// rectangles that avoid every marking.
BigradedComplex build_complex(const GridDiagram& d, const RectUniverse& u, const SignAssignment& s,
                              ComplexVersion version, int full_bound = kDefaultFullComplexBound);

SparseColumns d_squared(const BigradedComplex& c);
bool all_zero(const SparseColumns& cols);

// Sets the selected variables to zero: terms containing them vanish.
BigradedComplex specialize(const BigradedComplex& c, const std::vector<std::uint8_t>& kill_u,
                           const std::vector<std::uint8_t>& kill_v);

}  // namespace gridsign
