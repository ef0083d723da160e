#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "gridsign/complex.hpp"

namespace gridsign {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;  // row major

struct SnfResult {
  std::vector<BigInt> factors;  // d1 | d2 | ..., all positive
  bool has_transforms = false;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols; u * a * v = diag(factors)
};

// Smallest-absolute-value pivoting with exact arbitrary-precision
// arithmetic throughout.
SnfResult smith_normal_form(IntMatrix a, bool with_transforms = false);

long long rank_z2(const IntMatrix& a);

enum class CoefficientRing { Z, Z2 };

struct HomologyEntry {
  int maslov = 0;
  int alexander2 = 0;
  long long free_rank = 0;          // dimension when computed over Z/2
  std::vector<long long> torsion;   // invariant factors > 1, divisibility order

  bool operator==(const HomologyEntry&) const = default;
};

struct HomologyTable {
  std::vector<HomologyEntry> entries;  // sorted by (alexander2, maslov)

  bool operator==(const HomologyTable&) const = default;
};

// Blockwise per Alexander grading: the differential preserves 2A and
// drops M by one, so each block is an independent finite complex.
HomologyTable bigraded_homology(const BigradedComplex& c, CoefficientRing ring);

// Coefficient of t^A keyed by 2A; zero coefficients dropped.
std::map<int, long long> euler_characteristic(const HomologyTable& t);

struct TrueFalseReport {
  HomologyTable true_table;
  HomologyTable false_table;
  bool agree = false;
};

// Integer homology of the tilde complex under the canonical solution and
// under its twist; agreement is computed, not assumed.
TrueFalseReport compare_true_false(const GridDiagram& d, int bound = kDefaultEnumerationBound);

}  // namespace gridsign
