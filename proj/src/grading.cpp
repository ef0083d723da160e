#include "gridsign/grading.hpp"

#include <vector>

namespace gridsign {

long long strict_sw_pairs(std::span<const std::pair<int, int>> a,
                          std::span<const std::pair<int, int>> b) {
  long long count = 0;
  for (const auto& p : a)
    for (const auto& q : b)
      if (p.first < q.first && p.second < q.second) ++count;
  return count;
}

namespace {

using Points = std::vector<std::pair<int, int>>;

Points state_points(const GridState& x) {
  Points pts(static_cast<size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) pts[static_cast<size_t>(i)] = {2 * x.sigma[i], 2 * i};
  return pts;
}

Points marking_points(const std::vector<int>& cols) {
  Points pts(cols.size());
  for (size_t i = 0; i < cols.size(); ++i)
    pts[i] = {2 * cols[i] + 1, 2 * static_cast<int>(i) + 1};
  return pts;
}

// M_P(x) = J(x,x) - 2 J(x,P) + J(P,P) + 1 with J(A,B) the symmetrized
// strict-southwest count; the mixed term expands to I(x,P) + I(P,x), so
// everything stays in integers.
int maslov_against(const GridState& x, const std::vector<int>& cols) {
  const Points xs = state_points(x);
  const Points ps = marking_points(cols);
  const long long m = strict_sw_pairs(xs, xs) - strict_sw_pairs(xs, ps) - strict_sw_pairs(ps, xs) +
                      strict_sw_pairs(ps, ps) + 1;
  return static_cast<int>(m);
}

}  // namespace

int maslov(const GridState& x, const GridDiagram& d) {
  return maslov_against(x, d.o_col);
}

int alexander2(const GridState& x, const GridDiagram& d) {
  return maslov_against(x, d.o_col) - maslov_against(x, d.x_col) - (d.n - d.m);
}

Grading grading_of(const GridState& x, const GridDiagram& d) {
  const int mo = maslov_against(x, d.o_col);
  const int mx = maslov_against(x, d.x_col);
  return Grading{mo, mo - mx - (d.n - d.m)};
}

}  // namespace gridsign
