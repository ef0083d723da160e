#include "gridsign/grid.hpp"

#include <string>

#include "gridsign/errors.hpp"

namespace gridsign {

std::pair<int, std::vector<int>> link_components(const std::vector<int>& o_col, const std::vector<int>& x_col) {
  const int n = static_cast<int>(o_col.size());
  std::vector<int> x_row_in_col(n, -1);
  for (int r = 0; r < n; ++r) x_row_in_col[x_col[r]] = r;

  std::vector<int> comp(n, -1);
  int m = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    int r = start;
    while (comp[r] == -1) {
      comp[r] = m;
      r = x_row_in_col[o_col[r]];
    }
    ++m;
  }
  return {m, comp};
}

GridDiagram make_grid_diagram(int n, const std::vector<int>& o_cols_1, const std::vector<int>& x_cols_1) {
  if (n < 1) fail(Errc::MalformedInput, "grid size must be positive");
  if (static_cast<int>(o_cols_1.size()) != n || static_cast<int>(x_cols_1.size()) != n)
    fail(Errc::MalformedInput, "marking lists must have length n");

  GridDiagram d;
  d.n = n;
  d.o_col.resize(n);
  d.x_col.resize(n);

  std::vector<char> o_seen(n, 0), x_seen(n, 0);
  for (int r = 0; r < n; ++r) {
    const int oc = o_cols_1[r], xc = x_cols_1[r];
    if (oc < 1 || oc > n || xc < 1 || xc > n)
      fail(Errc::NotPermutation, "marking column out of range in row " + std::to_string(r + 1));
    if (o_seen[oc - 1]) fail(Errc::NotPermutation, "O column " + std::to_string(oc) + " repeated");
    if (x_seen[xc - 1]) fail(Errc::NotPermutation, "X column " + std::to_string(xc) + " repeated");
    o_seen[oc - 1] = x_seen[xc - 1] = 1;
    if (oc == xc)
      fail(Errc::MarkingCollision, "X and O share a cell in row " + std::to_string(r + 1));
    d.o_col[r] = oc - 1;
    d.x_col[r] = xc - 1;
  }

  auto [m, comp] = link_components(d.o_col, d.x_col);
  d.m = m;
  d.x_component = std::move(comp);
  return d;
}

}  // namespace gridsign
