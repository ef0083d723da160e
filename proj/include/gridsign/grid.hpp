#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gridsign {

// An n x n toroidal diagram with one X and one O marking per row and per
// column. Markings are stored per row, bottom row first, 0-indexed
// internally: O_i occupies cell (o_col[i], i) and X_i cell (x_col[i], i),
// where cell (c, r) covers [c,c+1] x [r,r+1] and the marking sits at the
// cell center (c + 1/2, r + 1/2).
struct GridDiagram {
  int n = 0;
  int m = 0;                     // number of link components
  std::vector<int> o_col;        // size n
  std::vector<int> x_col;        // size n
  std::vector<int> x_component;  // component of X_i, values in [0, m)
};

// Validates the marking permutations and derives the component structure.
// Column lists are 1-indexed as they appear in grid files.
GridDiagram make_grid_diagram(int n, const std::vector<int>& o_cols_1, const std::vector<int>& x_cols_1);

// Marking trace on 0-indexed columns: X_i connects to the O in its row,
// which connects to the X in its column. Returns the cycle count and the
// per-X component map, components numbered by smallest X index.
std::pair<int, std::vector<int>> link_components(const std::vector<int>& o_col, const std::vector<int>& x_col);

}  // namespace gridsign
