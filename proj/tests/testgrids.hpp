#pragma once

#include <string>

#include "gridsign/grid.hpp"

// Shared fixtures. All verified by the component traces in test_grid.cpp:
// unknot2/unknot3 and the 5x5 cyclic grid are one-component diagrams, the
// two 4x4 grids split into two components.
namespace testgrids {

inline gridsign::GridDiagram unknot2() { return gridsign::make_grid_diagram(2, {1, 2}, {2, 1}); }
inline gridsign::GridDiagram unknot3() { return gridsign::make_grid_diagram(3, {2, 3, 1}, {1, 2, 3}); }
inline gridsign::GridDiagram split4() { return gridsign::make_grid_diagram(4, {1, 2, 3, 4}, {2, 1, 4, 3}); }
inline gridsign::GridDiagram blockfree4() { return gridsign::make_grid_diagram(4, {3, 4, 1, 2}, {4, 3, 2, 1}); }
inline gridsign::GridDiagram trefoil5() { return gridsign::make_grid_diagram(5, {4, 5, 1, 2, 3}, {2, 3, 4, 5, 1}); }

inline const char* unknot2_json() { return R"({"n": 2, "O": [1, 2], "X": [2, 1]})"; }
inline const char* unknot3_json() { return R"({"n": 3, "O": [2, 3, 1], "X": [1, 2, 3]})"; }
inline const char* split4_json() { return R"({"n": 4, "O": [1, 2, 3, 4], "X": [2, 1, 4, 3]})"; }
inline const char* trefoil5_json() { return R"({"n": 5, "O": [4, 5, 1, 2, 3], "X": [2, 3, 4, 5, 1]})"; }

}  // namespace testgrids
