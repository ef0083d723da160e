#pragma once

#include <span>
#include <utility>

#include "gridsign/grid.hpp"
#include "gridsign/state.hpp"

namespace gridsign {

// The Alexander grading is stored doubled so that links with
// half-integer values stay integral.
struct Grading {
  int maslov = 0;
  int alexander2 = 0;

  bool operator==(const Grading&) const = default;
};

int maslov(const GridState& x, const GridDiagram& d);
int alexander2(const GridState& x, const GridDiagram& d);
Grading grading_of(const GridState& x, const GridDiagram& d);

// Pairs (p, q) with p strictly southwest of q in the planar fundamental
// domain, over doubled integer coordinates (state points at even,
// marking centers at odd coordinates).
long long strict_sw_pairs(std::span<const std::pair<int, int>> a,
                          std::span<const std::pair<int, int>> b);

}  // namespace gridsign
