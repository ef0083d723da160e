#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridsign/grid.hpp"
#include "gridsign/state.hpp"

namespace gridsign {

// An empty rectangle on the torus. Widths and heights wrap mod n and lie
// in 1..n-1. The start state owns the SW and NE corners, the end state
// the SE and NW corners; the end state is the start composed with the
// transposition of the two occupied rows. Emptiness means no state point
// in the open interior; markings may sit inside.
struct EmptyRect {
  GridState start;
  GridState end;
  int sw_col = 0;
  int sw_row = 0;
  int w = 0;
  int h = 0;

  bool operator==(const EmptyRect&) const = default;
};

// All empty rectangles leaving x, in canonical (sw_col, sw_row, w, h) order.
std::vector<EmptyRect> empty_rectangles(const GridState& x);

// Cells covered by the rectangle, multiplicity one each.
std::vector<std::pair<int, int>> rect_cells(const EmptyRect& r);

// Per-marking multiplicities, indexed by marking row.
std::pair<std::vector<int>, std::vector<int>> marking_counts(const EmptyRect& r, const GridDiagram& d);

// A nonnegative cell-multiplicity vector connecting two states. Cell
// (c, r) lives at index r*n + c.
struct Domain {
  GridState from;
  GridState to;
  std::vector<int> mult;

  bool operator==(const Domain&) const = default;
};

Domain rect_domain(const EmptyRect& r);
Domain compose(const EmptyRect& r1, const EmptyRect& r2);
Domain compose(const Domain& a, const Domain& b);

// Thin annuli: one full column (between adjacent vertical circles) or one
// full row (between adjacent horizontal circles), multiplicity one, based
// at the given state.
Domain vertical_annulus(const GridState& base, int col);
Domain horizontal_annulus(const GridState& base, int row);

bool is_thin_column(const std::vector<int>& mult, int n, int* col_out);
bool is_thin_row(const std::vector<int>& mult, int n, int* row_out);

std::pair<std::vector<int>, std::vector<int>> marking_counts(const Domain& dom, const GridDiagram& d);

// Every empty rectangle of every state of a given size, in canonical
// order: states lexicographic, rectangles per state by (sw, w, h). The
// rectangle set depends only on n, not on the markings.
class RectUniverse {
 public:
  explicit RectUniverse(int n, int bound = kDefaultEnumerationBound);

  int n() const { return n_; }
  const std::vector<GridState>& states() const { return states_; }
  const std::vector<EmptyRect>& rects() const { return rects_; }
  long long state_count() const { return static_cast<long long>(states_.size()); }
  long long rect_count() const { return static_cast<long long>(rects_.size()); }

  long long state_rank(const GridState& x) const;
  const GridState& state(long long rank) const { return states_[static_cast<size_t>(rank)]; }
  const EmptyRect& rect(int index) const { return rects_[static_cast<size_t>(index)]; }
  long long end_rank(int rect_index) const { return end_rank_[static_cast<size_t>(rect_index)]; }

  // Half-open global index range of the rectangles leaving a state.
  std::pair<int, int> rect_range(long long state_rank) const;

  // Global index of the rectangle with the given canonical key, or -1.
  int rect_index(const GridState& start, int sw_col, int sw_row, int w, int h) const;

 private:
  int n_;
  std::vector<GridState> states_;
  std::vector<EmptyRect> rects_;
  std::vector<int> offsets_;        // per-state prefix, size n!+1
  std::vector<long long> end_rank_; // per rectangle
};

enum class ClassKind { Square, VerticalAnnulus, HorizontalAnnulus };

const char* class_kind_name(ClassKind k);

// A class of index-two composite domains out of one state: all ordered
// composable rectangle pairs grouped by (end state, domain). Annulus
// groups must carry exactly one decomposition, square groups exactly two
// with four distinct rectangles; anything else is flagged, not used.
struct Index2Group {
  ClassKind kind = ClassKind::Square;
  int param = -1;  // annulus column or row
  GridState end;
  std::vector<int> mult;
  std::vector<std::pair<int, int>> decomps;  // universe rectangle indices
  bool anomalous = false;
  std::string note;
};

std::vector<Index2Group> index2_classes(const GridState& x, const RectUniverse& u);

}  // namespace gridsign
