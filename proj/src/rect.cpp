#include "gridsign/rect.hpp"

#include <algorithm>
#include <map>

#include "gridsign/errors.hpp"

namespace gridsign {

namespace {

int mod_n(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

bool rect_key_less(const EmptyRect& a, const EmptyRect& b) {
  if (a.sw_col != b.sw_col) return a.sw_col < b.sw_col;
  if (a.sw_row != b.sw_row) return a.sw_row < b.sw_row;
  if (a.w != b.w) return a.w < b.w;
  return a.h < b.h;
}

}  // namespace

std::vector<EmptyRect> empty_rectangles(const GridState& x) {
  const int n = x.size();
  std::vector<EmptyRect> out;
  if (n < 2) return out;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      const int c = x.sigma[p];
      const int w = mod_n(x.sigma[q] - c, n);
      const int h = mod_n(q - p, n);
      // The interior rows are p+1 .. p+h-1; the state point on each such
      // row must avoid the open column span (c, c+w).
      bool empty = true;
      for (int dr = 1; dr < h && empty; ++dr) {
        const int row = (p + dr) % n;
        const int dc = mod_n(x.sigma[row] - c, n);
        if (dc > 0 && dc < w) empty = false;
      }
      if (!empty) continue;
      EmptyRect r;
      r.start = x;
      r.end = x;
      std::swap(r.end.sigma[p], r.end.sigma[q]);
      r.sw_col = c;
      r.sw_row = p;
      r.w = w;
      r.h = h;
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), rect_key_less);
  return out;
}

std::vector<std::pair<int, int>> rect_cells(const EmptyRect& r) {
  const int n = r.start.size();
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<size_t>(r.w) * r.h);
  for (int a = 0; a < r.w; ++a)
    for (int b = 0; b < r.h; ++b)
      cells.emplace_back((r.sw_col + a) % n, (r.sw_row + b) % n);
  return cells;
}

std::pair<std::vector<int>, std::vector<int>> marking_counts(const EmptyRect& r, const GridDiagram& d) {
  const int n = d.n;
  std::vector<int> o_vec(n, 0), x_vec(n, 0);
  for (int b = 0; b < r.h; ++b) {
    const int row = (r.sw_row + b) % n;
    if (mod_n(d.o_col[row] - r.sw_col, n) < r.w) o_vec[row] = 1;
    if (mod_n(d.x_col[row] - r.sw_col, n) < r.w) x_vec[row] = 1;
  }
  return {std::move(o_vec), std::move(x_vec)};
}

Domain rect_domain(const EmptyRect& r) {
  const int n = r.start.size();
  Domain d;
  d.from = r.start;
  d.to = r.end;
  d.mult.assign(static_cast<size_t>(n) * n, 0);
  for (auto [c, row] : rect_cells(r)) d.mult[static_cast<size_t>(row) * n + c] += 1;
  return d;
}

Domain compose(const EmptyRect& r1, const EmptyRect& r2) {
  if (r1.end != r2.start)
    fail(Errc::StateMismatch, "rectangle composition requires matching intermediate states");
  const int n = r1.start.size();
  Domain d = rect_domain(r1);
  d.to = r2.end;
  for (auto [c, row] : rect_cells(r2)) d.mult[static_cast<size_t>(row) * n + c] += 1;
  return d;
}

Domain compose(const Domain& a, const Domain& b) {
  if (a.to != b.from)
    fail(Errc::StateMismatch, "domain composition requires matching intermediate states");
  if (a.mult.size() != b.mult.size()) fail(Errc::SizeMismatch, "domain sizes differ");
  Domain d;
  d.from = a.from;
  d.to = b.to;
  d.mult = a.mult;
  for (size_t i = 0; i < d.mult.size(); ++i) d.mult[i] += b.mult[i];
  return d;
}

Domain vertical_annulus(const GridState& base, int col) {
  const int n = base.size();
  Domain d;
  d.from = base;
  d.to = base;
  d.mult.assign(static_cast<size_t>(n) * n, 0);
  for (int row = 0; row < n; ++row) d.mult[static_cast<size_t>(row) * n + col] = 1;
  return d;
}

Domain horizontal_annulus(const GridState& base, int row) {
  const int n = base.size();
  Domain d;
  d.from = base;
  d.to = base;
  d.mult.assign(static_cast<size_t>(n) * n, 0);
  for (int col = 0; col < n; ++col) d.mult[static_cast<size_t>(row) * n + col] = 1;
  return d;
}

bool is_thin_column(const std::vector<int>& mult, int n, int* col_out) {
  int col = -1;
  for (size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    col = static_cast<int>(i) % n;
    break;
  }
  if (col < 0) return false;
  for (int row = 0; row < n; ++row)
    for (int c = 0; c < n; ++c)
      if (mult[static_cast<size_t>(row) * n + c] != (c == col ? 1 : 0)) return false;
  if (col_out) *col_out = col;
  return true;
}

bool is_thin_row(const std::vector<int>& mult, int n, int* row_out) {
  int row = -1;
  for (size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    row = static_cast<int>(i) / n;
    break;
  }
  if (row < 0) return false;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (mult[static_cast<size_t>(r) * n + c] != (r == row ? 1 : 0)) return false;
  if (row_out) *row_out = row;
  return true;
}

std::pair<std::vector<int>, std::vector<int>> marking_counts(const Domain& dom, const GridDiagram& d) {
  const int n = d.n;
  std::vector<int> o_vec(n, 0), x_vec(n, 0);
  for (int i = 0; i < n; ++i) {
    o_vec[i] = dom.mult[static_cast<size_t>(i) * n + d.o_col[i]];
    x_vec[i] = dom.mult[static_cast<size_t>(i) * n + d.x_col[i]];
  }
  return {std::move(o_vec), std::move(x_vec)};
}

RectUniverse::RectUniverse(int n, int bound) : n_(n) {
  states_ = grid_states(n, bound);
  offsets_.assign(states_.size() + 1, 0);
  for (size_t i = 0; i < states_.size(); ++i) {
    auto rs = empty_rectangles(states_[i]);
    offsets_[i + 1] = offsets_[i] + static_cast<int>(rs.size());
    for (auto& r : rs) rects_.push_back(std::move(r));
  }
  end_rank_.resize(rects_.size());
  for (size_t i = 0; i < rects_.size(); ++i) end_rank_[i] = perm_lex_rank(rects_[i].end.sigma);
}

long long RectUniverse::state_rank(const GridState& x) const {
  return perm_lex_rank(x.sigma);
}

std::pair<int, int> RectUniverse::rect_range(long long state_rank) const {
  return {offsets_[static_cast<size_t>(state_rank)], offsets_[static_cast<size_t>(state_rank) + 1]};
}

int RectUniverse::rect_index(const GridState& start, int sw_col, int sw_row, int w, int h) const {
  if (start.size() != n_) return -1;
  if (!is_permutation(start.sigma)) return -1;
  auto [lo, hi] = rect_range(perm_lex_rank(start.sigma));
  for (int i = lo; i < hi; ++i) {
    const EmptyRect& r = rects_[static_cast<size_t>(i)];
    if (r.sw_col == sw_col && r.sw_row == sw_row && r.w == w && r.h == h) return i;
  }
  return -1;
}

const char* class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Square: return "square";
    case ClassKind::VerticalAnnulus: return "vertical";
    case ClassKind::HorizontalAnnulus: return "horizontal";
  }
  return "unknown";
}

namespace {

void classify_group(Index2Group& g, const GridState& x, int n) {
  int param = -1;
  if (g.end == x && is_thin_column(g.mult, n, &param)) {
    g.kind = ClassKind::VerticalAnnulus;
    g.param = param;
    if (g.decomps.size() != 1) {
      g.anomalous = true;
      g.note = "vertical annulus with " + std::to_string(g.decomps.size()) + " decompositions";
    }
    return;
  }
  if (g.end == x && is_thin_row(g.mult, n, &param)) {
    g.kind = ClassKind::HorizontalAnnulus;
    g.param = param;
    if (g.decomps.size() != 1) {
      g.anomalous = true;
      g.note = "horizontal annulus with " + std::to_string(g.decomps.size()) + " decompositions";
    }
    return;
  }
  g.kind = ClassKind::Square;
  g.param = -1;
  if (g.decomps.size() != 2) {
    g.anomalous = true;
    g.note = "square class with " + std::to_string(g.decomps.size()) + " decompositions";
    return;
  }
  std::vector<int> ids = {g.decomps[0].first, g.decomps[0].second, g.decomps[1].first, g.decomps[1].second};
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    g.anomalous = true;
    g.note = "square class without four distinct rectangles";
  }
}

}  // namespace

std::vector<Index2Group> index2_classes(const GridState& x, const RectUniverse& u) {
  const int n = u.n();
  const long long xr = u.state_rank(x);
  std::map<std::pair<long long, std::vector<int>>, Index2Group> acc;

  auto [b1, e1] = u.rect_range(xr);
  for (int i = b1; i < e1; ++i) {
    const long long yr = u.end_rank(i);
    auto [b2, e2] = u.rect_range(yr);
    for (int j = b2; j < e2; ++j) {
      Domain dom = compose(u.rect(i), u.rect(j));
      auto key = std::make_pair(u.end_rank(j), dom.mult);
      auto it = acc.find(key);
      if (it == acc.end()) {
        Index2Group g;
        g.end = dom.to;
        g.mult = std::move(dom.mult);
        it = acc.emplace(std::move(key), std::move(g)).first;
      }
      it->second.decomps.emplace_back(i, j);
    }
  }

  std::vector<Index2Group> out;
  out.reserve(acc.size());
  for (auto& [key, g] : acc) {
    classify_group(g, x, n);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gridsign
