#include "gridsign/gf2.hpp"

#include <algorithm>
#include <bit>

#include "gridsign/errors.hpp"

namespace gridsign {

void BitVec::xor_with(const BitVec& other) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

int BitVec::lowest_set() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  return -1;
}

bool BitVec::any() const {
  for (const auto w : words_)
    if (w != 0) return true;
  return false;
}

int gf2_rank(std::vector<BitVec> rows) {
  if (rows.empty()) return 0;
  std::vector<int> pivot_row(static_cast<size_t>(rows[0].bits()), -1);
  int rank = 0;
  for (size_t r = 0; r < rows.size(); ++r) {
    int p = rows[r].lowest_set();
    while (p >= 0 && pivot_row[static_cast<size_t>(p)] >= 0) {
      rows[r].xor_with(rows[static_cast<size_t>(pivot_row[static_cast<size_t>(p)])]);
      p = rows[r].lowest_set();
    }
    if (p >= 0) {
      pivot_row[static_cast<size_t>(p)] = static_cast<int>(r);
      ++rank;
    }
  }
  return rank;
}

Gf2Solver::Gf2Solver(int num_vars)
    : num_vars_(num_vars), row_of_pivot_(static_cast<size_t>(num_vars), -1) {}

void Gf2Solver::add_row(std::span<const int> vars, bool target) {
  if (finalized_) fail(Errc::Internal, "add_row after finalize");
  BitVec v(num_vars_);
  for (int var : vars) v.flip(var);  // flip, so repeated indices cancel
  bool t = target;
  int p = v.lowest_set();
  while (p >= 0 && row_of_pivot_[static_cast<size_t>(p)] >= 0) {
    const size_t r = static_cast<size_t>(row_of_pivot_[static_cast<size_t>(p)]);
    v.xor_with(rows_[r]);
    t ^= targets_[r] != 0;
    p = v.lowest_set();
  }
  if (p < 0) {
    if (t) inconsistent_ = true;
    return;
  }
  row_of_pivot_[static_cast<size_t>(p)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  targets_.push_back(t ? 1 : 0);
  pivots_.push_back(p);
}

void Gf2Solver::finalize() {
  if (finalized_) return;
  // Clear every pivot column from the other rows, highest pivot first.
  std::vector<size_t> order(rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots_[a] > pivots_[b]; });
  for (size_t k : order) {
    const int p = pivots_[k];
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r == k) continue;
      if (rows_[r].test(p)) {
        rows_[r].xor_with(rows_[k]);
        targets_[r] ^= targets_[k];
      }
    }
  }
  finalized_ = true;
}

std::vector<int> Gf2Solver::pivot_columns() const {
  std::vector<int> out = pivots_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint8_t> Gf2Solver::particular_solution() const {
  if (!finalized_) fail(Errc::Internal, "particular_solution before finalize");
  if (inconsistent_) fail(Errc::Internal, "particular_solution of an inconsistent system");
  std::vector<std::uint8_t> sol(static_cast<size_t>(num_vars_), 0);
  for (size_t r = 0; r < rows_.size(); ++r) sol[static_cast<size_t>(pivots_[r])] = targets_[r];
  return sol;
}

std::vector<std::vector<int>> Gf2Solver::kernel_basis() const {
  if (!finalized_) fail(Errc::Internal, "kernel_basis before finalize");
  std::vector<std::vector<int>> basis;
  for (int q = 0; q < num_vars_; ++q) {
    if (row_of_pivot_[static_cast<size_t>(q)] >= 0) continue;
    std::vector<int> gen = {q};
    for (size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r].test(q)) gen.push_back(pivots_[r]);
    std::sort(gen.begin(), gen.end());
    basis.push_back(std::move(gen));
  }
  return basis;
}

}  // namespace gridsign
