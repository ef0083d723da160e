#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gridsign {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int bits) : bits_(bits), words_((static_cast<size_t>(bits) + 63) / 64, 0) {}

  int bits() const { return bits_; }
  bool test(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(int i) { words_[static_cast<size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }
  void xor_with(const BitVec& other);
  int lowest_set() const;  // -1 when zero
  bool any() const;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rank of a GF(2) matrix given as bit rows (consumed).
int gf2_rank(std::vector<BitVec> rows);

// Incremental reduced-echelon accumulator for an affine system A x = t
// over GF(2). The fully reduced form of a row space is unique, so the
// result does not depend on insertion order.
class Gf2Solver {
 public:
  explicit Gf2Solver(int num_vars);

  void add_row(std::span<const int> vars, bool target);
  void finalize();  // back-substitute to the fully reduced form

  bool inconsistent() const { return inconsistent_; }
  int num_vars() const { return num_vars_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<int> pivot_columns() const;  // ascending

  // Pivot variables take their row targets, free variables take 0.
  std::vector<std::uint8_t> particular_solution() const;

  // One generator per free variable: the free variable itself plus the
  // pivots whose rows contain it. Variable lists ascending.
  std::vector<std::vector<int>> kernel_basis() const;

 private:
  int num_vars_ = 0;
  bool finalized_ = false;
  bool inconsistent_ = false;
  std::vector<BitVec> rows_;
  std::vector<std::uint8_t> targets_;
  std::vector<int> pivots_;
  std::vector<int> row_of_pivot_;  // var -> basis row index or -1
};

}  // namespace gridsign
