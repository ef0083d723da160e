#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace gridsign {

using Perm = std::vector<int>;  // one-line notation, 0-indexed

inline constexpr int kDefaultEnumerationBound = 8;

long long factorial(int n);  // valid for 0 <= n <= 20
bool is_permutation(const Perm& p);
long long perm_lex_rank(const Perm& p);
Perm perm_lex_unrank(int n, long long rank);
int perm_parity_sign(const Perm& p);  // +1 even, -1 odd

// A grid state places one point on each horizontal and each vertical
// circle: the point of row i sits at planar coordinates (sigma[i], i)
// in the fundamental domain [0,n) x [0,n). The identity permutation is
// the reference state.
struct GridState {
  Perm sigma;

  GridState() = default;
  explicit GridState(Perm s) : sigma(std::move(s)) {}

  int size() const { return static_cast<int>(sigma.size()); }

  bool operator==(const GridState&) const = default;
  auto operator<=>(const GridState&) const = default;
};

GridState identity_state(int n);

// All n! states in lexicographic one-line order.
std::vector<GridState> grid_states(int n, int bound = kDefaultEnumerationBound);

}  // namespace gridsign
