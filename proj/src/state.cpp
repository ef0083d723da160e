#include "gridsign/state.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gridsign/errors.hpp"

namespace gridsign {

long long factorial(int n) {
  if (n < 0 || n > 20) fail(Errc::BoundExceeded, "factorial argument out of range: " + std::to_string(n));
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_permutation(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

long long perm_lex_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  long long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

Perm perm_lex_unrank(int n, long long rank) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    const long long f = factorial(n - 1 - i);
    const long long idx = rank / f;
    rank %= f;
    p[i] = avail[idx];
    avail.erase(avail.begin() + idx);
  }
  return p;
}

int perm_parity_sign(const Perm& p) {
  const int n = static_cast<int>(p.size());
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inv ^= p[i] > p[j];
  return inv ? -1 : +1;
}

GridState identity_state(int n) {
  Perm s(n);
  std::iota(s.begin(), s.end(), 0);
  return GridState(std::move(s));
}

std::vector<GridState> grid_states(int n, int bound) {
  if (n < 1) fail(Errc::MalformedInput, "grid size must be positive");
  if (n > bound)
    fail(Errc::BoundExceeded, "n=" + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<GridState> out;
  out.reserve(static_cast<size_t>(factorial(n)));
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace gridsign
