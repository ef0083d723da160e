#include "gridsign/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "gridsign/errors.hpp"
#include "gridsign/parallel.hpp"

namespace gridsign {

bool Monomial::is_constant() const {
  for (int e : u)
    if (e != 0) return false;
  for (int e : v)
    if (e != 0) return false;
  return true;
}

Poly poly_normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mon < b.mon; });
  Poly out;
  for (auto& t : terms) {
    if (t.coef == 0) continue;
    if (!out.empty() && out.back().mon == t.mon)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coef == 0) out.pop_back();
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Term> terms;
  terms.reserve(a.size() + b.size());
  terms.insert(terms.end(), a.begin(), a.end());
  terms.insert(terms.end(), b.begin(), b.end());
  return poly_normalize(std::move(terms));
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (size_t i = 0; i < out.u.size(); ++i) out.u[i] += b.u[i];
  for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a)
    for (const auto& tb : b) terms.push_back(Term{ta.coef * tb.coef, mon_mul(ta.mon, tb.mon)});
  return poly_normalize(std::move(terms));
}

Poly poly_scale(const Poly& a, long long c) {
  if (c == 0) return {};
  Poly out = a;
  for (auto& t : out) t.coef *= c;
  return out;
}

int maslov_degree(const Monomial& m) {
  return -2 * std::accumulate(m.u.begin(), m.u.end(), 0);
}

int alexander2_degree(const Monomial& m) {
  return -2 * std::accumulate(m.u.begin(), m.u.end(), 0) + 2 * std::accumulate(m.v.begin(), m.v.end(), 0);
}

BigradedComplex build_complex(const GridDiagram& d, const RectUniverse& u, const SignAssignment& s,
                              ComplexVersion version, int full_bound) {
  if (d.n != u.n()) fail(Errc::SizeMismatch, "grid size does not match the rectangle universe");
  if (s.n != u.n() || static_cast<long long>(s.sign.size()) != u.rect_count())
    fail(Errc::MissingRectangle, "sign assignment is not total on the empty rectangles");
  if (version == ComplexVersion::Full && u.n() > full_bound)
    fail(Errc::BoundExceeded,
         "full complex is limited to n <= " + std::to_string(full_bound) + " (got n=" + std::to_string(u.n()) + ")");

  const int n = d.n, m = d.m;
  BigradedComplex c;
  c.version = version;
  c.n = n;
  c.m = m;
  c.generators = u.states();
  c.gradings.resize(c.generators.size());
  c.diff.resize(c.generators.size());

  const long long num_states = u.state_count();
  parallel_for(num_states, [&](long long g) {
    c.gradings[static_cast<size_t>(g)] = grading_of(u.state(g), d);

    std::vector<std::pair<long long, Term>> raw;
    auto [lo, hi] = u.rect_range(g);
    for (int i = lo; i < hi; ++i) {
      const auto [o_vec, x_vec] = marking_counts(u.rect(i), d);
      Monomial mon{std::vector<int>(static_cast<size_t>(n), 0), std::vector<int>(static_cast<size_t>(m), 0)};
      if (version == ComplexVersion::Tilde) {
        bool marked = false;
        for (int r = 0; r < n && !marked; ++r) marked = o_vec[r] != 0 || x_vec[r] != 0;
        if (marked) continue;
      } else {
        for (int r = 0; r < n; ++r) {
          mon.u[static_cast<size_t>(r)] = o_vec[r];
          mon.v[static_cast<size_t>(d.x_component[r])] += x_vec[r];
        }
      }
      raw.emplace_back(u.end_rank(i), Term{s.sign[static_cast<size_t>(i)], std::move(mon)});
    }

    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second.mon < b.second.mon;
    });

    auto& column = c.diff[static_cast<size_t>(g)];
    size_t k = 0;
    while (k < raw.size()) {
      const long long target = raw[k].first;
      std::vector<Term> terms;
      while (k < raw.size() && raw[k].first == target) terms.push_back(std::move(raw[k++].second));
      Poly p = poly_normalize(std::move(terms));
      if (!p.empty()) column.emplace_back(target, std::move(p));
    }
  });

  return c;
}

SparseColumns d_squared(const BigradedComplex& c) {
  SparseColumns out(c.generators.size());
  parallel_for(static_cast<long long>(c.generators.size()), [&](long long src) {
    std::map<long long, Poly> acc;
    for (const auto& [mid, p1] : c.diff[static_cast<size_t>(src)]) {
      for (const auto& [tgt, p2] : c.diff[static_cast<size_t>(mid)]) {
        Poly prod = poly_mul(p1, p2);
        auto it = acc.find(tgt);
        if (it == acc.end())
          acc.emplace(tgt, std::move(prod));
        else
          it->second = poly_add(it->second, prod);
      }
    }
    for (auto& [tgt, p] : acc)
      if (!p.empty()) out[static_cast<size_t>(src)].emplace_back(tgt, std::move(p));
  });
  return out;
}

bool all_zero(const SparseColumns& cols) {
  for (const auto& col : cols)
    if (!col.empty()) return false;
  return true;
}

BigradedComplex specialize(const BigradedComplex& c, const std::vector<std::uint8_t>& kill_u,
                           const std::vector<std::uint8_t>& kill_v) {
  if (c.version != ComplexVersion::Full)
    fail(Errc::MalformedInput, "specialize requires the full complex");
  if (static_cast<int>(kill_u.size()) != c.n || static_cast<int>(kill_v.size()) != c.m)
    fail(Errc::SizeMismatch, "kill masks must have sizes n and m");

  BigradedComplex out;
  out.version = c.version;
  out.n = c.n;
  out.m = c.m;
  out.generators = c.generators;
  out.gradings = c.gradings;
  out.diff.resize(c.diff.size());

  auto survives = [&](const Monomial& mon) {
    for (size_t i = 0; i < mon.u.size(); ++i)
      if (kill_u[i] && mon.u[i] > 0) return false;
    for (size_t i = 0; i < mon.v.size(); ++i)
      if (kill_v[i] && mon.v[i] > 0) return false;
    return true;
  };

  for (size_t g = 0; g < c.diff.size(); ++g) {
    for (const auto& [tgt, p] : c.diff[g]) {
      Poly kept;
      for (const auto& t : p)
        if (survives(t.mon)) kept.push_back(t);
      if (!kept.empty()) out.diff[g].emplace_back(tgt, std::move(kept));
    }
  }
  return out;
}

}  // namespace gridsign
