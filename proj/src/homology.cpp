#include "gridsign/homology.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gridsign/errors.hpp"
#include "gridsign/gf2.hpp"
#include "gridsign/parallel.hpp"

namespace gridsign {

namespace {

IntMatrix identity_matrix(long long k) {
  IntMatrix m(static_cast<size_t>(k), std::vector<BigInt>(static_cast<size_t>(k), 0));
  for (long long i = 0; i < k; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix a, bool with_transforms) {
  const long long rows = static_cast<long long>(a.size());
  const long long cols = rows ? static_cast<long long>(a[0].size()) : 0;

  SnfResult res;
  res.has_transforms = with_transforms;
  if (with_transforms) {
    res.u = identity_matrix(rows);
    res.v = identity_matrix(cols);
  }

  auto swap_rows = [&](long long i1, long long i2) {
    std::swap(a[static_cast<size_t>(i1)], a[static_cast<size_t>(i2)]);
    if (with_transforms) std::swap(res.u[static_cast<size_t>(i1)], res.u[static_cast<size_t>(i2)]);
  };
  auto swap_cols = [&](long long j1, long long j2) {
    for (long long i = 0; i < rows; ++i)
      std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(j1)], a[static_cast<size_t>(i)][static_cast<size_t>(j2)]);
    if (with_transforms)
      for (long long i = 0; i < cols; ++i)
        std::swap(res.v[static_cast<size_t>(i)][static_cast<size_t>(j1)],
                  res.v[static_cast<size_t>(i)][static_cast<size_t>(j2)]);
  };
  auto add_row = [&](long long dst, long long src, const BigInt& q) {  // row_dst += q * row_src
    for (long long j = 0; j < cols; ++j)
      a[static_cast<size_t>(dst)][static_cast<size_t>(j)] += q * a[static_cast<size_t>(src)][static_cast<size_t>(j)];
    if (with_transforms)
      for (long long j = 0; j < rows; ++j)
        res.u[static_cast<size_t>(dst)][static_cast<size_t>(j)] +=
            q * res.u[static_cast<size_t>(src)][static_cast<size_t>(j)];
  };
  auto add_col = [&](long long dst, long long src, const BigInt& q) {  // col_dst += q * col_src
    for (long long i = 0; i < rows; ++i)
      a[static_cast<size_t>(i)][static_cast<size_t>(dst)] += q * a[static_cast<size_t>(i)][static_cast<size_t>(src)];
    if (with_transforms)
      for (long long i = 0; i < cols; ++i)
        res.v[static_cast<size_t>(i)][static_cast<size_t>(dst)] +=
            q * res.v[static_cast<size_t>(i)][static_cast<size_t>(src)];
  };
  auto negate_row = [&](long long i) {
    for (long long j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] *= -1;
    if (with_transforms)
      for (long long j = 0; j < rows; ++j) res.u[static_cast<size_t>(i)][static_cast<size_t>(j)] *= -1;
  };

  long long t = 0;
  while (t < std::min(rows, cols)) {
    // Smallest nonzero |entry| in the trailing submatrix, earliest position on ties.
    long long pi = -1, pj = -1;
    BigInt best = 0;
    for (long long i = t; i < rows; ++i) {
      for (long long j = t; j < cols; ++j) {
        const BigInt& e = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (e == 0) continue;
        const BigInt mag = abs(e);
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);

    bool settled = false;
    while (!settled) {
      settled = true;
      for (long long i = t + 1; i < rows; ++i) {
        BigInt& e = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
        if (e == 0) continue;
        const BigInt q = e / a[static_cast<size_t>(t)][static_cast<size_t>(t)];
        if (q != 0) add_row(i, t, -q);
        if (a[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
          swap_rows(t, i);  // the remainder is a strictly smaller pivot
          settled = false;
        }
      }
      if (!settled) continue;
      for (long long j = t + 1; j < cols; ++j) {
        BigInt& e = a[static_cast<size_t>(t)][static_cast<size_t>(j)];
        if (e == 0) continue;
        const BigInt q = e / a[static_cast<size_t>(t)][static_cast<size_t>(t)];
        if (q != 0) add_col(j, t, -q);
        if (a[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) {
          swap_cols(t, j);
          settled = false;
        }
      }
      if (!settled) continue;
      // Divisibility: fold a bad row into row t and redo the elimination.
      for (long long i = t + 1; i < rows && settled; ++i)
        for (long long j = t + 1; j < cols && settled; ++j)
          if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] % a[static_cast<size_t>(t)][static_cast<size_t>(t)] != 0) {
            add_row(t, i, 1);
            settled = false;
          }
    }
    if (a[static_cast<size_t>(t)][static_cast<size_t>(t)] < 0) negate_row(t);
    ++t;
  }

  res.factors.reserve(static_cast<size_t>(t));
  for (long long k = 0; k < t; ++k) res.factors.push_back(a[static_cast<size_t>(k)][static_cast<size_t>(k)]);
  return res;
}

long long rank_z2(const IntMatrix& a) {
  if (a.empty() || a[0].empty()) return 0;
  const int cols = static_cast<int>(a[0].size());
  std::vector<BitVec> rows;
  rows.reserve(a.size());
  for (const auto& row : a) {
    BitVec v(cols);
    for (int j = 0; j < cols; ++j)
      if (row[static_cast<size_t>(j)] % 2 != 0) v.set(j);
    rows.push_back(std::move(v));
  }
  return gf2_rank(std::move(rows));
}

namespace {

long long to_long(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(Errc::Internal, "torsion factor exceeds 64 bits");
  return static_cast<long long>(v);
}

long long tilde_coefficient(const Poly& p) {
  if (p.size() != 1 || !p[0].mon.is_constant())
    fail(Errc::Internal, "tilde complex entry is not a bare integer");
  return p[0].coef;
}

struct BlockResult {
  int alexander2 = 0;
  std::vector<HomologyEntry> entries;
};

}  // namespace

HomologyTable bigraded_homology(const BigradedComplex& c, CoefficientRing ring) {
  if (c.version != ComplexVersion::Tilde)
    fail(Errc::MalformedInput, "bigraded homology requires the tilde complex");

  // Generators grouped by Alexander grading, then Maslov grading.
  std::map<int, std::map<int, std::vector<long long>>> blocks;
  for (size_t g = 0; g < c.generators.size(); ++g)
    blocks[c.gradings[g].alexander2][c.gradings[g].maslov].push_back(static_cast<long long>(g));

  std::vector<int> block_keys;
  block_keys.reserve(blocks.size());
  for (const auto& [a2, byM] : blocks) block_keys.push_back(a2);

  std::vector<BlockResult> results(block_keys.size());
  parallel_for(static_cast<long long>(block_keys.size()), [&](long long bi) {
    const int a2 = block_keys[static_cast<size_t>(bi)];
    const auto& byM = blocks.at(a2);

    std::map<long long, int> local;  // generator -> index within its (M, a2) slot
    for (const auto& [M, gens] : byM)
      for (size_t k = 0; k < gens.size(); ++k) local[gens[k]] = static_cast<int>(k);

    // Boundary out of each Maslov level: rank plus invariant factors.
    std::map<int, std::pair<long long, std::vector<BigInt>>> bnd;
    for (const auto& [M, gens] : byM) {
      auto below = byM.find(M - 1);
      const long long out_rows = below == byM.end() ? 0 : static_cast<long long>(below->second.size());
      if (out_rows == 0) {
        bnd[M] = {0, {}};
        continue;
      }
      IntMatrix B(static_cast<size_t>(out_rows), std::vector<BigInt>(gens.size(), 0));
      for (size_t col = 0; col < gens.size(); ++col) {
        for (const auto& [tgt, poly] : c.diff[static_cast<size_t>(gens[col])]) {
          const Grading& tg = c.gradings[static_cast<size_t>(tgt)];
          if (tg.maslov != M - 1 || tg.alexander2 != a2)
            fail(Errc::Internal, "differential entry violates the grading rules");
          B[static_cast<size_t>(local.at(tgt))][col] = tilde_coefficient(poly);
        }
      }
      if (ring == CoefficientRing::Z) {
        SnfResult snf = smith_normal_form(std::move(B));
        bnd[M] = {static_cast<long long>(snf.factors.size()), std::move(snf.factors)};
      } else {
        bnd[M] = {rank_z2(B), {}};
      }
    }

    BlockResult& out = results[static_cast<size_t>(bi)];
    out.alexander2 = a2;
    for (const auto& [M, gens] : byM) {
      const long long rank_out = bnd.at(M).first;
      auto above = bnd.find(M + 1);
      const long long rank_in = above == bnd.end() ? 0 : above->second.first;
      HomologyEntry e;
      e.maslov = M;
      e.alexander2 = a2;
      e.free_rank = static_cast<long long>(gens.size()) - rank_out - rank_in;
      if (e.free_rank < 0) fail(Errc::Internal, "negative homology rank");
      if (ring == CoefficientRing::Z && above != bnd.end())
        for (const BigInt& f : above->second.second)
          if (f > 1) e.torsion.push_back(to_long(f));
      if (e.free_rank > 0 || !e.torsion.empty()) out.entries.push_back(std::move(e));
    }
  });

  HomologyTable table;
  for (const auto& block : results)
    for (const auto& e : block.entries) table.entries.push_back(e);
  std::sort(table.entries.begin(), table.entries.end(), [](const HomologyEntry& a, const HomologyEntry& b) {
    if (a.alexander2 != b.alexander2) return a.alexander2 < b.alexander2;
    return a.maslov < b.maslov;
  });
  return table;
}

std::map<int, long long> euler_characteristic(const HomologyTable& t) {
  std::map<int, long long> chi;
  for (const auto& e : t.entries) chi[e.alexander2] += (e.maslov % 2 == 0 ? +1 : -1) * e.free_rank;
  for (auto it = chi.begin(); it != chi.end();)
    it = it->second == 0 ? chi.erase(it) : std::next(it);
  return chi;
}

TrueFalseReport compare_true_false(const GridDiagram& d, int bound) {
  const RectUniverse u(d.n, bound);
  const ConstraintSystem cs = build_constraints(u);
  const SignAssignment s = solve_signs(u, cs);
  if (!verify_axioms(u, cs, s, SignConvention::True).pass)
    fail(Errc::Internal, "canonical solution failed verification");
  const SignAssignment st = twist(u, s);
  if (!verify_axioms(u, cs, st, SignConvention::False).pass)
    fail(Errc::Internal, "twisted solution failed verification");

  TrueFalseReport rep;
  rep.true_table = bigraded_homology(build_complex(d, u, s, ComplexVersion::Tilde), CoefficientRing::Z);
  rep.false_table = bigraded_homology(build_complex(d, u, st, ComplexVersion::Tilde), CoefficientRing::Z);
  rep.agree = rep.true_table.entries == rep.false_table.entries;
  return rep;
}

}  // namespace gridsign
