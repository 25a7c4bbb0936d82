#include "simplicat/homology.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

#include "simplicat/nerve.hpp"

namespace simplicat {

namespace {

struct Overflow64 {};

inline long long chk_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw Overflow64{};
  return r;
}
inline long long chk_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw Overflow64{};
  return r;
}
inline long long chk_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw Overflow64{};
  return r;
}
inline long long chk_div(long long x, long long y) {
  if (y == -1) return chk_sub(0, x);
  return x / y;
}
inline long long chk_mod(long long x, long long y) {
  if (y == -1) return 0;
  return x % y;
}
inline long long chk_neg(long long x) { return chk_sub(0, x); }
inline long long chk_abs(long long x) { return x < 0 ? chk_neg(x) : x; }

inline BigInt chk_add(const BigInt& x, const BigInt& y) { return x + y; }
inline BigInt chk_sub(const BigInt& x, const BigInt& y) { return x - y; }
inline BigInt chk_mul(const BigInt& x, const BigInt& y) { return x * y; }
inline BigInt chk_div(const BigInt& x, const BigInt& y) { return x / y; }
inline BigInt chk_mod(const BigInt& x, const BigInt& y) { return x % y; }
inline BigInt chk_neg(const BigInt& x) { return -x; }
inline BigInt chk_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/** In-place Smith diagonalization; u and v accumulate the row and column
 *  operations when non-null so that u * input * v = result. */
template <typename I>
void snf_core(std::vector<std::vector<I>>& a,
              std::vector<std::vector<I>>* u,
              std::vector<std::vector<I>>* v) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    if (u) std::swap((*u)[i], (*u)[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    if (v)
      for (size_t r = 0; r < v->size(); ++r) std::swap((*v)[r][i], (*v)[r][j]);
  };
  auto row_addmul = [&](size_t dst, size_t src, const I& c) {
    for (size_t j = 0; j < cols; ++j) a[dst][j] = chk_add(a[dst][j], chk_mul(c, a[src][j]));
    if (u)
      for (size_t j = 0; j < u->at(0).size(); ++j)
        (*u)[dst][j] = chk_add((*u)[dst][j], chk_mul(c, (*u)[src][j]));
  };
  auto col_addmul = [&](size_t dst, size_t src, const I& c) {
    for (size_t r = 0; r < rows; ++r) a[r][dst] = chk_add(a[r][dst], chk_mul(c, a[r][src]));
    if (v)
      for (size_t r = 0; r < v->size(); ++r)
        (*v)[r][dst] = chk_add((*v)[r][dst], chk_mul(c, (*v)[r][src]));
  };
  auto negate_row = [&](size_t i) {
    for (size_t j = 0; j < cols; ++j) a[i][j] = chk_neg(a[i][j]);
    if (u)
      for (size_t j = 0; j < u->at(0).size(); ++j) (*u)[i][j] = chk_neg((*u)[i][j]);
  };

  for (size_t t = 0; t < rows && t < cols; ++t) {
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!found || chk_abs(a[i][j]) < chk_abs(a[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        I q = chk_div(a[i][t], a[t][t]);
        row_addmul(i, t, chk_neg(q));
        if (a[i][t] != 0) {
          swap_rows(t, i);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        I q = chk_div(a[t][j], a[t][t]);
        col_addmul(j, t, chk_neg(q));
        if (a[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols && clean; ++j)
          if (chk_mod(a[i][j], a[t][t]) != 0) {
            row_addmul(t, i, I(1));
            clean = false;
          }
    }
    if (a[t][t] < 0) negate_row(t);
  }
}

template <typename I>
std::vector<I> diagonal_invariants(const std::vector<std::vector<I>>& a) {
  std::vector<I> inv;
  size_t n = std::min(a.size(), a.empty() ? size_t{0} : a[0].size());
  for (size_t t = 0; t < n; ++t)
    if (a[t][t] != 0) inv.push_back(a[t][t]);
  return inv;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res;
  if (m.empty() || m[0].empty()) return res;
  IntMatrix a = m;
  try {
    snf_core<long long>(a, nullptr, nullptr);
    res.invariants = diagonal_invariants(a);
  } catch (const Overflow64&) {
    BigMatrix b(m.size(), std::vector<BigInt>(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m[0].size(); ++j) b[i][j] = m[i][j];
    snf_core<BigInt>(b, nullptr, nullptr);
    res.escalated = true;
    for (const BigInt& d : diagonal_invariants(b)) {
      if (d > BigInt(LLONG_MAX))
        throw CatError("ScaleExceeded", "invariant factor exceeds 64 bits");
      res.invariants.push_back(d.convert_to<long long>());
    }
  }
  res.rank = static_cast<int>(res.invariants.size());
  return res;
}

SmithTransforms smith_with_transforms(const IntMatrix& m) {
  SmithTransforms res;
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  res.d.assign(rows, std::vector<BigInt>(cols, 0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) res.d[i][j] = m[i][j];
  res.u.assign(rows, std::vector<BigInt>(rows, 0));
  for (size_t i = 0; i < rows; ++i) res.u[i][i] = 1;
  res.v.assign(cols, std::vector<BigInt>(cols, 0));
  for (size_t j = 0; j < cols; ++j) res.v[j][j] = 1;
  if (rows && cols) snf_core<BigInt>(res.d, &res.u, &res.v);
  return res;
}

BigInt determinant(BigMatrix m) {
  size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_unimodular(const BigMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) return false;
  BigInt d = determinant(m);
  return d == 1 || d == -1;
}

ChainComplex chain_complex(const TruncatedSSet& x) {
  {
    auto issues = audit_sset(x);
    if (!issues.empty()) throw CatError(issues.front().kind, issues.front().message);
  }
  ChainComplex cc;
  cc.truncation = x.truncation;
  cc.basis.resize(x.truncation + 1);
  std::vector<std::map<int, int>> pos(x.truncation + 1);
  for (int n = 0; n <= x.truncation; ++n)
    for (int s = 0; s < x.level_sizes[n]; ++s)
      if (!x.degenerate[n][s]) {
        pos[n][s] = static_cast<int>(cc.basis[n].size());
        cc.basis[n].push_back(s);
      }
  cc.boundary.resize(x.truncation + 1);
  for (int n = 1; n <= x.truncation; ++n) {
    size_t r = cc.basis[n - 1].size(), c = cc.basis[n].size();
    cc.boundary[n].assign(r, std::vector<long long>(c, 0));
    for (size_t col = 0; col < c; ++col) {
      int s = cc.basis[n][col];
      for (int i = 0; i <= n; ++i) {
        int f = x.faces[n][i][s];
        if (x.degenerate[n - 1][f]) continue;
        cc.boundary[n][pos[n - 1].at(f)][col] += (i % 2 == 0) ? 1 : -1;
      }
    }
  }
  for (int n = 2; n <= x.truncation; ++n) {
    const IntMatrix& b1 = cc.boundary[n - 1];
    const IntMatrix& b2 = cc.boundary[n];
    if (b1.empty() || b2.empty() || b2[0].empty()) continue;
    for (size_t col = 0; col < b2[0].size(); ++col)
      for (size_t row = 0; row < b1.size(); ++row) {
        long long acc = 0;
        for (size_t k = 0; k < b2.size(); ++k) acc += b1[row][k] * b2[k][col];
        if (acc != 0)
          throw CatError("BoundarySquareNonzero",
                         "boundary square nonzero at degree " + std::to_string(n) + ", column " +
                             std::to_string(col));
      }
  }
  return cc;
}

HomologyProfile homology_profile(const ChainComplex& cc) {
  HomologyProfile prof;
  prof.truncation = cc.truncation;
  int n_deg = cc.truncation + 1;
  std::vector<int> rank(n_deg + 1, 0);
  std::vector<std::vector<long long>> invariants(n_deg + 1);
  for (int n = 1; n <= cc.truncation; ++n) {
    SmithResult s = smith_normal_form(cc.boundary[n]);
    rank[n] = s.rank;
    invariants[n] = s.invariants;
  }
  prof.betti.resize(n_deg);
  prof.torsion.resize(n_deg);
  for (int n = 0; n < n_deg; ++n) {
    long long dim = static_cast<long long>(cc.basis.size() > static_cast<size_t>(n) ? cc.basis[n].size() : 0);
    long long next_rank = n + 1 <= cc.truncation ? rank[n + 1] : 0;
    prof.betti[n] = dim - rank[n] - next_rank;
    if (n + 1 <= cc.truncation)
      for (long long d : invariants[n + 1])
        if (d > 1) prof.torsion[n].push_back(d);
  }
  return prof;
}

HomologyProfile classifying_space_profile(const FinCategory& c, int truncation) {
  return homology_profile(chain_complex(nerve(c, truncation).sset));
}

HomologyProfile hocolim_profile(const SetFunctor& inst, int truncation) {
  return classifying_space_profile(category_of_elements(inst).cat, truncation);
}

CausalEffectVerdict causal_effect(const HomologyProfile& before, const HomologyProfile& after) {
  if (before.truncation != after.truncation)
    throw CatError("TruncationMismatch", "profiles computed at different truncations");
  CausalEffectVerdict v;
  v.before = before;
  v.after = after;
  for (int d = 0; d < before.truncation; ++d) {
    if (before.betti[d] != after.betti[d]) {
      v.certified = true;
      v.degree = d;
      v.invariant = "betti " + std::to_string(before.betti[d]) + " vs " + std::to_string(after.betti[d]);
      return v;
    }
    if (before.torsion[d] != after.torsion[d]) {
      v.certified = true;
      v.degree = d;
      v.invariant = "torsion coefficients differ";
      return v;
    }
  }
  return v;
}

}  // namespace simplicat
