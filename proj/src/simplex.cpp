#include "simplicat/simplex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace simplicat {

namespace {

std::string values_label(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

MonotoneMap monotone_identity(int n) {
  MonotoneMap f;
  f.m = n;
  f.n = n;
  for (int i = 0; i <= n; ++i) f.values.push_back(i);
  return f;
}

MonotoneMap make_monotone(int m, int n, std::vector<int> values) {
  if (m < 0 || n < 0) throw CatError("RankMismatch", "negative rank");
  if (static_cast<int>(values.size()) != m + 1)
    throw CatError("RankMismatch", "value vector has wrong length for [" + std::to_string(m) + "]");
  for (int i = 0; i <= m; ++i) {
    if (values[i] < 0 || values[i] > n)
      throw CatError("IndexOutOfRange", "value " + std::to_string(values[i]) + " outside [" + std::to_string(n) + "]");
    if (i > 0 && values[i] < values[i - 1])
      throw CatError("IndexOutOfRange", "values not weakly increasing at position " + std::to_string(i));
  }
  return {m, n, std::move(values)};
}

MonotoneMap coface(int n, int i) {
  if (n < 0 || i < 0 || i > n + 1)
    throw CatError("IndexOutOfRange", "coface index " + std::to_string(i) + " out of range for [" + std::to_string(n) + "]");
  MonotoneMap f;
  f.m = n;
  f.n = n + 1;
  for (int j = 0; j <= n; ++j) f.values.push_back(j < i ? j : j + 1);
  return f;
}

MonotoneMap codegeneracy(int n, int j) {
  if (n < 1 || j < 0 || j > n - 1)
    throw CatError("IndexOutOfRange", "codegeneracy index " + std::to_string(j) + " out of range for [" + std::to_string(n) + "]");
  MonotoneMap f;
  f.m = n;
  f.n = n - 1;
  for (int k = 0; k <= n; ++k) f.values.push_back(k <= j ? k : k - 1);
  return f;
}

MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.n != g.m)
    throw CatError("RankMismatch", "cannot compose [" + std::to_string(f.m) + "]->[" + std::to_string(f.n) +
                                       "] with [" + std::to_string(g.m) + "]->[" + std::to_string(g.n) + "]");
  MonotoneMap out;
  out.m = f.m;
  out.n = g.n;
  for (int v : f.values) out.values.push_back(g.values[v]);
  return out;
}

std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(m + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int low) {
    if (pos == m + 1) {
      out.push_back({m, n, v});
      return;
    }
    for (int val = low; val <= n; ++val) {
      v[pos] = val;
      rec(pos + 1, val);
    }
  };
  rec(0, 0);
  return out;
}

EpiMonoFactorization epi_mono_factorize(const MonotoneMap& f) {
  EpiMonoFactorization fac;
  fac.m = f.m;
  fac.n = f.n;
  for (int j = 0; j < f.m; ++j)
    if (f.values[j] == f.values[j + 1]) fac.codegeneracies.push_back(j);
  std::set<int> image(f.values.begin(), f.values.end());
  for (int i = f.n; i >= 0; --i)
    if (!image.count(i)) fac.cofaces.push_back(i);
  return fac;
}

MonotoneMap recompose(const EpiMonoFactorization& fac) {
  // apply the codegeneracies right to left (largest slot first), then the
  // cofaces right to left (smallest missed value first)
  int rank = fac.m;
  MonotoneMap acc = monotone_identity(rank);
  for (auto it = fac.codegeneracies.rbegin(); it != fac.codegeneracies.rend(); ++it) {
    acc = compose_monotone(codegeneracy(rank, *it), acc);
    --rank;
  }
  for (auto it = fac.cofaces.rbegin(); it != fac.cofaces.rend(); ++it) {
    acc = compose_monotone(coface(rank, *it), acc);
    ++rank;
  }
  if (rank != fac.n) throw CatError("RankMismatch", "factorization ranks do not recompose");
  return acc;
}

int TruncatedSSet::face(int k, int i, int x) const {
  if (k < 1 || k > truncation || i < 0 || i > k)
    throw CatError("IndexOutOfRange", "face (" + std::to_string(k) + "," + std::to_string(i) + ")");
  return faces[k][i][x];
}

int TruncatedSSet::degeneracy(int k, int j, int x) const {
  if (k < 0 || k >= truncation || j < 0 || j > k)
    throw CatError("IndexOutOfRange", "degeneracy (" + std::to_string(k) + "," + std::to_string(j) + ")");
  return degeneracies[k][j][x];
}

std::vector<int> TruncatedSSet::nondegenerate_counts() const {
  std::vector<int> out;
  for (int k = 0; k <= truncation; ++k) {
    int c = 0;
    for (int x = 0; x < level_sizes[k]; ++x)
      if (!degenerate[k][x]) ++c;
    out.push_back(c);
  }
  return out;
}

void mark_degenerate(TruncatedSSet& x) {
  x.degenerate.assign(x.truncation + 1, {});
  for (int k = 0; k <= x.truncation; ++k) x.degenerate[k].assign(x.level_sizes[k], false);
  for (int k = 0; k < x.truncation; ++k)
    for (int j = 0; j <= k; ++j)
      for (int y = 0; y < x.level_sizes[k]; ++y) x.degenerate[k + 1][x.degeneracies[k][j][y]] = true;
}

std::vector<Issue> audit_sset(const TruncatedSSet& x) {
  std::vector<Issue> issues;
  auto bad = [&](const std::string& msg, std::vector<int> ids) {
    issues.push_back({"IndexOutOfRange", msg, std::move(ids)});
  };
  const int N = x.truncation;
  if (static_cast<int>(x.level_sizes.size()) != N + 1) {
    bad("level_sizes has wrong length", {});
    return issues;
  }
  for (int k = 1; k <= N; ++k) {
    if (static_cast<int>(x.faces[k].size()) != k + 1) bad("face table arity at level " + std::to_string(k), {k});
    for (int i = 0; i <= k; ++i)
      for (int s = 0; s < x.level_sizes[k]; ++s) {
        int v = x.faces[k][i][s];
        if (v < 0 || v >= x.level_sizes[k - 1]) bad("face value out of range", {k, i, s});
      }
  }
  for (int k = 0; k < N; ++k)
    for (int j = 0; j <= k; ++j)
      for (int s = 0; s < x.level_sizes[k]; ++s) {
        int v = x.degeneracies[k][j][s];
        if (v < 0 || v >= x.level_sizes[k + 1]) bad("degeneracy value out of range", {k, j, s});
      }
  if (!issues.empty()) return issues;

  auto fail = [&](const std::string& family, int k, int a, int b, int s) {
    issues.push_back({"IncompatibleFaces",
                      family + " identity fails at level " + std::to_string(k) + " indices (" +
                          std::to_string(a) + "," + std::to_string(b) + ") simplex " + std::to_string(s),
                      {k, a, b, s}});
  };

  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= N; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i)
        for (int s = 0; s < x.level_sizes[k]; ++s)
          if (x.faces[k - 1][i][x.faces[k][j][s]] != x.faces[k - 1][j - 1][x.faces[k][i][s]])
            fail("face-face", k, i, j, s);

  // s_i s_j = s_{j+1} s_i for i <= j
  for (int k = 0; k + 2 <= N; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        for (int s = 0; s < x.level_sizes[k]; ++s)
          if (x.degeneracies[k + 1][i][x.degeneracies[k][j][s]] !=
              x.degeneracies[k + 1][j + 1][x.degeneracies[k][i][s]])
            fail("degeneracy-degeneracy", k, i, j, s);

  // mixed family on s_j : X_k -> X_{k+1} followed by d_i
  for (int k = 0; k < N; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= k + 1; ++i)
        for (int s = 0; s < x.level_sizes[k]; ++s) {
          int lhs = x.faces[k + 1][i][x.degeneracies[k][j][s]];
          if (i == j || i == j + 1) {
            if (lhs != s) fail("face-degeneracy-identity", k, i, j, s);
          } else if (i < j) {
            if (k < 1) continue;
            if (lhs != x.degeneracies[k - 1][j - 1][x.faces[k][i][s]]) fail("face-under-degeneracy", k, i, j, s);
          } else {
            if (k < 1) continue;
            if (lhs != x.degeneracies[k - 1][j][x.faces[k][i - 1][s]]) fail("face-over-degeneracy", k, i, j, s);
          }
        }

  // degenerate flags match the degeneracy images
  TruncatedSSet copy = x;
  mark_degenerate(copy);
  for (int k = 0; k <= N; ++k)
    for (int s = 0; s < x.level_sizes[k]; ++s)
      if (x.degenerate[k][s] != copy.degenerate[k][s])
        issues.push_back({"IncompatibleFaces",
                          "degenerate flag wrong at level " + std::to_string(k) + " simplex " + std::to_string(s),
                          {k, s}});
  return issues;
}

std::vector<std::vector<MonotoneMap>> standard_simplex_maps(int n, int N) {
  std::vector<std::vector<MonotoneMap>> levels;
  for (int m = 0; m <= N; ++m) levels.push_back(enumerate_monotone(m, n));
  return levels;
}

namespace {

TruncatedSSet sset_from_maps(const std::vector<std::vector<MonotoneMap>>& levels, int N) {
  TruncatedSSet x;
  x.truncation = N;
  std::vector<std::map<std::vector<int>, int>> index(N + 1);
  for (int k = 0; k <= N; ++k) {
    x.level_sizes.push_back(static_cast<int>(levels[k].size()));
    for (size_t s = 0; s < levels[k].size(); ++s) index[k][levels[k][s].values] = static_cast<int>(s);
  }
  x.faces.assign(N + 1, {});
  x.degeneracies.assign(N + 1, {});
  x.labels.assign(N + 1, {});
  for (int k = 0; k <= N; ++k)
    for (const auto& a : levels[k]) x.labels[k].push_back(values_label(a.values));
  for (int k = 1; k <= N; ++k) {
    x.faces[k].assign(k + 1, std::vector<int>(levels[k].size(), -1));
    for (int i = 0; i <= k; ++i)
      for (size_t s = 0; s < levels[k].size(); ++s) {
        MonotoneMap v = compose_monotone(levels[k][s], coface(k - 1, i));
        x.faces[k][i][s] = index[k - 1].at(v.values);
      }
  }
  for (int k = 0; k < N; ++k) {
    x.degeneracies[k].assign(k + 1, std::vector<int>(levels[k].size(), -1));
    for (int j = 0; j <= k; ++j)
      for (size_t s = 0; s < levels[k].size(); ++s) {
        MonotoneMap v = compose_monotone(levels[k][s], codegeneracy(k + 1, j));
        x.degeneracies[k][j][s] = index[k + 1].at(v.values);
      }
  }
  mark_degenerate(x);
  return x;
}

TruncatedSSet filter_standard(int n, int N, const std::function<bool(const MonotoneMap&)>& keep) {
  auto levels = standard_simplex_maps(n, N);
  std::vector<std::vector<MonotoneMap>> kept(N + 1);
  for (int k = 0; k <= N; ++k)
    for (const auto& a : levels[k])
      if (keep(a)) kept[k].push_back(a);
  return sset_from_maps(kept, N);
}

}  // namespace

TruncatedSSet standard_simplex(int n, int N) {
  return sset_from_maps(standard_simplex_maps(n, N), N);
}

TruncatedSSet boundary_sset(int n, int N) {
  return filter_standard(n, N, [n](const MonotoneMap& a) {
    std::set<int> im(a.values.begin(), a.values.end());
    return static_cast<int>(im.size()) < n + 1;
  });
}

TruncatedSSet horn_sset(int n, int i, int N) {
  if (i < 0 || i > n) throw CatError("IndexOutOfRange", "horn index out of range");
  return filter_standard(n, N, [n, i](const MonotoneMap& a) {
    std::set<int> im(a.values.begin(), a.values.end());
    im.insert(i);
    return static_cast<int>(im.size()) < n + 1;
  });
}

void validate_horn_instance(const TruncatedSSet& x, const HornInstance& h) {
  if (h.dim < 1 || h.dim > x.truncation)
    throw CatError("IndexOutOfRange", "horn dimension outside the truncation");
  if (h.missing < 0 || h.missing > h.dim)
    throw CatError("IndexOutOfRange", "missing index outside 0..dim");
  if (static_cast<int>(h.faces.size()) != h.dim + 1)
    throw CatError("IndexOutOfRange", "face assignment has wrong arity");
  for (int j = 0; j <= h.dim; ++j) {
    if (j == h.missing) continue;
    if (h.faces[j] < 0 || h.faces[j] >= x.level_sizes[h.dim - 1])
      throw CatError("IndexOutOfRange", "assigned face out of range at index " + std::to_string(j));
  }
  if (h.dim < 2) return;
  for (int a = 0; a <= h.dim; ++a) {
    if (a == h.missing) continue;
    for (int b = a + 1; b <= h.dim; ++b) {
      if (b == h.missing) continue;
      if (x.faces[h.dim - 1][a][h.faces[b]] != x.faces[h.dim - 1][b - 1][h.faces[a]])
        throw CatError("IncompatibleFaces",
                       "faces at indices " + std::to_string(a) + " and " + std::to_string(b) +
                           " do not share their boundary");
    }
  }
}

std::vector<int> find_horn_fillers(const TruncatedSSet& x, const HornInstance& h) {
  validate_horn_instance(x, h);
  std::vector<int> out;
  for (int s = 0; s < x.level_sizes[h.dim]; ++s) {
    bool ok = true;
    for (int j = 0; j <= h.dim && ok; ++j) {
      if (j == h.missing) continue;
      if (x.faces[h.dim][j][s] != h.faces[j]) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

KanReport check_kan_condition(const TruncatedSSet& x, int up_to, bool inner_only) {
  if (up_to < 1 || up_to > x.truncation)
    throw CatError("IndexOutOfRange", "kan check dimension outside the truncation");
  KanReport rep;
  const int witness_cap = 5;
  for (int n = 1; n <= up_to; ++n) {
    int lo = inner_only ? 1 : 0;
    int hi = inner_only ? n - 1 : n;
    for (int i = lo; i <= hi; ++i) {
      HornSlotReport slot;
      slot.dim = n;
      slot.index = i;
      std::vector<int> idx;  // the assigned indices, ascending
      for (int j = 0; j <= n; ++j)
        if (j != i) idx.push_back(j);
      std::vector<int> assign(n + 1, -1);
      std::function<void(size_t)> rec = [&](size_t k) {
        if (k == idx.size()) {
          HornInstance h{n, i, assign};
          auto fillers = find_horn_fillers(x, h);
          slot.instances++;
          if (fillers.empty()) {
            slot.unfilled++;
            if (static_cast<int>(slot.unfilled_witnesses.size()) < witness_cap)
              slot.unfilled_witnesses.push_back(h);
          } else if (fillers.size() == 1) {
            slot.uniquely_filled++;
          } else if (static_cast<int>(slot.ambiguous_witnesses.size()) < witness_cap) {
            slot.ambiguous_witnesses.push_back(h);
          }
          return;
        }
        int b = idx[k];
        for (int cand = 0; cand < x.level_sizes[n - 1]; ++cand) {
          bool compatible = true;
          if (n >= 2)
            for (size_t p = 0; p < k && compatible; ++p) {
              int a = idx[p];
              if (x.faces[n - 1][a][cand] != x.faces[n - 1][b - 1][assign[a]]) compatible = false;
            }
          if (!compatible) continue;
          assign[b] = cand;
          rec(k + 1);
          assign[b] = -1;
        }
      };
      rec(0);
      if (slot.unfilled > 0) rep.all_filled = false;
      if (i > 0 && i < n && slot.uniquely_filled != slot.instances) rep.inner_unique = false;
      rep.slots.push_back(std::move(slot));
    }
  }
  return rep;
}

}  // namespace simplicat
