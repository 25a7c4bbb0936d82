#include "simplicat/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace simplicat {

std::vector<int> apply_face_to_chain(const FinCategory& c, const std::vector<int>& chain, int i) {
  int n = static_cast<int>(chain.size());
  if (n == 0 || i < 0 || i > n)
    throw CatError("IndexOutOfRange", "face index " + std::to_string(i) + " on a chain of length " + std::to_string(n));
  std::vector<int> out;
  if (n == 1) {
    // result is a 0-chain; encode by object id
    return {i == 0 ? c.tgt(chain[0]) : c.src(chain[0])};
  }
  if (i == 0) {
    out.assign(chain.begin() + 1, chain.end());
  } else if (i == n) {
    out.assign(chain.begin(), chain.end() - 1);
  } else {
    out.assign(chain.begin(), chain.end());
    int composed = c.compose(out[i], out[i - 1]);
    out[i - 1] = composed;
    out.erase(out.begin() + i);
  }
  return out;
}

std::vector<int> apply_degeneracy_to_chain(const FinCategory& c, const std::vector<int>& chain, int j) {
  int n = static_cast<int>(chain.size());
  if (j < 0 || j > n)
    throw CatError("IndexOutOfRange", "degeneracy index " + std::to_string(j) + " on a chain of length " + std::to_string(n));
  std::vector<int> out = chain;
  int obj;
  if (n == 0) throw CatError("IndexOutOfRange", "level-0 degeneracy takes an object chain");
  obj = j == 0 ? c.src(chain[0]) : c.tgt(chain[j - 1]);
  out.insert(out.begin() + j, c.identity_of(obj));
  return out;
}

Nerve nerve(const FinCategory& c, int N) {
  Nerve nv;
  nv.cat = c;
  TruncatedSSet& x = nv.sset;
  x.truncation = N;
  nv.chains.assign(N + 1, {});
  std::vector<std::map<std::vector<int>, int>> index(N + 1);

  for (const auto& o : c.objects) {
    index[0][{o.id}] = static_cast<int>(nv.chains[0].size());
    nv.chains[0].push_back({o.id});
  }
  for (int k = 1; k <= N; ++k) {
    if (k == 1) {
      for (const auto& m : c.morphisms) {
        index[1][{m.id}] = static_cast<int>(nv.chains[1].size());
        nv.chains[1].push_back({m.id});
      }
    } else {
      for (const auto& prev : nv.chains[k - 1])
        for (const auto& m : c.morphisms)
          if (m.src == c.tgt(prev.back())) {
            std::vector<int> chain = prev;
            chain.push_back(m.id);
            index[k][chain] = static_cast<int>(nv.chains[k].size());
            nv.chains[k].push_back(std::move(chain));
          }
      // restore lexicographic order (construction above is prev-major, which
      // already is lexicographic because prev lists are)
    }
  }

  x.level_sizes.clear();
  for (int k = 0; k <= N; ++k) x.level_sizes.push_back(static_cast<int>(nv.chains[k].size()));
  x.faces.assign(N + 1, {});
  x.degeneracies.assign(N + 1, {});
  x.labels.assign(N + 1, {});
  for (int k = 0; k <= N; ++k)
    for (const auto& chain : nv.chains[k]) {
      std::string label;
      if (k == 0) {
        label = c.object(chain[0]).label;
      } else {
        for (size_t t = 0; t < chain.size(); ++t) {
          if (t) label += "|";
          label += c.morphism(chain[t]).label;
        }
      }
      x.labels[k].push_back(label);
    }

  for (int k = 1; k <= N; ++k) {
    x.faces[k].assign(k + 1, std::vector<int>(nv.chains[k].size(), -1));
    for (int i = 0; i <= k; ++i)
      for (size_t s = 0; s < nv.chains[k].size(); ++s)
        x.faces[k][i][s] = index[k - 1].at(apply_face_to_chain(c, nv.chains[k][s], i));
  }
  for (int k = 0; k < N; ++k) {
    x.degeneracies[k].assign(k + 1, std::vector<int>(nv.chains[k].size(), -1));
    for (int j = 0; j <= k; ++j)
      for (size_t s = 0; s < nv.chains[k].size(); ++s) {
        std::vector<int> img;
        if (k == 0)
          img = {c.identity_of(nv.chains[0][s][0])};
        else
          img = apply_degeneracy_to_chain(c, nv.chains[k][s], j);
        x.degeneracies[k][j][s] = index[k + 1].at(img);
      }
  }
  mark_degenerate(x);
  return nv;
}

std::vector<SSetMap> enumerate_sset_maps(const TruncatedSSet& x, const TruncatedSSet& y) {
  if (x.truncation != y.truncation)
    throw CatError("TruncationMismatch", "simplicial maps need a shared truncation");
  const int N = x.truncation;
  std::vector<SSetMap> out;
  SSetMap cur;
  cur.level.assign(N + 1, {});
  for (int k = 0; k <= N; ++k) cur.level[k].assign(x.level_sizes[k], -1);

  // assign level by level; face and degeneracy images constrain each choice
  std::function<void(int, int)> rec = [&](int k, int s) {
    if (k > N) {
      out.push_back(cur);
      return;
    }
    if (s == x.level_sizes[k]) {
      rec(k + 1, 0);
      return;
    }
    for (int cand = 0; cand < y.level_sizes[k]; ++cand) {
      bool ok = true;
      if (k >= 1)
        for (int i = 0; i <= k && ok; ++i)
          if (y.faces[k][i][cand] != cur.level[k - 1][x.faces[k][i][s]]) ok = false;
      if (ok && k >= 1)
        for (int j = 0; j <= k - 1 && ok; ++j)
          for (int w = 0; w < x.level_sizes[k - 1] && ok; ++w)
            if (x.degeneracies[k - 1][j][w] == s && y.degeneracies[k - 1][j][cur.level[k - 1][w]] != cand)
              ok = false;
      if (!ok) continue;
      cur.level[k][s] = cand;
      rec(k, s + 1);
      cur.level[k][s] = -1;
    }
  };
  rec(0, 0);
  return out;
}

SSetMap nerve_map_of_functor(const Nerve& nc, const Nerve& nd, const Functor& f) {
  const int N = nc.sset.truncation;
  std::map<std::vector<int>, int> dindex[2];
  SSetMap out;
  out.level.assign(N + 1, {});
  std::vector<std::map<std::vector<int>, int>> index(N + 1);
  for (int k = 0; k <= N; ++k)
    for (size_t s = 0; s < nd.chains[k].size(); ++s) index[k][nd.chains[k][s]] = static_cast<int>(s);
  for (int k = 0; k <= N; ++k) {
    out.level[k].assign(nc.chains[k].size(), -1);
    for (size_t s = 0; s < nc.chains[k].size(); ++s) {
      std::vector<int> img;
      if (k == 0)
        img = {f.on_object(nc.chains[0][s][0])};
      else
        for (int m : nc.chains[k][s]) img.push_back(f.on_morphism(m));
      out.level[k][s] = index[k].at(img);
    }
  }
  (void)dindex;
  return out;
}

BijectionReport nerve_fully_faithful_check(const FinCategory& c, const FinCategory& d) {
  const auto limit_ok = [](const FinCategory& k) {
    return k.objects.size() <= 4 && k.morphisms.size() <= 12;
  };
  if (!limit_ok(c) || !limit_ok(d))
    throw CatError("ScaleExceeded", "full-faithfulness check is limited to 4 objects and 12 morphisms");
  Nerve nc = nerve(c, 2);
  Nerve nd = nerve(d, 2);
  std::vector<Functor> functors = enumerate_functors(c, d);
  std::vector<SSetMap> maps = enumerate_sset_maps(nc.sset, nd.sset);
  std::map<std::vector<std::vector<int>>, int> map_index;
  for (size_t i = 0; i < maps.size(); ++i) map_index[maps[i].level] = static_cast<int>(i);

  BijectionReport rep;
  rep.left = static_cast<long long>(functors.size());
  rep.right = static_cast<long long>(maps.size());
  std::set<int> hit;
  bool all_found = true;
  for (size_t i = 0; i < functors.size(); ++i) {
    SSetMap img = nerve_map_of_functor(nc, nd, functors[i]);
    auto it = map_index.find(img.level);
    if (it == map_index.end()) {
      all_found = false;
      continue;
    }
    rep.pairs.push_back({static_cast<int>(i), it->second});
    hit.insert(it->second);
  }
  rep.injective = hit.size() == functors.size() && all_found;
  rep.surjective = hit.size() == maps.size();
  rep.holds = rep.injective && rep.surjective;
  return rep;
}

}  // namespace simplicat
