#include "support/oracles.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "simplicat/library.hpp"

#ifndef SIMPLICAT_FIXTURES_FALLBACK
#define SIMPLICAT_FIXTURES_FALLBACK "tests/fixtures"
#endif
#ifndef SIMPLICAT_CLI_FALLBACK
#define SIMPLICAT_CLI_FALLBACK ""
#endif

namespace simplicat::testing {

std::string fixtures_dir() {
  if (const char* env = std::getenv("SIMPLICAT_FIXTURES")) return env;
  return SIMPLICAT_FIXTURES_FALLBACK;
}

std::string fixture(const std::string& name) { return fixtures_dir() + "/" + name; }

std::string cli_path() {
  if (const char* env = std::getenv("SIMPLICAT_CLI")) return env;
  return SIMPLICAT_CLI_FALLBACK;
}

std::pair<int, std::string> run_process(const std::string& command) {
  std::string full = command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::pair<long long, long long> simplicial_identity_audit(int max_rank) {
  long long checked = 0, failed = 0;
  auto tally = [&](const MonotoneMap& lhs, const MonotoneMap& rhs) {
    ++checked;
    if (!(lhs == rhs)) ++failed;
  };
  // cofaces commute: delta_j . delta_i = delta_i . delta_{j-1} for i < j
  for (int n = 0; n + 2 <= max_rank; ++n)
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 2; ++j)
        tally(compose_monotone(coface(n + 1, j), coface(n, i)),
              compose_monotone(coface(n + 1, i), coface(n, j - 1)));
  // codegeneracies commute: sigma_j . sigma_i = sigma_i . sigma_{j+1} for i <= j
  for (int n = 2; n <= max_rank; ++n)
    for (int i = 0; i <= n - 2; ++i)
      for (int j = i; j <= n - 2; ++j)
        tally(compose_monotone(codegeneracy(n - 1, j), codegeneracy(n, i)),
              compose_monotone(codegeneracy(n - 1, i), codegeneracy(n, j + 1)));
  // mixed: sigma_j . delta_i with the three displayed cases
  for (int n = 0; n + 1 <= max_rank; ++n)
    for (int i = 0; i <= n + 1; ++i)
      for (int j = 0; j <= n; ++j) {
        MonotoneMap lhs = compose_monotone(codegeneracy(n + 1, j), coface(n, i));
        if (i == j || i == j + 1) {
          tally(lhs, monotone_identity(n));
        } else if (i < j) {
          tally(lhs, compose_monotone(coface(n - 1, i), codegeneracy(n, j - 1)));
        } else {
          tally(lhs, compose_monotone(coface(n - 1, i - 1), codegeneracy(n, j)));
        }
      }
  return {checked, failed};
}

std::pair<long long, long long> epi_mono_roundtrip_audit(int max_rank) {
  long long checked = 0, failed = 0;
  for (int m = 0; m <= max_rank; ++m)
    for (int n = 0; n <= max_rank; ++n)
      for (const MonotoneMap& f : enumerate_monotone(m, n)) {
        ++checked;
        EpiMonoFactorization fac = epi_mono_factorize(f);
        bool ok = recompose(fac) == f;
        for (size_t k = 1; k < fac.cofaces.size(); ++k)
          if (fac.cofaces[k - 1] <= fac.cofaces[k]) ok = false;
        for (size_t k = 1; k < fac.codegeneracies.size(); ++k)
          if (fac.codegeneracies[k - 1] >= fac.codegeneracies[k]) ok = false;
        if (!ok) ++failed;
      }
  return {checked, failed};
}

std::vector<long long> chain_count_oracle(const FinCategory& c, int up_to) {
  std::vector<int> objs = c.object_ids();
  size_t n = objs.size();
  std::vector<std::vector<long long>> hom(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      hom[i][j] = static_cast<long long>(c.hom(objs[i], objs[j]).size());

  std::vector<long long> counts;
  counts.push_back(static_cast<long long>(n));
  std::vector<std::vector<long long>> power = hom;
  for (int len = 1; len <= up_to; ++len) {
    if (len > 1) {
      std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
          for (size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * hom[k][j];
      power = next;
    }
    long long total = 0;
    for (const auto& row : power)
      for (long long v : row) total += v;
    counts.push_back(total);
  }
  return counts;
}

namespace {

int dsu_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

int component_count(const FinCategory& c) {
  std::vector<int> objs = c.object_ids();
  std::map<int, int> index;
  for (size_t i = 0; i < objs.size(); ++i) index[objs[i]] = static_cast<int>(i);
  std::vector<int> parent(objs.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& m : c.morphisms) {
    int a = dsu_find(parent, index.at(m.src));
    int b = dsu_find(parent, index.at(m.tgt));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::set<int> roots;
  for (size_t i = 0; i < objs.size(); ++i) roots.insert(dsu_find(parent, static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

bool has_terminal_object(const FinCategory& c) {
  for (int t : c.object_ids()) {
    bool ok = true;
    for (int x : c.object_ids())
      if (c.hom(x, t).size() != 1) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

bool has_initial_object(const FinCategory& c) {
  for (int s : c.object_ids()) {
    bool ok = true;
    for (int x : c.object_ids())
      if (c.hom(s, x).size() != 1) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

std::vector<Functor> brute_force_lifts(const LiftingProblem& prob) {
  Functor left = compose_functors(prob.p, prob.mu);
  Functor right = compose_functors(prob.nu, prob.f);
  if (!functor_equal(left, right)) return {};
  std::vector<Functor> out;
  for (const Functor& h : enumerate_functors(prob.f.target, prob.p.source)) {
    if (!functor_equal(compose_functors(prob.p, h), prob.nu)) continue;
    if (!functor_equal(compose_functors(h, prob.f), prob.mu)) continue;
    out.push_back(h);
  }
  return out;
}

std::vector<CausalDag> all_dags(int n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

  std::vector<CausalDag> out;
  std::vector<int> choice(pairs.size(), 0);  // 0 none, 1 i->j, 2 j->i
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (choice[k] == 1) edges.push_back(pairs[k]);
      if (choice[k] == 2) edges.push_back({pairs[k].second, pairs[k].first});
    }
    // Kahn check; distinct-pair orientations can still combine into a cycle.
    std::vector<int> indeg(n, 0);
    for (auto& e : edges) indeg[e.second]++;
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++seen;
      for (auto& e : edges)
        if (e.first == v && --indeg[e.second] == 0) queue.push_back(e.second);
    }
    if (seen == n) {
      CausalDag g;
      for (int v = 0; v < n; ++v) g.variables.push_back({v, names[v]});
      g.edges = edges;
      std::sort(g.edges.begin(), g.edges.end());
      out.push_back(make_dag(std::move(g)));
    }
    size_t k = 0;
    while (k < choice.size() && choice[k] == 2) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
  return out;
}

long long count_quiver_maps(const Quiver& q, const FinCategory& c) {
  std::vector<int> objs = c.object_ids();
  long long total = 0;
  std::vector<size_t> pick(q.vertices.size(), 0);
  if (objs.empty()) return q.vertices.empty() ? 1 : 0;
  while (true) {
    std::map<int, int> vmap;
    for (size_t i = 0; i < q.vertices.size(); ++i) vmap[q.vertices[i].id] = objs[pick[i]];
    long long ways = 1;
    for (const auto& e : q.edges) ways *= static_cast<long long>(c.hom(vmap[e.src], vmap[e.tgt]).size());
    total += ways;
    size_t k = 0;
    while (k < pick.size() && pick[k] + 1 == objs.size()) pick[k++] = 0;
    if (k == pick.size()) break;
    ++pick[k];
  }
  return total;
}

ChainComplex shuffle_complex(const ChainComplex& cc, std::mt19937& rng) {
  ChainComplex out;
  out.truncation = cc.truncation;
  out.basis.resize(cc.basis.size());
  out.boundary.resize(cc.boundary.size());
  std::vector<std::vector<size_t>> perm(cc.basis.size());
  for (size_t n = 0; n < cc.basis.size(); ++n) {
    perm[n].resize(cc.basis[n].size());
    std::iota(perm[n].begin(), perm[n].end(), 0);
    std::shuffle(perm[n].begin(), perm[n].end(), rng);
    out.basis[n].resize(cc.basis[n].size());
    for (size_t i = 0; i < perm[n].size(); ++i) out.basis[n][i] = cc.basis[n][perm[n][i]];
  }
  for (size_t n = 1; n < cc.boundary.size(); ++n) {
    const IntMatrix& m = cc.boundary[n];
    IntMatrix shuffled(perm[n - 1].size(), std::vector<long long>(perm[n].size(), 0));
    for (size_t i = 0; i < perm[n - 1].size(); ++i)
      for (size_t j = 0; j < perm[n].size(); ++j) shuffled[i][j] = m[perm[n - 1][i]][perm[n][j]];
    out.boundary[n] = std::move(shuffled);
  }
  return out;
}

FinCategory random_free_schema(std::mt19937& rng, int max_objects) {
  int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_objects));
  Quiver q;
  for (int i = 0; i < n; ++i) q.vertices.push_back({i, "s" + std::to_string(i)});
  int next_edge = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2 == 0)
        q.edges.push_back({next_edge++, "s" + std::to_string(i) + "->s" + std::to_string(j), i, j});
  return free_category(q);
}

SetFunctor random_instance(std::mt19937& rng, const FinCategory& schema, int max_rows) {
  SetFunctor inst;
  inst.schema = schema;
  std::map<int, int> sizes;
  for (int obj : schema.object_ids())
    sizes[obj] = static_cast<int>(rng() % static_cast<unsigned>(max_rows + 1));
  std::vector<int> gens = indecomposable_morphisms(schema);
  // pad targets so a total action can exist
  for (int pass = 0; pass < static_cast<int>(schema.objects.size()); ++pass)
    for (int m : gens)
      if (sizes[schema.src(m)] > 0 && sizes[schema.tgt(m)] == 0) sizes[schema.tgt(m)] = 1;
  for (auto& [obj, k] : sizes) {
    std::vector<int> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    inst.table[obj] = rows;
  }
  for (int m : gens) {
    int k = sizes[schema.tgt(m)];
    std::map<int, int> fn;
    for (int x : inst.table[schema.src(m)]) fn[x] = static_cast<int>(rng() % static_cast<unsigned>(k));
    inst.action[m] = fn;
  }
  return make_instance(complete_actions(std::move(inst)));
}

Functor random_functor(std::mt19937& rng, const FinCategory& s, const FinCategory& t) {
  std::vector<Functor> all = enumerate_functors(s, t);
  if (all.empty()) throw std::runtime_error("no functor exists for the sampled pair");
  return all[rng() % all.size()];
}

}  // namespace simplicat::testing
