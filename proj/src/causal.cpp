#include "simplicat/causal.hpp"

#include <algorithm>

namespace simplicat {

bool CausalDag::has_variable(int id) const {
  for (const auto& v : variables)
    if (v.id == id) return true;
  return false;
}

const Obj& CausalDag::variable(int id) const {
  for (const auto& v : variables)
    if (v.id == id) return v;
  throw CatError("UnknownVariable", "unknown variable id " + std::to_string(id));
}

int CausalDag::id_of(const std::string& label) const {
  for (const auto& v : variables)
    if (v.label == label) return v.id;
  throw CatError("UnknownVariable", "unknown variable '" + label + "'");
}

std::vector<int> CausalDag::parents(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges)
    if (b == v) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

bool CausalDag::has_edge(int a, int b) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::vector<Issue> validate_dag(const CausalDag& g) {
  std::vector<Issue> issues;
  std::set<int> ids;
  std::set<std::string> labels;
  for (const auto& v : g.variables) {
    if (!ids.insert(v.id).second)
      issues.push_back({"UnknownVariable", "duplicate variable id " + std::to_string(v.id), {v.id}});
    if (!labels.insert(v.label).second)
      issues.push_back({"UnknownVariable", "duplicate variable label '" + v.label + "'", {v.id}});
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : g.edges) {
    if (!ids.count(a) || !ids.count(b)) {
      issues.push_back({"UnknownVariable", "edge endpoint unknown", {a, b}});
      continue;
    }
    if (a == b) issues.push_back({"CyclicQuiver", "self loop at variable " + std::to_string(a), {a}});
    if (!seen.insert({a, b}).second)
      issues.push_back({"UnknownEdge", "duplicate edge", {a, b}});
  }
  if (!issues.empty()) return issues;

  // Kahn pass for acyclicity
  std::map<int, int> indeg;
  for (const auto& v : g.variables) indeg[v.id] = 0;
  for (const auto& [a, b] : g.edges) indeg[b]++;
  std::vector<int> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  size_t seen_count = 0;
  std::map<int, int> deg = indeg;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen_count;
    for (const auto& [a, b] : g.edges)
      if (a == v && --deg[b] == 0) ready.push_back(b);
  }
  if (seen_count != g.variables.size()) {
    std::vector<int> cyclic;
    std::string names;
    for (const auto& [v, d] : deg)
      if (d > 0) {
        cyclic.push_back(v);
        if (!names.empty()) names += ", ";
        names += g.variable(v).label;
      }
    issues.push_back({"CyclicQuiver", "diagram has a directed cycle through " + names, cyclic});
  }
  return issues;
}

CausalDag make_dag(CausalDag raw) {
  std::sort(raw.edges.begin(), raw.edges.end());
  auto issues = validate_dag(raw);
  if (!issues.empty()) throw CatError(issues.front().kind, issues.front().message);
  return raw;
}

CausalDag intervene(const CausalDag& g, const std::vector<Intervention>& list) {
  CausalDag out = g;
  for (const auto& iv : list) {
    if (iv.kind == Intervention::DeleteEdge) {
      if (!out.has_variable(iv.a) || !out.has_variable(iv.b))
        throw CatError("UnknownVariable", "intervention names an unknown variable");
      auto it = std::find(out.edges.begin(), out.edges.end(), std::make_pair(iv.a, iv.b));
      if (it == out.edges.end())
        throw CatError("UnknownEdge",
                       "no edge " + out.variable(iv.a).label + " -> " + out.variable(iv.b).label);
      out.edges.erase(it);
    } else {
      if (!out.has_variable(iv.a))
        throw CatError("UnknownVariable", "intervention names an unknown variable");
      std::vector<std::pair<int, int>> kept;
      for (const auto& e : out.edges)
        if (e.second != iv.a) kept.push_back(e);
      out.edges = std::move(kept);
    }
  }
  return out;
}

FinCategory dag_to_category(const CausalDag& g) {
  Quiver q;
  for (const auto& v : g.variables) q.vertices.push_back({v.id, v.label});
  int eid = 0;
  for (const auto& [a, b] : g.edges)
    q.edges.push_back({eid++, g.variable(a).label + "->" + g.variable(b).label, a, b});
  return free_category(q);
}

void Imset::add(std::uint64_t mask, long long v) {
  auto it = coeffs.find(mask);
  long long nv = (it == coeffs.end() ? 0 : it->second) + v;
  if (nv == 0)
    coeffs.erase(mask);
  else
    coeffs[mask] = nv;
}

std::uint64_t subset_mask(const Imset& u, const std::vector<int>& vars) {
  std::uint64_t mask = 0;
  for (int v : vars) {
    auto it = std::find(u.ground.begin(), u.ground.end(), v);
    if (it == u.ground.end())
      throw CatError("UnknownVariable", "variable " + std::to_string(v) + " not in the ground set");
    mask |= 1ull << (it - u.ground.begin());
  }
  return mask;
}

Imset standard_imset(const CausalDag& g) {
  if (g.variables.size() > 62)
    throw CatError("ScaleExceeded", "imsets support at most 62 variables");
  Imset u;
  for (const auto& v : g.variables) u.ground.push_back(v.id);
  std::sort(u.ground.begin(), u.ground.end());
  std::uint64_t full = u.ground.empty() ? 0 : (1ull << u.ground.size()) - 1;
  u.add(full, 1);
  u.add(0, -1);
  for (const auto& v : g.variables) {
    std::uint64_t pa = subset_mask(u, g.parents(v.id));
    std::uint64_t self = subset_mask(u, {v.id});
    u.add(pa, 1);
    u.add(pa | self, -1);
  }
  return u;
}

Imset elementary_imset(const CausalDag& g, int a, int b, const std::set<int>& A) {
  if (!g.has_variable(a) || !g.has_variable(b))
    throw CatError("UnknownVariable", "elementary imset names an unknown variable");
  for (int v : A)
    if (!g.has_variable(v)) throw CatError("UnknownVariable", "conditioning set names an unknown variable");
  if (a == b || A.count(a) || A.count(b))
    throw CatError("OverlappingArguments", "elementary imset arguments must be disjoint");
  Imset u;
  for (const auto& v : g.variables) u.ground.push_back(v.id);
  std::sort(u.ground.begin(), u.ground.end());
  std::uint64_t ma = subset_mask(u, {a});
  std::uint64_t mb = subset_mask(u, {b});
  std::uint64_t mA = subset_mask(u, std::vector<int>(A.begin(), A.end()));
  u.add(mA | ma | mb, 1);
  u.add(mA, 1);
  u.add(mA | ma, -1);
  u.add(mA | mb, -1);
  return u;
}

bool imset_equal(const Imset& u, const Imset& v) {
  if (u.ground != v.ground)
    throw CatError("GroundSetMismatch", "imsets live over different ground sets");
  return u.coeffs == v.coeffs;
}

std::set<std::pair<int, int>> skeleton(const CausalDag& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& [a, b] : g.edges) out.insert({std::min(a, b), std::max(a, b)});
  return out;
}

std::vector<std::tuple<int, int, int>> enumerate_immoralities(const CausalDag& g) {
  std::vector<std::tuple<int, int, int>> out;
  auto skel = skeleton(g);
  for (const auto& child : g.variables) {
    auto pa = g.parents(child.id);
    for (size_t i = 0; i < pa.size(); ++i)
      for (size_t j = i + 1; j < pa.size(); ++j)
        if (!skel.count({std::min(pa[i], pa[j]), std::max(pa[i], pa[j])}))
          out.push_back({pa[i], child.id, pa[j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

MarkovWitness markov_equivalent(const CausalDag& g1, const CausalDag& g2) {
  std::vector<int> v1, v2;
  for (const auto& v : g1.variables) v1.push_back(v.id);
  for (const auto& v : g2.variables) v2.push_back(v.id);
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  if (v1 != v2) throw CatError("VariableSetMismatch", "diagrams have different variable sets");

  auto s1 = skeleton(g1), s2 = skeleton(g2);
  if (s1 != s2) {
    std::vector<std::pair<int, int>> diff;
    std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(diff));
    return {false, "skeleton", {diff.front().first, diff.front().second}};
  }
  auto i1 = enumerate_immoralities(g1), i2 = enumerate_immoralities(g2);
  if (i1 != i2) {
    std::set<std::tuple<int, int, int>> t1(i1.begin(), i1.end()), t2(i2.begin(), i2.end());
    std::vector<std::tuple<int, int, int>> diff;
    std::set_symmetric_difference(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(diff));
    auto [p, c, q] = diff.front();
    return {false, "immorality", {p, c, q}};
  }
  return {true, "", {}};
}

}  // namespace simplicat
