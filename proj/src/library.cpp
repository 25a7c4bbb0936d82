#include "simplicat/library.hpp"

#include <functional>

namespace simplicat {

FinCategory discrete_category(int n) {
  FinCategory c;
  for (int i = 0; i < n; ++i) {
    c.objects.push_back({i, "x" + std::to_string(i)});
    c.morphisms.push_back({i, "id_x" + std::to_string(i), i, i});
    c.identity[i] = i;
    c.comp[{i, i}] = i;
  }
  return c;
}

FinCategory chain_poset(int n) {
  FinCategory c;
  for (int i = 0; i <= n; ++i) c.objects.push_back({i, std::to_string(i)});
  int mid = 0;
  std::map<std::pair<int, int>, int> arrow;  // (x, y) -> morphism id for x <= y
  for (int x = 0; x <= n; ++x)
    for (int y = x; y <= n; ++y) {
      std::string label = x == y ? "id_" + std::to_string(x)
                                 : std::to_string(x) + "<=" + std::to_string(y);
      c.morphisms.push_back({mid, label, x, y});
      arrow[{x, y}] = mid;
      if (x == y) c.identity[x] = mid;
      ++mid;
    }
  for (const auto& f : c.morphisms)
    for (const auto& g : c.morphisms)
      if (f.tgt == g.src) c.comp[{g.id, f.id}] = arrow.at({f.src, g.tgt});
  return c;
}

FinCategory cyclic_group_2() {
  FinCategory c;
  c.objects.push_back({0, "x"});
  c.morphisms.push_back({0, "id_x", 0, 0});
  c.morphisms.push_back({1, "s", 0, 0});
  c.identity[0] = 0;
  c.comp[{0, 0}] = 0;
  c.comp[{0, 1}] = 1;
  c.comp[{1, 0}] = 1;
  c.comp[{1, 1}] = 0;
  return c;
}

FinCategory walking_idempotent() {
  FinCategory c;
  c.objects.push_back({0, "x"});
  c.morphisms.push_back({0, "id_x", 0, 0});
  c.morphisms.push_back({1, "e", 0, 0});
  c.identity[0] = 0;
  c.comp[{0, 0}] = 0;
  c.comp[{0, 1}] = 1;
  c.comp[{1, 0}] = 1;
  c.comp[{1, 1}] = 1;
  return c;
}

FinCategory walking_isomorphism() {
  FinCategory c;
  c.objects.push_back({0, "a"});
  c.objects.push_back({1, "b"});
  c.morphisms.push_back({0, "id_a", 0, 0});
  c.morphisms.push_back({1, "id_b", 1, 1});
  c.morphisms.push_back({2, "f", 0, 1});
  c.morphisms.push_back({3, "g", 1, 0});
  c.identity[0] = 0;
  c.identity[1] = 1;
  c.comp[{0, 0}] = 0;
  c.comp[{1, 1}] = 1;
  c.comp[{2, 0}] = 2;
  c.comp[{1, 2}] = 2;
  c.comp[{3, 1}] = 3;
  c.comp[{0, 3}] = 3;
  c.comp[{3, 2}] = 0;  // g.f = id_a
  c.comp[{2, 3}] = 1;  // f.g = id_b
  return c;
}

std::vector<Quiver> dag_quivers(int n) {
  std::vector<Quiver> out;
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) slots.push_back({a, b});
  const std::string names = "abcdefgh";
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    Quiver q;
    for (int v = 0; v < n; ++v) q.vertices.push_back({v, std::string(1, names[v])});
    int eid = 0;
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask & (1u << s)) {
        auto [a, b] = slots[s];
        q.edges.push_back({eid++, std::string(1, names[a]) + "->" + std::string(1, names[b]), a, b});
      }
    // acyclicity probe: reuse the free-category cycle check
    try {
      free_category(q);
    } catch (const CatError&) {
      continue;
    }
    out.push_back(q);
  }
  return out;
}

const std::vector<LibraryEntry>& category_library() {
  static const std::vector<LibraryEntry> lib = [] {
    std::vector<LibraryEntry> v;
    for (int n = 1; n <= 3; ++n)
      v.push_back({"discrete" + std::to_string(n), discrete_category(n)});
    for (int n = 0; n <= 3; ++n)
      v.push_back({"poset[" + std::to_string(n) + "]", chain_poset(n)});
    for (int n = 1; n <= 3; ++n) {
      auto quivers = dag_quivers(n);
      for (size_t i = 0; i < quivers.size(); ++i)
        v.push_back({"freedag" + std::to_string(n) + "_" + std::to_string(i),
                     free_category(quivers[i])});
    }
    v.push_back({"z2", cyclic_group_2()});
    v.push_back({"idem", walking_idempotent()});
    v.push_back({"iso", walking_isomorphism()});
    return v;
  }();
  return lib;
}

}  // namespace simplicat
