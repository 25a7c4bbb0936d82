#include <vector>

#include "doctest.h"
#include "simplicat/library.hpp"
#include "simplicat/nerve.hpp"
#include "support/oracles.hpp"

using namespace simplicat;
using namespace simplicat::testing;

namespace {

FinCategory free_chain() {
  Quiver q;
  q.vertices = {{0, "a"}, {1, "b"}, {2, "c"}};
  q.edges = {{0, "a->b", 0, 1}, {1, "b->c", 1, 2}};
  return free_category(q);
}

FinCategory free_arrow() {
  Quiver q;
  q.vertices = {{0, "a"}, {1, "b"}};
  q.edges = {{0, "a->b", 0, 1}};
  return free_category(q);
}

}  // namespace

TEST_CASE("nerve of the point") {
  Nerve n = nerve(discrete_category(1), 3);
  CHECK(n.sset.level_sizes == std::vector<int>{1, 1, 1, 1});
  CHECK(!n.sset.degenerate[0][0]);
  for (int k = 1; k <= 3; ++k) CHECK(n.sset.degenerate[k][0]);
  CHECK(audit_sset(n.sset).empty());
}

TEST_CASE("nerve of the chain category") {
  Nerve n = nerve(free_chain(), 2);
  CHECK(n.sset.level_sizes == std::vector<int>{3, 6, 10});
  CHECK(n.sset.nondegenerate_counts() == std::vector<int>{3, 3, 1});
  CHECK(audit_sset(n.sset).empty());
}

TEST_CASE("nerve of the arrow poset at truncation 1") {
  Nerve n = nerve(chain_poset(1), 1);
  CHECK(n.sset.level_sizes == std::vector<int>{2, 3});
  std::vector<std::vector<int>> expected = {{0}, {1}, {2}};
  CHECK(n.chains[1] == expected);
}

TEST_CASE("level counts match the chain-count oracle across the library") {
  for (const auto& entry : category_library()) {
    Nerve n = nerve(entry.cat, 4);
    auto counts = chain_count_oracle(entry.cat, 4);
    REQUIRE(n.sset.level_sizes.size() == counts.size());
    for (size_t k = 0; k < counts.size(); ++k)
      CHECK_MESSAGE(static_cast<long long>(n.sset.level_sizes[k]) == counts[k],
                    entry.name, " level ", k);
    CHECK_MESSAGE(audit_sset(n.sset).empty(), entry.name);
  }
}

TEST_CASE("face and degeneracy formulas on chains") {
  FinCategory c = free_chain();
  int f = c.hom(0, 1)[0];
  int g = c.hom(1, 2)[0];
  int gf = c.hom(0, 2)[0];

  CHECK(apply_face_to_chain(c, {f, g}, 1) == std::vector<int>{gf});
  CHECK(apply_face_to_chain(c, {f, g}, 0) == std::vector<int>{g});
  CHECK(apply_face_to_chain(c, {f, g}, 2) == std::vector<int>{f});
  CHECK(apply_face_to_chain(c, {f}, 1) == std::vector<int>{0});
  CHECK(apply_face_to_chain(c, {f}, 0) == std::vector<int>{1});
  CHECK(apply_degeneracy_to_chain(c, {f}, 0) == std::vector<int>{c.identity_of(0), f});
  CHECK(apply_degeneracy_to_chain(c, {f}, 1) == std::vector<int>{f, c.identity_of(1)});
  CHECK_THROWS_AS(apply_face_to_chain(c, {f, g}, 3), CatError);

  Nerve n = nerve(c, 2);
  for (int x = 0; x < n.sset.level_sizes[2]; ++x)
    for (int i = 0; i <= 2; ++i)
      CHECK(n.chains[1][n.sset.face(2, i, x)] == apply_face_to_chain(c, n.chains[2][x], i));
  for (int x = 0; x < n.sset.level_sizes[1]; ++x)
    for (int j = 0; j <= 1; ++j)
      CHECK(n.chains[2][n.sset.degeneracy(1, j, x)] ==
            apply_degeneracy_to_chain(c, n.chains[1][x], j));
}

TEST_CASE("degenerate simplices are exactly identity-bearing chains") {
  for (const auto& entry : category_library()) {
    Nerve n = nerve(entry.cat, 3);
    for (int k = 1; k <= 3; ++k)
      for (int x = 0; x < n.sset.level_sizes[k]; ++x) {
        bool has_identity = false;
        for (int m : n.chains[k][x])
          if (entry.cat.is_identity(m)) has_identity = true;
        CHECK(n.sset.degenerate[k][x] == has_identity);
      }
  }
}

TEST_CASE("nerve maps of functors are simplicial maps") {
  FinCategory c = free_arrow();
  FinCategory d = chain_poset(2);
  Nerve nc = nerve(c, 2);
  Nerve nd = nerve(d, 2);
  std::vector<SSetMap> maps = enumerate_sset_maps(nc.sset, nd.sset);
  std::vector<Functor> functors = enumerate_functors(c, d);
  CHECK(maps.size() == functors.size());
  for (const Functor& f : functors) {
    SSetMap image = nerve_map_of_functor(nc, nd, f);
    bool found = false;
    for (const SSetMap& m : maps)
      if (m.level == image.level) found = true;
    CHECK(found);
  }
}

TEST_CASE("two-truncated nerve maps biject with functors on pinned pairs") {
  FinCategory point = discrete_category(1);
  BijectionReport r0 = nerve_fully_faithful_check(point, point);
  CHECK(r0.holds);
  CHECK(r0.left == 1);
  CHECK(r0.right == 1);

  BijectionReport r1 = nerve_fully_faithful_check(chain_poset(1), chain_poset(2));
  CHECK(r1.holds);
  CHECK(r1.left == 6);
  CHECK(r1.right == 6);

  BijectionReport r2 = nerve_fully_faithful_check(free_arrow(), discrete_category(2));
  CHECK(r2.holds);
  CHECK(r2.left == 2);
  CHECK(r2.right == 2);
}

TEST_CASE("two-truncated nerve maps biject with functors on a library sample") {
  std::vector<FinCategory> sample = {chain_poset(1), chain_poset(2), free_arrow(),
                                     free_chain(),   cyclic_group_2(), walking_idempotent(),
                                     walking_isomorphism()};
  for (const FinCategory& c : sample)
    for (const FinCategory& d : sample) {
      BijectionReport r = nerve_fully_faithful_check(c, d);
      CHECK(r.holds);
      CHECK(r.left == r.right);
    }
}

TEST_CASE("scale guard on the full-faithfulness check") {
  try {
    nerve_fully_faithful_check(discrete_category(5), discrete_category(1));
    CHECK(false);
  } catch (const CatError& e) {
    CHECK(e.kind == "ScaleExceeded");
  }
}
