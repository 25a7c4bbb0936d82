#include <random>

#include "doctest.h"
#include "simplicat/causal.hpp"
#include "simplicat/homology.hpp"
#include "simplicat/library.hpp"
#include "simplicat/nerve.hpp"
#include "support/oracles.hpp"

using namespace simplicat;
using namespace simplicat::testing;

namespace {

FinCategory free_arrow() {
  Quiver q;
  q.vertices = {{0, "a"}, {1, "b"}};
  q.edges = {{0, "a->b", 0, 1}};
  return free_category(q);
}

CausalDag chain3() {
  CausalDag g;
  g.variables = {{0, "a"}, {1, "b"}, {2, "c"}};
  g.edges = {{0, 1}, {1, 2}};
  return make_dag(std::move(g));
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    out[i].assign(m[i].begin(), m[i].end());
  return out;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  SmithResult ident = smith_normal_form({{1, 0}, {0, 1}});
  CHECK(ident.invariants == std::vector<long long>{1, 1});
  CHECK(ident.rank == 2);
  CHECK(!ident.escalated);

  SmithResult single = smith_normal_form({{2, 0}, {0, 0}});
  CHECK(single.invariants == std::vector<long long>{2});
  CHECK(single.rank == 1);

  CHECK(smith_normal_form({}).rank == 0);
  CHECK(smith_normal_form({{0, 0}}).invariants.empty());

  // conjugate of diag(1,2) by unimodular factors
  SmithResult conj = smith_normal_form({{3, 2}, {2, 2}});
  CHECK(conj.invariants == std::vector<long long>{1, 2});

  // boundary of the triangle rim
  IntMatrix rim = {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  SmithResult rim_snf = smith_normal_form(rim);
  CHECK(rim_snf.invariants == std::vector<long long>{1, 1});
  CHECK(rim_snf.rank == 2);
}

TEST_CASE("smith transforms certify the diagonalization") {
  std::vector<IntMatrix> samples = {
      {{3, 2}, {2, 2}},
      {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}},
      {{6, 4}, {4, 8}},
      {{0, 5}, {7, 0}, {2, 3}},
  };
  for (const IntMatrix& a : samples) {
    SmithTransforms t = smith_with_transforms(a);
    CHECK(is_unimodular(t.u));
    CHECK(is_unimodular(t.v));
    BigMatrix big = to_big(a);
    size_t rows = big.size(), cols = rows ? big[0].size() : 0;
    BigMatrix ua(t.u.size(), std::vector<BigInt>(cols, 0));
    for (size_t i = 0; i < t.u.size(); ++i)
      for (size_t j = 0; j < cols; ++j)
        for (size_t k = 0; k < rows; ++k) ua[i][j] += t.u[i][k] * big[k][j];
    BigMatrix uav(ua.size(), std::vector<BigInt>(t.v[0].size(), 0));
    for (size_t i = 0; i < ua.size(); ++i)
      for (size_t j = 0; j < t.v[0].size(); ++j)
        for (size_t k = 0; k < cols; ++k) uav[i][j] += ua[i][k] * t.v[k][j];
    CHECK(uav == t.d);
  }
}

TEST_CASE("determinants and unimodularity") {
  CHECK(determinant({{BigInt(3), BigInt(2)}, {BigInt(2), BigInt(2)}}) == 2);
  CHECK(determinant({{BigInt(1)}}) == 1);
  CHECK(determinant({}) == 1);
  CHECK(is_unimodular({{BigInt(1), BigInt(5)}, {BigInt(0), BigInt(-1)}}));
  CHECK(!is_unimodular({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(1)}}));
  CHECK(!is_unimodular({{BigInt(1), BigInt(0)}}));
}

TEST_CASE("overflow escalates to arbitrary precision") {
  long long h = 4000000000LL;  // h*h overflows 64 bits
  IntMatrix a = {{1, h, 0}, {h, 0, 1}, {0, 1, 0}};
  CHECK(determinant(to_big(a)) == -1);  // unimodular, so the form is trivial
  SmithResult r = smith_normal_form(a);
  CHECK(r.escalated);
  CHECK(r.invariants == std::vector<long long>{1, 1, 1});
  CHECK(r.rank == 3);
}

TEST_CASE("chain complexes of standard spaces") {
  ChainComplex pt = chain_complex(standard_simplex(0, 3));
  REQUIRE(pt.basis.size() == 4);
  CHECK(pt.basis[0].size() == 1);
  CHECK(pt.basis[1].empty());
  CHECK(pt.boundary[1].size() == 1);
  CHECK(pt.boundary[1][0].empty());

  ChainComplex arrow = chain_complex(nerve(free_arrow(), 2).sset);
  REQUIRE(arrow.basis[0].size() == 2);
  REQUIRE(arrow.basis[1].size() == 1);
  CHECK(arrow.basis[2].empty());
  CHECK(arrow.boundary[1] == IntMatrix{{-1}, {1}});

  ChainComplex rim = chain_complex(boundary_sset(2, 2));
  REQUIRE(rim.basis[0].size() == 3);
  REQUIRE(rim.basis[1].size() == 3);
  CHECK(rim.basis[2].empty());
  SmithResult s = smith_normal_form(rim.boundary[1]);
  CHECK(s.rank == 2);

  // degenerate faces vanish: the two-element group nerve alternates 0 and 2
  ChainComplex z2cc = chain_complex(nerve(cyclic_group_2(), 4).sset);
  for (int n = 0; n <= 4; ++n) REQUIRE(z2cc.basis[n].size() == 1);
  CHECK(z2cc.boundary[1] == IntMatrix{{0}});
  CHECK(z2cc.boundary[2] == IntMatrix{{2}});
  CHECK(z2cc.boundary[3] == IntMatrix{{0}});
  CHECK(z2cc.boundary[4] == IntMatrix{{2}});
}

TEST_CASE("homology profiles of spheres and classifying spaces") {
  HomologyProfile circle = homology_profile(chain_complex(boundary_sset(2, 2)));
  CHECK(circle.betti == std::vector<long long>{1, 1, 0});
  for (auto& t : circle.torsion) CHECK(t.empty());

  HomologyProfile sphere = homology_profile(chain_complex(boundary_sset(3, 3)));
  CHECK(sphere.betti == std::vector<long long>{1, 0, 1, 0});

  HomologyProfile z2p = classifying_space_profile(cyclic_group_2(), 4);
  CHECK(z2p.betti == std::vector<long long>{1, 0, 0, 0, 0});
  REQUIRE(z2p.torsion.size() == 5);
  CHECK(z2p.torsion[0].empty());
  CHECK(z2p.torsion[1] == std::vector<long long>{2});
  CHECK(z2p.torsion[2].empty());
  CHECK(z2p.torsion[3] == std::vector<long long>{2});
  CHECK(z2p.torsion[4].empty());
}

TEST_CASE("profiles are invariant under basis permutation") {
  std::mt19937 rng(43);
  std::vector<ChainComplex> complexes = {
      chain_complex(boundary_sset(2, 2)),
      chain_complex(boundary_sset(3, 3)),
      chain_complex(nerve(cyclic_group_2(), 3).sset),
      chain_complex(nerve(dag_to_category(chain3()), 3).sset),
  };
  for (const ChainComplex& cc : complexes) {
    HomologyProfile base = homology_profile(cc);
    for (int trial = 0; trial < 5; ++trial) {
      HomologyProfile shuffled = homology_profile(shuffle_complex(cc, rng));
      CHECK(shuffled.betti == base.betti);
      CHECK(shuffled.torsion == base.torsion);
    }
  }
}

TEST_CASE("degree zero counts connected components") {
  for (const auto& [name, cat] : category_library()) {
    HomologyProfile p = classifying_space_profile(cat, 2);
    CHECK_MESSAGE(p.betti[0] == component_count(cat), name);
  }
}

TEST_CASE("categories with a terminal or initial object are contractible") {
  int swept = 0;
  for (const auto& [name, cat] : category_library()) {
    if (!has_terminal_object(cat) && !has_initial_object(cat)) continue;
    HomologyProfile p = classifying_space_profile(cat, 4);
    for (int n = 0; n <= 3; ++n) {
      CHECK_MESSAGE(p.betti[n] == (n == 0 ? 1 : 0), name, " degree ", n);
      CHECK_MESSAGE(p.torsion[n].empty(), name, " degree ", n);
    }
    ++swept;
  }
  CHECK(swept > 10);
}

TEST_CASE("top truncation degree is the only unstable one") {
  // the walking isomorphism is contractible but its rank-3 profile has a
  // spurious class in the top degree
  FinCategory iso = walking_isomorphism();
  HomologyProfile shallow = classifying_space_profile(iso, 3);
  CHECK(shallow.betti == std::vector<long long>{1, 0, 0, 1});
  HomologyProfile deep = classifying_space_profile(iso, 4);
  for (int n = 0; n <= 3; ++n) CHECK(deep.betti[n] == (n == 0 ? 1 : 0));
}

TEST_CASE("element category profiles") {
  FinCategory schema = dag_to_category(chain3());
  SetFunctor singleton;
  singleton.schema = schema;
  singleton.table = {{0, {0}}, {1, {0}}, {2, {0}}};
  singleton.action = {{3, {{0, 0}}}, {4, {{0, 0}}}, {5, {{0, 0}}}};
  singleton = make_instance(std::move(singleton));
  HomologyProfile via_elements = hocolim_profile(singleton, 3);
  HomologyProfile direct = classifying_space_profile(schema, 3);
  CHECK(via_elements.betti == direct.betti);
  CHECK(via_elements.torsion == direct.torsion);

  SetFunctor two;
  two.schema = free_arrow();
  two.table = {{0, {0, 1}}, {1, {0, 1}}};
  two.action = {{2, {{0, 0}, {1, 1}}}};
  two = make_instance(std::move(two));
  CHECK(hocolim_profile(two, 2).betti[0] == 2);

  SetFunctor none;
  none.schema = free_arrow();
  none.table = {{0, {}}, {1, {}}};
  none.action = {{2, {}}};
  none = make_instance(std::move(none));
  HomologyProfile empty = hocolim_profile(none, 2);
  for (long long b : empty.betti) CHECK(b == 0);
}

TEST_CASE("effect certification compares stable degrees") {
  HomologyProfile pt = classifying_space_profile(discrete_category(1), 2);
  CausalEffectVerdict same = causal_effect(pt, pt);
  CHECK(!same.certified);
  CHECK(same.degree == -1);

  HomologyProfile circle = homology_profile(chain_complex(boundary_sset(2, 2)));
  CausalEffectVerdict loop = causal_effect(pt, circle);
  REQUIRE(loop.certified);
  CHECK(loop.degree == 1);
  CHECK(loop.invariant.find("betti") != std::string::npos);
  CausalEffectVerdict back = causal_effect(circle, pt);
  CHECK(back.certified == loop.certified);
  CHECK(back.degree == loop.degree);

  HomologyProfile deep = classifying_space_profile(discrete_category(1), 3);
  try {
    causal_effect(pt, deep);
    CHECK(false);
  } catch (const CatError& e) {
    CHECK(e.kind == "TruncationMismatch");
  }

  // the top degree never certifies: circle vs point agree below degree 1
  // at truncation 1, where the loop class is unstable
  HomologyProfile c1 = homology_profile(chain_complex(boundary_sset(2, 1)));
  HomologyProfile p1 = classifying_space_profile(discrete_category(1), 1);
  CHECK(!causal_effect(c1, p1).certified);
}

TEST_CASE("binding a disconnecting row is certified in degree zero") {
  SetFunctor inst;
  inst.schema = dag_to_category(chain3());
  inst.table = {{0, {0}}, {1, {0, 1}}, {2, {0}}};
  inst.action = {{3, {{0, 0}}}, {4, {{0, 0}, {1, 0}}}};
  inst = make_instance(complete_actions(std::move(inst)));

  HomologyProfile before = hocolim_profile(inst, 2);
  CHECK(before.betti[0] == 1);
  SetFunctor bound = do_bind(inst, 1, 0);
  HomologyProfile after = hocolim_profile(bound, 2);
  CHECK(after.betti[0] == 2);

  CausalEffectVerdict v = causal_effect(before, after);
  REQUIRE(v.certified);
  CHECK(v.degree == 0);

  // binding a row that disconnects nothing stays inconclusive
  SetFunctor solo;
  solo.schema = dag_to_category(chain3());
  solo.table = {{0, {}}, {1, {0}}, {2, {0}}};
  solo.action = {{3, {}}, {4, {{0, 0}}}};
  solo = make_instance(complete_actions(std::move(solo)));
  CausalEffectVerdict quiet =
      causal_effect(hocolim_profile(solo, 2), hocolim_profile(do_bind(solo, 1, 0), 2));
  CHECK(!quiet.certified);
}
