#include <algorithm>
#include <set>

#include "doctest.h"
#include "simplicat/fincat.hpp"
#include "simplicat/library.hpp"
#include "support/oracles.hpp"

using namespace simplicat;
using namespace simplicat::testing;

namespace {

Quiver chain_quiver() {
  Quiver q;
  q.vertices = {{0, "a"}, {1, "b"}, {2, "c"}};
  q.edges = {{0, "a->b", 0, 1}, {1, "b->c", 1, 2}};
  return q;
}

FinCategory split_idempotent_category() {
  FinCategory c;
  c.objects = {{0, "a"}, {1, "b"}};
  c.morphisms = {{0, "id_a", 0, 0}, {1, "id_b", 1, 1}, {2, "i", 0, 1}, {3, "r", 1, 0}, {4, "e", 1, 1}};
  c.identity = {{0, 0}, {1, 1}};
  c.comp = {{{0, 0}, 0}, {{1, 1}, 1}, {{2, 0}, 2}, {{1, 2}, 2}, {{3, 1}, 3},
            {{0, 3}, 3}, {{4, 1}, 4}, {{1, 4}, 4}, {{3, 2}, 0}, {{2, 3}, 4},
            {{4, 4}, 4}, {{4, 2}, 2}, {{3, 4}, 3}};
  return make_category(std::move(c));
}

}  // namespace

TEST_CASE("category validation accepts the basic shapes") {
  CHECK(category_library().size() > 20);
  for (const auto& entry : category_library()) CHECK(validate_category(entry.cat).empty());

  FinCategory point = discrete_category(1);
  CHECK(point.objects.size() == 1);
  CHECK(point.morphisms.size() == 1);

  FinCategory z2 = cyclic_group_2();
  CHECK(validate_category(z2).empty());
  int s = 1;
  CHECK(!z2.is_identity(s));
  CHECK(z2.compose(s, s) == z2.identity_of(0));
}

TEST_CASE("category validation reports each defect kind") {
  FinCategory bad;
  bad.objects = {{0, "x"}};
  bad.morphisms = {{0, "id", 0, 0}, {1, "a", 0, 0}, {2, "b", 0, 0}};
  bad.identity = {{0, 0}};
  bad.comp = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{0, 2}, 2}, {{2, 0}, 2},
              {{1, 1}, 2}, {{2, 1}, 2}, {{1, 2}, 1}, {{2, 2}, 2}};
  auto issues = validate_category(bad);
  CHECK(std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return i.kind == "NonAssociative"; }));
  CHECK_THROWS_AS(make_category(bad), CatError);

  FinCategory missing;
  missing.objects = {{0, "a"}, {1, "b"}, {2, "c"}};
  missing.morphisms = {{0, "id_a", 0, 0}, {1, "id_b", 1, 1}, {2, "id_c", 2, 2}, {3, "f", 0, 1}, {4, "g", 1, 2}};
  missing.identity = {{0, 0}, {1, 1}, {2, 2}};
  missing.comp = {{{0, 0}, 0}, {{1, 1}, 1}, {{2, 2}, 2}, {{3, 0}, 3}, {{1, 3}, 3}, {{4, 1}, 4}, {{2, 4}, 4}};
  auto missing_issues = validate_category(missing);
  CHECK(std::any_of(missing_issues.begin(), missing_issues.end(),
                    [](const Issue& i) { return i.kind == "MissingComposite"; }));

  FinCategory badid;
  badid.objects = {{0, "x"}};
  badid.morphisms = {{0, "id", 0, 0}, {1, "f", 0, 0}};
  badid.identity = {{0, 0}};
  badid.comp = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 0}, {{1, 1}, 1}};
  auto badid_issues = validate_category(badid);
  CHECK(std::any_of(badid_issues.begin(), badid_issues.end(),
                    [](const Issue& i) { return i.kind == "BadIdentity"; }));
}

TEST_CASE("free category on a chain quiver") {
  FinCategory c = free_category(chain_quiver());
  CHECK(c.objects.size() == 3);
  CHECK(c.morphisms.size() == 6);
  CHECK(c.hom(0, 2).size() == 1);
  int composite = c.hom(0, 2)[0];
  CHECK(c.morphism(composite).label == "a->b->c");
  CHECK(c.morphism(c.identity_of(0)).label == "id_a");
  CHECK(generator_path(c, composite) == std::vector<int>{3, 4});
  CHECK(indecomposable_morphisms(c) == std::vector<int>{3, 4});

  Quiver lone;
  lone.vertices = {{0, "v"}};
  FinCategory point = free_category(lone);
  CHECK(point.objects.size() == 1);
  CHECK(point.morphisms.size() == 1);
}

TEST_CASE("free category rejects cycles") {
  Quiver loop;
  loop.vertices = {{0, "a"}};
  loop.edges = {{0, "a->a", 0, 0}};
  try {
    free_category(loop);
    CHECK(false);
  } catch (const CatError& e) {
    CHECK(e.kind == "CyclicQuiver");
  }

  Quiver two;
  two.vertices = {{0, "a"}, {1, "b"}};
  two.edges = {{0, "f", 0, 1}, {1, "g", 1, 0}};
  try {
    free_category(two);
    CHECK(false);
  } catch (const CatError& e) {
    CHECK(e.kind == "CyclicQuiver");
  }
}

TEST_CASE("free category path counts match the dynamic-programming oracle") {
  auto dp_paths = [](const Quiver& q) {
    std::map<int, long long> starting;
    // acyclic: repeated relaxation until fixpoint reaches the DAG closure
    for (const auto& v : q.vertices) starting[v.id] = 1;
    for (size_t pass = 0; pass <= q.vertices.size(); ++pass)
      for (const auto& v : q.vertices) {
        long long total = 1;
        for (const auto& e : q.edges)
          if (e.src == v.id) total += starting[e.tgt];
        starting[v.id] = total;
      }
    long long sum = 0;
    for (const auto& [id, n] : starting) sum += n;
    return sum;
  };

  Quiver triangle;
  triangle.vertices = {{0, "a"}, {1, "b"}, {2, "c"}};
  triangle.edges = {{0, "ab", 0, 1}, {1, "bc", 1, 2}, {2, "ac", 0, 2}};
  CHECK(static_cast<long long>(free_category(triangle).morphisms.size()) == dp_paths(triangle));
  CHECK(free_category(triangle).morphisms.size() == 7);
  CHECK(static_cast<long long>(free_category(chain_quiver()).morphisms.size()) == dp_paths(chain_quiver()));

  for (const auto& q : dag_quivers(3))
    CHECK(static_cast<long long>(free_category(q).morphisms.size()) == dp_paths(q));
}

TEST_CASE("opposite is an involution and transposes homs") {
  for (const auto& entry : category_library()) {
    FinCategory op = opposite(entry.cat);
    CHECK(validate_category(op).empty());
    CHECK(opposite(op) == entry.cat);
    for (int x : entry.cat.object_ids())
      for (int y : entry.cat.object_ids())
        CHECK(op.hom(x, y).size() == entry.cat.hom(y, x).size());
  }
}

TEST_CASE("functor enumeration matches hand counts") {
  CHECK(enumerate_functors(chain_poset(1), chain_poset(2)).size() == 6);
  // composability collapses the chain onto a single object of a discrete target
  CHECK(enumerate_functors(free_category(chain_quiver()), discrete_category(2)).size() == 2);
  CHECK(enumerate_functors(cyclic_group_2(), cyclic_group_2()).size() == 2);
  CHECK(enumerate_functors(discrete_category(3), discrete_category(2)).size() == 8);

  FinCategory c = chain_poset(2);
  for (const Functor& f : enumerate_functors(c, c)) {
    CHECK(validate_functor(f).empty());
    CHECK(functor_equal(compose_functors(identity_functor(c), f), f));
    CHECK(functor_equal(compose_functors(f, identity_functor(c)), f));
  }
}

TEST_CASE("natural transformation enumeration") {
  FinCategory point = discrete_category(1);
  Functor idp = identity_functor(point);
  CHECK(enumerate_nat_transformations(idp, idp).size() == 1);

  FinCategory p1 = chain_poset(1);
  CHECK(enumerate_nat_transformations(identity_functor(p1), identity_functor(p1)).size() == 1);

  // constant functors into a discrete target with no connecting arrow
  FinCategory d2 = discrete_category(2);
  Functor at0 = make_functor({p1, d2, {{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {2, 0}}});
  Functor at1 = make_functor({p1, d2, {{0, 1}, {1, 1}}, {{0, 1}, {1, 1}, {2, 1}}});
  CHECK(enumerate_nat_transformations(at0, at1).empty());
  CHECK(enumerate_nat_transformations(at0, at0).size() == 1);
}

TEST_CASE("set-valued transformation enumeration and representables") {
  FinCategory p1 = chain_poset(1);
  SetFunctor k = representable(p1, 0);
  CHECK(k.rows(0).size() == 1);
  CHECK(k.rows(1).size() == 1);
  CHECK(enumerate_set_nats(k, k).size() == 1);

  FinCategory chain = free_category(chain_quiver());
  SetFunctor ka = representable(chain, 0);
  CHECK(ka.rows(0) == std::vector<int>{chain.identity_of(0)});
  CHECK(ka.rows(2).size() == 1);
  int f = chain.hom(0, 1)[0];
  CHECK(ka.act(f, chain.identity_of(0)) == f);
}

TEST_CASE("yoneda bijection on pinned instances") {
  FinCategory p1 = chain_poset(1);
  BijectionReport r = yoneda_check(p1, 0, representable(p1, 0));
  CHECK(r.holds);
  CHECK(r.left == 1);
  CHECK(r.right == 1);

  FinCategory p2 = chain_poset(2);
  BijectionReport r2 = yoneda_check(p2, 1, representable(p2, 0));
  CHECK(r2.holds);
  CHECK(r2.right == 1);

  SetFunctor empty_k;
  empty_k.schema = p1;
  empty_k.table = {{0, {}}, {1, {}}};
  empty_k.action = {{1, {}}};
  BijectionReport r3 = yoneda_check(p1, 0, empty_k);
  CHECK(r3.holds);
  CHECK(r3.left == 0);
  CHECK(r3.right == 0);
}

TEST_CASE("yoneda holds for representables across the library") {
  for (const auto& entry : category_library())
    for (int r : entry.cat.object_ids())
      for (int x : entry.cat.object_ids()) {
        BijectionReport rep = yoneda_check(entry.cat, r, representable(entry.cat, x));
        CHECK_MESSAGE(rep.holds, entry.name, " r=", r, " K=Hom(", x, ",-)");
        CHECK(rep.left == rep.right);
        CHECK(rep.injective);
        CHECK(rep.surjective);
      }
}

TEST_CASE("hom-set reproduction through presheaf maps") {
  FinCategory point = discrete_category(1);
  BijectionReport r0 = crp_check(point, 0, 0);
  CHECK(r0.holds);
  CHECK(r0.left == 1);

  Quiver ab;
  ab.vertices = {{0, "a"}, {1, "b"}};
  ab.edges = {{0, "a->b", 0, 1}};
  FinCategory c = free_category(ab);
  BijectionReport r1 = crp_check(c, 0, 1);
  CHECK(r1.holds);
  CHECK(r1.left == 1);

  BijectionReport r2 = crp_check(discrete_category(2), 0, 1);
  CHECK(r2.holds);
  CHECK(r2.left == 0);

  for (const auto& entry : category_library())
    for (int x : entry.cat.object_ids())
      for (int y : entry.cat.object_ids())
        CHECK_MESSAGE(crp_check(entry.cat, x, y).holds, entry.name, " X=", x, " Y=", y);
}

TEST_CASE("universal arrow verdicts") {
  for (const auto& entry : category_library())
    for (int c : entry.cat.object_ids()) {
      UniversalityVerdict v =
          check_universal_arrow(identity_functor(entry.cat), c, c, entry.cat.identity_of(c));
      CHECK_MESSAGE(v.holds, entry.name, " object ", c);
    }

  // a discrete source has no morphism to factor an arrow of the target through
  Quiver xy;
  xy.vertices = {{0, "x"}, {1, "y"}};
  xy.edges = {{0, "x->y", 0, 1}};
  FinCategory c = free_category(xy);
  FinCategory d = discrete_category(2);
  Functor endpoints = make_functor({d, c, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}});
  UniversalityVerdict v = check_universal_arrow(endpoints, 0, 0, c.identity_of(0));
  CHECK(!v.holds);
  CHECK(v.fail_solutions == 0);
  CHECK(v.fail_object == 1);
  CHECK(v.fail_morphism == c.hom(0, 1)[0]);
}

TEST_CASE("path categories restrict to quiver maps one for one") {
  Quiver q;
  q.vertices = {{0, "a"}, {1, "b"}};
  q.edges = {{0, "a->b", 0, 1}};
  FinCategory fq = free_category(q);
  std::vector<FinCategory> targets = {chain_poset(2), cyclic_group_2(), free_category(chain_quiver())};
  for (const FinCategory& e : targets) {
    std::vector<Functor> fs = enumerate_functors(fq, e);
    CHECK(static_cast<long long>(fs.size()) == count_quiver_maps(q, e));
    std::set<std::pair<std::map<int, int>, int>> restrictions;
    for (const Functor& f : fs) restrictions.insert({f.omap, f.on_morphism(2)});
    CHECK(restrictions.size() == fs.size());
  }
}

TEST_CASE("retract witnesses") {
  FinCategory p1 = chain_poset(1);
  auto same = is_retract(p1, 0, 0);
  REQUIRE(same.has_value());
  CHECK(same->section == p1.identity_of(0));
  CHECK(same->retraction == p1.identity_of(0));

  CHECK(!is_retract(p1, 1, 0).has_value());

  FinCategory split = split_idempotent_category();
  auto w = is_retract(split, 0, 1);
  REQUIRE(w.has_value());
  CHECK(w->section == 2);
  CHECK(w->retraction == 3);
  CHECK(split.compose(w->retraction, w->section) == split.identity_of(0));

  FinCategory iso = walking_isomorphism();
  CHECK(is_retract(iso, 0, 1).has_value());
}

TEST_CASE("indecomposables and generator paths degrade gracefully") {
  FinCategory idem = walking_idempotent();
  CHECK(indecomposable_morphisms(idem).empty());
  int e = -1;
  for (const auto& m : idem.morphisms)
    if (!idem.is_identity(m.id)) e = m.id;
  REQUIRE(e >= 0);
  try {
    generator_path(idem, e);
    CHECK(false);
  } catch (const CatError& err) {
    CHECK(err.kind == "UnsupportedSchema");
  }

  FinCategory z2 = cyclic_group_2();
  CHECK(indecomposable_morphisms(z2) == std::vector<int>{1});
}
