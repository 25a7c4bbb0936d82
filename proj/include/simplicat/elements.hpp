#ifndef SIMPLICAT_ELEMENTS_HPP
#define SIMPLICAT_ELEMENTS_HPP

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "simplicat/causal.hpp"
#include "simplicat/fincat.hpp"

namespace simplicat {

/** Structural audit of a set-valued instance: total actions inside the
 *  tables (MissingAction / DanglingRow) and functoriality of the action
 *  assignment (NonFunctorial). */
std::vector<Issue> validate_instance(const SetFunctor& inst);
SetFunctor make_instance(SetFunctor raw);

/** For a schema freely generated by its indecomposable morphisms, completes
 *  an action table given only on the generators; throws UnsupportedSchema
 *  otherwise and NonFunctorial when a supplied composite disagrees. */
SetFunctor complete_actions(SetFunctor inst);

/**
 * Category of elements of an instance. Objects are (schema object, row)
 * pairs, morphisms are (schema morphism, source row) pairs; both numbered
 * ascending in that order. The projection sends them back to the schema.
 */
struct ElementsCategory {
  FinCategory cat;
  std::vector<std::pair<int, int>> object_elem;    // elements object id -> (schema obj, row)
  std::vector<std::pair<int, int>> morphism_elem;  // elements morphism id -> (schema mor, row)
  Functor projection;                              // cat -> schema

  int object_of(int schema_obj, int row) const;    // throws UnknownRow
};

ElementsCategory category_of_elements(const SetFunctor& inst);

struct FiberReport {
  bool holds = true;
  // per schema object: (fiber object count, table size)
  std::vector<std::tuple<int, long long, long long>> fibers;
  // per schema morphism: every source element has exactly one lift
  bool unique_lifts = true;
};

/** Fiber sizes match tables and every (morphism, source row) has exactly
 *  one lift starting there. */
FiberReport check_opfibration_fibers(const SetFunctor& inst);

/** Commutative square f, p with fillers sought on the diagonal:
 *      A --mu--> X
 *      |         |
 *      f         p
 *      v         v
 *      B --nu--> Y        solutions h : B -> X, p.h = nu and h.f = mu. */
struct LiftingProblem {
  Functor f;
  Functor p;
  Functor mu;
  Functor nu;
};

/** All solutions in lexicographic order (object map, then morphism map);
 *  throws NonCommutingSquare unless p.mu = nu.f. */
std::vector<Functor> solve_lifting(const LiftingProblem& prob);

struct LiftingPropertyReport {
  bool holds = true;
  std::string side;                 // "left" or "right", label only
  long long squares = 0;
  long long solvable = 0;
  // first unsolvable square, if any
  bool has_witness = false;
  Functor witness_mu, witness_nu;
};

/** Enumerates every commuting square over (f, p) and checks solvability. */
LiftingPropertyReport check_lifting_property(const Functor& f, const Functor& p, const std::string& side);

/** Pullback migration: composes the instance with F (tables and actions
 *  pulled back along the functor). */
SetFunctor migrate_pullback(const Functor& F, const SetFunctor& eps);

struct LeftKanResult {
  SetFunctor out;                   // instance over F.target
  // per target object: classes as sorted lists of (source obj, arrow to t, row)
  std::map<int, std::vector<std::vector<std::tuple<int, int, int>>>> classes;
};

/** Left Kan extension along F via zig-zag classes over the comma category
 *  (F down t); row ids are class indices, representatives are the least
 *  members. */
LeftKanResult migrate_left_kan(const Functor& F, const SetFunctor& delta);

struct RightKanResult {
  SetFunctor out;                   // instance over F.target
  // per target object: comma objects (source obj, arrow from t) then tuples
  std::map<int, std::vector<std::pair<int, int>>> comma_objects;
  std::map<int, std::vector<std::vector<int>>> tuples;  // row id -> compatible tuple
};

/** Right Kan extension along F: rows are compatible tuples over the comma
 *  category (t down F), listed lexicographically. */
RightKanResult migrate_right_kan(const Functor& F, const SetFunctor& delta);

struct PullbackSquareReport {
  bool holds = false;
  long long elements_objects = 0;
  long long fiber_product_objects = 0;
  long long elements_morphisms = 0;
  long long fiber_product_morphisms = 0;
};

/** Elements of the pulled-back instance against the fiber product of the
 *  schema with the elements of the original: componentwise comparison.
 *  Throws NotPullbackInstance when delta is not the pullback of eps. */
PullbackSquareReport verify_pullback_square(const Functor& F, const SetFunctor& eps, const SetFunctor& delta);

struct AdjunctionReport {
  bool holds = false;
  long long left_hom = 0;    // |Hom(Sigma_F delta, eps)| or |Hom(Delta_F eps, delta)|
  long long right_hom = 0;   // |Hom(delta, Delta_F eps)| or |Hom(eps, Pi_F delta)|
};

/** |Hom(Sigma_F delta, eps)| = |Hom(delta, Delta_F eps)|. */
AdjunctionReport check_left_adjunction(const Functor& F, const SetFunctor& delta, const SetFunctor& eps);
/** |Hom(Delta_F eps, delta)| = |Hom(eps, Pi_F delta)|. */
AdjunctionReport check_right_adjunction(const Functor& F, const SetFunctor& delta, const SetFunctor& eps);

/** Row binding: restricts the variable's table to one row, removes the
 *  schema's generator morphisms into the variable (and every composite
 *  through them) and restricts the surviving actions. Requires a freely
 *  generated schema (UnsupportedSchema) and a known row (UnknownRow). */
SetFunctor do_bind(const SetFunctor& inst, int variable, int row);

/** Two-object schema for directed graphs: arrows src, tgt : E -> V. */
FinCategory graph_schema();
/** A diagram encoded as an instance over graph_schema: rows of V are the
 *  variables, rows of E the edge indices. */
SetFunctor dag_as_graph_instance(const CausalDag& g);

/** Built-in query shapes. */
FinCategory walking_collider_shape();   // a -> b <- c
FinCategory source_edge_shape();        // e -> v

struct ColliderMatch {
  int parent1 = -1;
  int child = -1;
  int parent2 = -1;   // parent1 < parent2 by id
  bool parents_adjacent = false;
};

/** Collider occurrences found by lifting the walking collider over the
 *  graph encoding of the diagram; matches are canonical (parent1 < parent2)
 *  and deduplicated. */
std::vector<ColliderMatch> query_colliders(const CausalDag& g);

struct SourceEdgeReport {
  bool every_vertex_covered = true;
  std::vector<int> uncovered;        // variables with no outgoing edge
};

/** Solvability of the source-edge lifting problem for every vertex binding. */
SourceEdgeReport query_source_edges(const CausalDag& g);

}  // namespace simplicat

#endif
