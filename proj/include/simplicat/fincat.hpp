#ifndef SIMPLICAT_FINCAT_HPP
#define SIMPLICAT_FINCAT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simplicat {

/** Typed failure carrying a machine-readable kind alongside the message.
 *  Kinds in use: MissingComposite, NonAssociative, BadIdentity, CyclicQuiver,
 *  IndexOutOfRange, RankMismatch, IncompatibleFaces, ScaleExceeded,
 *  UnknownVariable, UnknownEdge, OverlappingArguments, GroundSetMismatch,
 *  VariableSetMismatch, NonFunctorial, MissingAction, DanglingRow,
 *  NonCommutingSquare, NotPullbackInstance, UnknownRow, UnsupportedSchema,
 *  SchemaMismatch, TruncationMismatch, BoundarySquareNonzero, ParseError. */
class CatError : public std::runtime_error {
 public:
  CatError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind(std::move(kind)) {}
  std::string kind;
};

/** One finding of a validation pass; ids identify the offending entities. */
struct Issue {
  std::string kind;
  std::string message;
  std::vector<int> ids;
};

struct Obj {
  int id = 0;
  std::string label;
};

struct Mor {
  int id = 0;
  std::string label;
  int src = 0;
  int tgt = 0;
};

/** Finite directed multigraph; the input shape for free categories. */
struct Quiver {
  std::vector<Obj> vertices;                  // ascending id
  std::vector<Mor> edges;                     // ascending id, src/tgt are vertex ids
};

/**
 * A finite category presented by explicit tables: objects, morphisms,
 * an identity morphism per object and a total composition table on
 * composable pairs. Values are immutable once built; every operation
 * in this toolkit treats categories as values.
 */
struct FinCategory {
  std::vector<Obj> objects;                   // ascending id
  std::vector<Mor> morphisms;                 // ascending id
  std::map<int, int> identity;                // object id -> morphism id
  std::map<std::pair<int, int>, int> comp;    // (g, f) -> g after f

  bool has_object(int id) const;
  bool has_morphism(int id) const;
  const Obj& object(int id) const;
  const Mor& morphism(int id) const;
  int src(int m) const { return morphism(m).src; }
  int tgt(int m) const { return morphism(m).tgt; }
  bool is_identity(int m) const;
  int identity_of(int obj) const;

  /** Composite g.f; requires tgt(f) == src(g), throws MissingComposite if the
   *  table has no entry. */
  int compose(int g, int f) const;

  std::vector<int> object_ids() const;
  std::vector<int> morphism_ids() const;
  /** Morphism ids from x to y, ascending. */
  std::vector<int> hom(int x, int y) const;

  bool operator==(const FinCategory& other) const;
};

/** Structural checks: endpoint sanity, identity laws, totality of the
 *  composition table on composable pairs, associativity. Returns every
 *  finding; empty means valid. */
std::vector<Issue> validate_category(const FinCategory& c);

/** Validating constructor: throws CatError (kind = first finding) on issues. */
FinCategory make_category(FinCategory raw);

/** Reverses all arrows; composition table transposed. */
FinCategory opposite(const FinCategory& c);

/** Free category on an acyclic quiver: morphisms are all directed paths,
 *  including the empty path at each vertex; composition is path
 *  concatenation. Throws CyclicQuiver with a cycle witness. Morphism ids:
 *  identities first in vertex order, then paths ordered by length and
 *  lexicographic edge ids. */
FinCategory free_category(const Quiver& q);

/** Path of edge ids realizing morphism m of a free category (empty for
 *  identities). Recovered by unique factorization into indecomposables;
 *  throws UnsupportedSchema when the category is not freely generated. */
std::vector<int> generator_path(const FinCategory& c, int m);

/** Non-identity morphisms admitting no factorization into two
 *  non-identities; for a free category these are the quiver edges. */
std::vector<int> indecomposable_morphisms(const FinCategory& c);

struct Functor {
  FinCategory source;
  FinCategory target;
  std::map<int, int> omap;                    // object id -> object id
  std::map<int, int> mmap;                    // morphism id -> morphism id

  int on_object(int id) const;
  int on_morphism(int id) const;
};

std::vector<Issue> validate_functor(const Functor& f);
Functor make_functor(Functor raw);
Functor identity_functor(const FinCategory& c);
/** g after f; requires f.target == g.source. */
Functor compose_functors(const Functor& g, const Functor& f);
bool functor_equal(const Functor& a, const Functor& b);

/** Every functor from c to d, ordered lexicographically by object map then
 *  morphism map (ascending ids throughout). */
std::vector<Functor> enumerate_functors(const FinCategory& c, const FinCategory& d);

/** Natural transformation between parallel functors; component per object. */
struct NatTransformation {
  std::map<int, int> component;               // object id -> morphism id in target
};

/** All natural transformations F => G for parallel functors, backtracking
 *  with naturality pruning, lexicographic in components. */
std::vector<NatTransformation> enumerate_nat_transformations(const Functor& F, const Functor& G);

/**
 * A set-valued functor on a finite schema category: a finite table of row
 * ids per object and a total action map per morphism. Identity actions are
 * implicit. This is the instance shape shared by the Yoneda machinery and
 * the data-migration layer.
 */
struct SetFunctor {
  FinCategory schema;
  std::map<int, std::vector<int>> table;      // object id -> sorted row ids
  std::map<int, std::map<int, int>> action;   // morphism id -> row map

  const std::vector<int>& rows(int obj) const;
  /** Action of morphism m on row x (identity morphisms act as identity). */
  int act(int m, int x) const;
  bool operator==(const SetFunctor& other) const;
};

/** Component-per-object map between parallel set-valued functors. */
struct SetNat {
  std::map<int, std::map<int, int>> component;  // object id -> (row -> row)
};

/** All natural maps delta => eps over a shared schema, lexicographic. */
std::vector<SetNat> enumerate_set_nats(const SetFunctor& delta, const SetFunctor& eps);

/** Covariant hom functor Hom(r, -) as a set-valued functor; rows of Hom(r, x)
 *  are morphism ids, the action is postcomposition. */
SetFunctor representable(const FinCategory& c, int r);

/** Outcome of a cardinality-plus-witness bijection check. */
struct BijectionReport {
  bool holds = false;
  long long left = 0;                         // enumerated transformation count
  long long right = 0;                        // target cardinality
  bool injective = false;
  bool surjective = false;
  std::vector<std::pair<int, int>> pairs;     // (transformation index, image)
};

/** Checks Nat(Hom(r,-), K) = K(r) via alpha -> alpha_r(id_r). */
BijectionReport yoneda_check(const FinCategory& c, int r, const SetFunctor& K);

/** Checks Hom(X,Y) = Nat(Hom(-,X), Hom(-,Y)) through the opposite category;
 *  pairs map transformation indices to morphism ids of Hom(X,Y). */
BijectionReport crp_check(const FinCategory& c, int X, int Y);

struct UniversalityVerdict {
  bool holds = false;
  int fail_object = -1;                       // object d of the source of S
  int fail_morphism = -1;                     // f : c -> S d
  long long fail_solutions = 0;               // number of factorizations found
};

/** Universal arrow check for u : c -> S(r) against S : D -> C: every
 *  f : c -> S(d) must factor as S(f').u for exactly one f' : r -> d. */
UniversalityVerdict check_universal_arrow(const Functor& S, int c, int r, int u);

struct RetractWitness {
  int section = -1;                           // i : c -> c'
  int retraction = -1;                        // r : c' -> c with r.i = id_c
};

/** First witness (ascending section id, then retraction id) that c is a
 *  retract of c_prime, if any. */
std::optional<RetractWitness> is_retract(const FinCategory& c, int obj, int obj_prime);

}  // namespace simplicat

#endif
