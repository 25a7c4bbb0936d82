#ifndef SIMPLICAT_CAUSAL_HPP
#define SIMPLICAT_CAUSAL_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "simplicat/fincat.hpp"

namespace simplicat {

/** Finite causal diagram: named variables and directed cause -> effect
 *  edges, required acyclic. */
struct CausalDag {
  std::vector<Obj> variables;                    // ascending id
  std::vector<std::pair<int, int>> edges;        // (cause, effect), sorted

  bool has_variable(int id) const;
  const Obj& variable(int id) const;
  int id_of(const std::string& label) const;     // throws UnknownVariable
  std::vector<int> parents(int v) const;
  bool has_edge(int a, int b) const;
};

std::vector<Issue> validate_dag(const CausalDag& g);
CausalDag make_dag(CausalDag raw);

struct Intervention {
  enum Kind { DeleteEdge, DoVariable } kind = DoVariable;
  int a = -1;  // cause for DeleteEdge, target variable for DoVariable
  int b = -1;  // effect for DeleteEdge
};

/** Applies interventions left to right: DeleteEdge removes one edge
 *  (UnknownEdge if absent), DoVariable removes every edge into the
 *  variable. */
CausalDag intervene(const CausalDag& g, const std::vector<Intervention>& list);

/** Free category on the diagram: morphisms are directed paths. */
FinCategory dag_to_category(const CausalDag& g);

/** Integer-valued function on variable subsets, stored sparsely over
 *  bitmasks of the ground ordering (at most 62 variables). */
struct Imset {
  std::vector<int> ground;                       // variable ids, ascending
  std::map<std::uint64_t, long long> coeffs;     // zero entries pruned

  void add(std::uint64_t mask, long long v);
};

std::uint64_t subset_mask(const Imset& u, const std::vector<int>& vars);

/** delta_V - delta_empty + sum_i (delta_{pa(i)} - delta_{i+pa(i)}). */
Imset standard_imset(const CausalDag& g);

/** delta_{abA} + delta_A - delta_{aA} - delta_{bA}; arguments must be
 *  disjoint (OverlappingArguments) and known (UnknownVariable). */
Imset elementary_imset(const CausalDag& g, int a, int b, const std::set<int>& A);

/** Equality after pruning zeros; throws GroundSetMismatch when the ground
 *  sets differ. */
bool imset_equal(const Imset& u, const Imset& v);

/** Unordered adjacency pairs (a, b), a < b. */
std::set<std::pair<int, int>> skeleton(const CausalDag& g);

/** Triples (p, child, q): p -> child <- q with p < q and p, q non-adjacent. */
std::vector<std::tuple<int, int, int>> enumerate_immoralities(const CausalDag& g);

struct MarkovWitness {
  bool equivalent = false;
  std::string kind;                              // "skeleton" or "immorality"
  std::vector<int> feature;                      // edge pair or triple
};

/** Same skeleton and same immoralities; witness is the first differing
 *  feature in canonical order. Throws VariableSetMismatch. */
MarkovWitness markov_equivalent(const CausalDag& g1, const CausalDag& g2);

}  // namespace simplicat

#endif
