#ifndef SIMPLICAT_SIMPLEX_HPP
#define SIMPLICAT_SIMPLEX_HPP

#include <string>
#include <vector>

#include "simplicat/fincat.hpp"

namespace simplicat {

/** Weakly monotone map [m] -> [n] between finite ordinals, stored pointwise. */
struct MonotoneMap {
  int m = 0;
  int n = 0;
  std::vector<int> values;  // size m+1, weakly increasing, range 0..n

  bool operator==(const MonotoneMap& o) const { return m == o.m && n == o.n && values == o.values; }
  bool operator<(const MonotoneMap& o) const { return values < o.values; }
};

MonotoneMap monotone_identity(int n);
/** Validates rank bounds and monotonicity; throws RankMismatch / IndexOutOfRange. */
MonotoneMap make_monotone(int m, int n, std::vector<int> values);

/** Injective generator delta_i : [n] -> [n+1] omitting i, for 0 <= i <= n+1. */
MonotoneMap coface(int n, int i);
/** Surjective generator sigma_j : [n] -> [n-1] repeating j, for 0 <= j <= n-1. */
MonotoneMap codegeneracy(int n, int j);
/** g after f; throws RankMismatch unless ranks line up. */
MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f);

/** All monotone maps [m] -> [n] in lexicographic order of value vectors. */
std::vector<MonotoneMap> enumerate_monotone(int m, int n);

/** Normal form f = delta_{i_1}..delta_{i_p} . sigma_{j_1}..sigma_{j_q} with
 *  i_1 > ... > i_p (missed values) and j_1 < ... < j_q (repeated slots). */
struct EpiMonoFactorization {
  std::vector<int> cofaces;        // descending
  std::vector<int> codegeneracies; // ascending
  int m = 0;                       // domain rank
  int n = 0;                       // codomain rank
};

EpiMonoFactorization epi_mono_factorize(const MonotoneMap& f);
MonotoneMap recompose(const EpiMonoFactorization& fac);

/**
 * Simplicial set truncated at level N: explicit face and degeneracy tables.
 * faces[k][i] maps level k to level k-1 (1 <= k <= N, 0 <= i <= k);
 * degeneracies[k][j] maps level k to level k+1 (0 <= k < N, 0 <= j <= k).
 * Simplices at level k are the indices 0..size-1.
 */
struct TruncatedSSet {
  int truncation = 0;
  std::vector<int> level_sizes;                           // size N+1
  std::vector<std::vector<std::vector<int>>> faces;        // [k][i][simplex]
  std::vector<std::vector<std::vector<int>>> degeneracies; // [k][j][simplex]
  std::vector<std::vector<bool>> degenerate;               // per level
  std::vector<std::vector<std::string>> labels;            // per level

  int face(int k, int i, int x) const;
  int degeneracy(int k, int j, int x) const;
  std::vector<int> nondegenerate_counts() const;
};

/** Checks the five simplicial identity families on every table entry and the
 *  consistency of the degenerate flags; empty result means valid. */
std::vector<Issue> audit_sset(const TruncatedSSet& x);

/** Recomputes the degenerate flags from the degeneracy tables. */
void mark_degenerate(TruncatedSSet& x);

/** Standard n-simplex truncated at N; level m lists Hom([m], [n]) in
 *  lexicographic order. */
TruncatedSSet standard_simplex(int n, int N);
/** Monotone maps backing standard_simplex levels, same order. */
std::vector<std::vector<MonotoneMap>> standard_simplex_maps(int n, int N);

/** Subcomplex of the standard simplex spanned by non-surjective maps. */
TruncatedSSet boundary_sset(int n, int N);
/** Horn: maps alpha with im(alpha) plus {i} still missing some vertex. */
TruncatedSSet horn_sset(int n, int i, int N);

/** A horn-filling problem inside an ambient truncated simplicial set:
 *  faces[j] assigns the face at index j for every j != missing. */
struct HornInstance {
  int dim = 0;       // n: fillers live at level n
  int missing = 0;   // i
  std::vector<int> faces;  // length dim+1; entry at missing ignored (-1)
};

/** Validates the pairwise face compatibility d_a(F_b) = d_{b-1}(F_a), a < b;
 *  throws IncompatibleFaces / IndexOutOfRange. */
void validate_horn_instance(const TruncatedSSet& x, const HornInstance& h);

/** Complete ascending list of n-simplices matching the assignment at every
 *  index other than the missing one. */
std::vector<int> find_horn_fillers(const TruncatedSSet& x, const HornInstance& h);

struct HornSlotReport {
  int dim = 0;
  int index = 0;
  long long instances = 0;
  long long unfilled = 0;
  long long uniquely_filled = 0;
  std::vector<HornInstance> unfilled_witnesses;   // first few
  std::vector<HornInstance> ambiguous_witnesses;  // first few with >= 2 fillers
};

struct KanReport {
  bool all_filled = true;
  bool inner_unique = true;
  std::vector<HornSlotReport> slots;
};

/** Enumerates every horn instance of each dimension 1..up_to (inner indices
 *  only when inner_only) and counts fillers; up_to must not exceed the
 *  truncation. */
KanReport check_kan_condition(const TruncatedSSet& x, int up_to, bool inner_only);

}  // namespace simplicat

#endif
