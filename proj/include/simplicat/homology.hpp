#ifndef SIMPLICAT_HOMOLOGY_HPP
#define SIMPLICAT_HOMOLOGY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simplicat/elements.hpp"
#include "simplicat/fincat.hpp"
#include "simplicat/simplex.hpp"

namespace simplicat {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<long long>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

/**
 * Normalized chain complex of a truncated simplicial set. Bases are the
 * nondegenerate simplices per degree; boundary entries come from the
 * alternating face sum, with degenerate faces contributing zero.
 */
struct ChainComplex {
  int truncation = 0;
  std::vector<std::vector<int>> basis;    // degree -> nondegenerate simplex ids
  std::vector<IntMatrix> boundary;        // boundary[n]: |basis[n-1]| x |basis[n]|, n >= 1
};

/** Runs the simplicial identity audit, builds the complex and verifies
 *  the boundary square is zero (BoundarySquareNonzero with a witness
 *  column otherwise). */
ChainComplex chain_complex(const TruncatedSSet& x);

struct SmithResult {
  std::vector<long long> invariants;  // positive diagonal d_1 | d_2 | ... | d_r
  int rank = 0;
  bool escalated = false;             // arbitrary precision was required
};

/** Smith normal form over the integers. Pivots are chosen by smallest
 *  absolute value; arithmetic runs in 64 bits and restarts in arbitrary
 *  precision on overflow. */
SmithResult smith_normal_form(const IntMatrix& m);

/** Diagonalization certificate u * m * v = d with unimodular u, v. */
struct SmithTransforms {
  BigMatrix u, d, v;
};

SmithTransforms smith_with_transforms(const IntMatrix& m);

BigInt determinant(BigMatrix m);
bool is_unimodular(const BigMatrix& m);

/**
 * Betti numbers and torsion coefficients per degree 0..truncation. The top
 * degree never sees the next boundary map, so entries at degree ==
 * truncation can change under deeper truncation; degrees below it cannot.
 */
struct HomologyProfile {
  int truncation = 0;
  std::vector<long long> betti;                 // degrees 0..truncation
  std::vector<std::vector<long long>> torsion;  // invariant factors > 1 per degree
};

HomologyProfile homology_profile(const ChainComplex& cc);
HomologyProfile classifying_space_profile(const FinCategory& c, int truncation);
/** Profile of the nerve of the category of elements. */
HomologyProfile hocolim_profile(const SetFunctor& inst, int truncation);

/**
 * Certification verdict: certified means the profiles differ at some degree
 * strictly below the truncation, which rules out any isomorphism of the
 * underlying spaces. Agreement is always Inconclusive.
 */
struct CausalEffectVerdict {
  bool certified = false;
  int degree = -1;           // lowest differing reliable degree
  std::string invariant;     // description of the differing datum
  HomologyProfile before, after;
};

/** Throws TruncationMismatch unless the profiles share a truncation. */
CausalEffectVerdict causal_effect(const HomologyProfile& before, const HomologyProfile& after);

}  // namespace simplicat

#endif
