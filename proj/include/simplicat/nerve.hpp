#ifndef SIMPLICAT_NERVE_HPP
#define SIMPLICAT_NERVE_HPP

#include <vector>

#include "simplicat/fincat.hpp"
#include "simplicat/simplex.hpp"

namespace simplicat {

/**
 * Nerve of a finite category truncated at N. Level 0 indexes the objects,
 * level n >= 1 the composable chains (f_1, ..., f_n); chains are listed in
 * lexicographic morphism-id order.
 */
struct Nerve {
  FinCategory cat;
  TruncatedSSet sset;
  std::vector<std::vector<std::vector<int>>> chains;  // [level][simplex] -> morphism ids (level 0: object id)
};

Nerve nerve(const FinCategory& c, int N);

/** Face of a composable chain: index 0 drops the first arrow, the top index
 *  drops the last, inner indices compose adjacent arrows. */
std::vector<int> apply_face_to_chain(const FinCategory& c, const std::vector<int>& chain, int i);
/** Degeneracy: inserts the identity at slot j. */
std::vector<int> apply_degeneracy_to_chain(const FinCategory& c, const std::vector<int>& chain, int j);

/** Per-level map between truncated simplicial sets. */
struct SSetMap {
  std::vector<std::vector<int>> level;  // [k][simplex of X] -> simplex of Y
};

/** All simplicial maps X -> Y respecting every face and degeneracy inside
 *  the shared truncation, lexicographic by level tables. */
std::vector<SSetMap> enumerate_sset_maps(const TruncatedSSet& x, const TruncatedSSet& y);

/** Image of a functor under the nerve construction. */
SSetMap nerve_map_of_functor(const Nerve& nc, const Nerve& nd, const Functor& f);

/** Full faithfulness of the nerve at truncation 2: functors C -> D versus
 *  simplicial maps N(C) -> N(D). Throws ScaleExceeded beyond 4 objects or
 *  12 morphisms on either side. */
BijectionReport nerve_fully_faithful_check(const FinCategory& c, const FinCategory& d);

}  // namespace simplicat

#endif
