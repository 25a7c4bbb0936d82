#ifndef SIMPLICAT_LIBRARY_HPP
#define SIMPLICAT_LIBRARY_HPP

#include <string>
#include <vector>

#include "simplicat/fincat.hpp"

namespace simplicat {

struct LibraryEntry {
  std::string name;
  FinCategory cat;
};

FinCategory discrete_category(int n);
/** Total order 0 < 1 < ... < n viewed as a category. */
FinCategory chain_poset(int n);
/** One object, one non-identity arrow s with s.s = id. */
FinCategory cyclic_group_2();
/** One object, one non-identity arrow e with e.e = e. */
FinCategory walking_idempotent();
/** Two objects with a mutually inverse pair of arrows. */
FinCategory walking_isomorphism();

/** Every labelled acyclic edge set on n named vertices, ascending bitmask. */
std::vector<Quiver> dag_quivers(int n);

/** The fixed test-bed: discrete categories (1..3 objects), chain posets up
 *  to [3], free categories of all DAG quivers on at most 3 vertices, the
 *  2-element cyclic group, the walking idempotent and the walking
 *  isomorphism. */
const std::vector<LibraryEntry>& category_library();

}  // namespace simplicat

#endif
