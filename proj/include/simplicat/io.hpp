#ifndef SIMPLICAT_IO_HPP
#define SIMPLICAT_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "simplicat/causal.hpp"
#include "simplicat/elements.hpp"
#include "simplicat/fincat.hpp"
#include "simplicat/homology.hpp"
#include "simplicat/nerve.hpp"
#include "simplicat/simplex.hpp"

namespace simplicat {

// insertion-ordered so every report is byte-deterministic
using Json = nlohmann::ordered_json;

/** {"objects":[{"id","label"}], "morphisms":[{"id","label","src","tgt"}],
 *  "identities":{objId:morId}, "composition":[[g,f,gf],...]} */
Json category_to_json(const FinCategory& c);
FinCategory category_from_json(const Json& j);

/** Same encoding minus identities/composition. */
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

/** {"variables":["a",...], "edges":[["a","b"],...]} using labels. */
Json dag_to_json(const CausalDag& g);
CausalDag dag_from_json(const Json& j);

/** Minimal DOT reader: digraph blocks with node and edge statements;
 *  attribute lists are skipped. Throws ParseError. */
CausalDag dag_from_dot(const std::string& text);

/** {"ground":["a",...], "coeffs":{"a,b":v,...}} with sorted-subset keys. */
Json imset_to_json(const Imset& u, const CausalDag& g);

/** {"schema":<category|diagram|path>, "tables":{objId:[rows]},
 *  "actions":{morId:{row:row}}}. Actions may cover only the schema's
 *  indecomposable morphisms; composites are completed. base_dir resolves a
 *  path-valued schema reference. */
Json instance_to_json(const SetFunctor& inst);
SetFunctor instance_from_json(const Json& j, const std::string& base_dir = ".");

/** {"source":<category|path>, "target":<category|path>,
 *  "objects":{id:id}, "morphisms":{id:id}} */
Functor functor_from_json(const Json& j, const std::string& base_dir = ".");

Json monotone_to_json(const MonotoneMap& f);
MonotoneMap monotone_from_json(const Json& j);

/** {"truncation":N, "levels":[{"simplices":[ids], "faces":[[...]],
 *  "degeneracies":[[...]]}]} */
Json sset_to_json(const TruncatedSSet& x);

/** Underlying simplicial set plus the chain table. */
Json nerve_to_json(const Nerve& nv);

/** {"truncation":N, "betti":[...], "torsion":[[...],...]} */
Json profile_to_json(const HomologyProfile& p);

/** One "row col value" line per nonzero entry, row-major. */
std::string matrix_triplets(const IntMatrix& m);

std::string read_text_file(const std::string& path);  // ParseError when unreadable
Json parse_json(const std::string& text);             // ParseError on malformed input

}  // namespace simplicat

#endif
