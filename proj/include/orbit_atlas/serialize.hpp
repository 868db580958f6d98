#pragma once

#include <string>

#include "json.hpp"

#include "orbit_atlas/monoid.hpp"
#include "orbit_atlas/orbit_reps.hpp"
#include "orbit_atlas/pil.hpp"

namespace orbit_atlas {

using json = nlohmann::json;

// JSON shapes:
//   Permutation          [2,1,3]
//   DecoratedPermutation {"w":[...],"delta":[...]}
//   IStandardFlag        {"i":k,"entries":[{"idx":j,"hat":bool},...]}
//   SharePair / StdPair  {"i":k,"w":[...],"u":[...],"standardized":bool}
//   Pil / PilWithList    {"blocks":[[...],...],"distinguished":index-or-null}
//   PartialPermutation   {"n":n,"mapping":[[source,target],...]}
void to_json(json& j, const Permutation& w);
void from_json(const json& j, Permutation& w);
void to_json(json& j, const DecoratedPermutation& d);
void from_json(const json& j, DecoratedPermutation& d);
void to_json(json& j, const IStandardFlag& f);
void from_json(const json& j, IStandardFlag& f);
void to_json(json& j, const SharePair& p);
void from_json(const json& j, SharePair& p);
void to_json(json& j, const StdPair& p);
void from_json(const json& j, StdPair& p);
void to_json(json& j, const Pil& p);
void to_json(json& j, const PilWithList& p);
void from_json(const json& j, PilWithList& p);
void to_json(json& j, const PartialPermutation& kappa);
void from_json(const json& j, PartialPermutation& kappa);

json graph_to_json(const OrbitGraph& g);
/// Rebuilds nodes, edges and levels; the closure relation is recomputed.
OrbitGraph graph_from_json(const json& j);

/// Graphviz rendering: solid edges for right actions, dashed for left and
/// exotic ones; red noncompact, blue complex stable, green for closure
/// covers without an action edge. One rank per level.
std::string graph_to_dot(const OrbitGraph& g);

/// Compact text forms used by the CSV dumps.
std::string flag_text(const IStandardFlag& f);  // "^1 2 3"
std::string pil_text(const Pil& p);             // "(1)(2 3)"

/// Rows n = 1..max_n of orbit counts for i = 1..n, plus the row sum.
std::string triangle_csv(int max_n);
json triangle_json(int max_n);

}  // namespace orbit_atlas
