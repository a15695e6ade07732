#pragma once

#include "json.hpp"
#include "redvar/complexes.hpp"

namespace redvar {

using json = nlohmann::json;

IVec ivec_from_json(const json& j);
IMat imat_from_json(const json& j);
json to_json(const IVec& v);
json to_json(const IMat& m);
json to_json(const Cone& c);
json to_json(const AbelianGroup& g);
json to_json(const Invariant& inv, const RootDatum& rd);

// {"cones": [{"id", "generators", "faces"}], "w_action": [{id: id, ...} per simple reflection]}
// w_action may be omitted when the realization determines it.
WComplex complex_from_json(const GroupData& G, const json& j);
json complex_to_json(const WComplex& wc);
// {"value_group": {"symbols": [...], "orders": [...]}, "entries": [{"face", "cone", "values"}]}
Cocycle cocycle_from_json(const WComplex& wc, const json& j);

}  // namespace redvar
