#ifndef PRISM_JSON_IO_HPP
#define PRISM_JSON_IO_HPP

#include "prism/classify.hpp"
#include "prism/enumerate.hpp"
#include "prism/oeis.hpp"
#include "prism/pattern.hpp"
#include "prism/poset.hpp"

#include <nlohmann/json.hpp>

namespace prism {

void to_json(nlohmann::json& j, const Occurrence& occ);
void to_json(nlohmann::json& j, const CalibratedMeshPattern& c);
void to_json(nlohmann::json& j, const Poset& poset);
void to_json(nlohmann::json& j, const CountRow& row);
void to_json(nlohmann::json& j, const OeisQueryResult& result);

// Field names: perm, is_boolean, is_prism, unconfined, degree_d, core,
// methods, witnesses.{rw, pattern, poset}.
void to_json(nlohmann::json& j, const ClassificationRecord& record);

// {"pattern": [2,1] or "21", "mesh": [[a,b],...], "pos_cal": {"2": 4},
//  "val_cal": {"2": 4}, "name": optional}. Throws invalid_input.
CalibratedMeshPattern pattern_from_json(const nlohmann::json& j);

} // namespace prism

#endif
