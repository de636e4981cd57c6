#pragma once
// JSON file formats:
//   signotope        {"n": int, "rank": int, "signs": "<-/+ string>"}
//   block signotope  {"signotope": {...}, "blocks": [ints]}
//   orientation      {"shape": [ints], "rf": nested array}      (USOs)
//                    {"shape": [ints], "edges": [[v, w], ...]}  (any orientation,
//                     v and w as 1-based coordinate arrays, v -> w directed)

#include <json.hpp>

#include "usogrid/appendix.hpp"
#include "usogrid/blocksig.hpp"

namespace uso {

nlohmann::json to_json(const Signotope& chi);
Signotope signotope_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BlockSignotope& b);
BlockSignotope block_signotope_from_json(const nlohmann::json& j);

nlohmann::json orientation_to_rf_json(const GridOrientation& o);      // requires a USO
nlohmann::json orientation_to_edges_json(const GridOrientation& o);
GridOrientation orientation_from_json(const nlohmann::json& j);       // accepts either form

nlohmann::json table_to_json(const std::vector<ViolationRecord>& rows);

}  // namespace uso
