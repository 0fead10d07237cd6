#pragma once

#include <json.hpp>

#include "perco/measure.hpp"

namespace perco {

// {"n": int, "edges": [[u,v], ...]} with 1-based vertices; edge order in the
// file fixes the edge indexing.
nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

// {"graph": ..., "weights": [["num","den"], ...]} in exact mode; floating
// mode stores decimal strings with 32 significant digits plus a tolerance.
nlohmann::json measure_to_json(const Measure& mu);
Measure measure_from_json(const nlohmann::json& j);

nlohmann::json vbm_to_json(const VertexBasedMeasure& vbm);
VertexBasedMeasure vbm_from_json(const nlohmann::json& j);

} // namespace perco
