#pragma once

#include "domiperf/invariants.hpp"
#include "domiperf/perfection.hpp"

#include <json.hpp>

namespace domiperf {

/// Vertex sets and embeddings are written with 1-based labels.
nlohmann::json set_json(VertexSet s);
nlohmann::json profile_json(const ParameterProfile& p);
nlohmann::json verdict_json(const PerfectionVerdict& v);

}  // namespace domiperf
