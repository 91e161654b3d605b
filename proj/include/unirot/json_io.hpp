#pragma once

#include <string>

#include <json.hpp>

#include "unirot/cycles.hpp"
#include "unirot/generation.hpp"
#include "unirot/higher_dim.hpp"
#include "unirot/reduction.hpp"

namespace unirot {

// JSON wire formats. Cycles and open sequences share one schema:
//   {"vectors": [[1,0],[0,1],[-1,-1]]}
// in cyclic (or path) order, without a closing repeat. Triangulations:
//   {"dimension": 2,
//    "vertices": [{"id": 0, "image": [1,0,0]}, ...],
//    "facets": [[0,1,2], ...]}
// Curvature data:
//   {"u1": [1,0], "u2": [0,1], "nus": [1,1], "mus": [1]}
// All numbers must be integers in 64-bit range; anything else is a
// ValidationError.

nlohmann::json parse_json(const std::string& text);  // wraps parse errors

nlohmann::json to_json(const UnimodularCycle& cycle);
nlohmann::json to_json(const UnimodularPath& path);
UnimodularCycle cycle_from_json(const nlohmann::json& j);
UnimodularPath path_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CurvatureData& data);
CurvatureData curvature_from_json(const nlohmann::json& j);

/// Steps as an array of {"kind", "index", "detached", "contribution_twelfths"}
/// objects (plus "index2" for repeat splits), wrapped with the exact total.
nlohmann::json to_json(const ReductionTrace& trace);

nlohmann::json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const nlohmann::json& j);

}  // namespace unirot
