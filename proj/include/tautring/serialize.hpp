#pragma once

// JSON forms of graphs, strata and classes. Coefficients are exact "p/q" strings.
//
// TautClass: {g, n, degree, terms: [{graph, psi: {"1": 2, "h0": 1}, kappa: {"0": [1, 1]}, coeff}]}
// where psi keys are marking labels or "h<half-edge>", kappa keys are vertex indices
// of the canonical graph encoding.

#include <json.hpp>

#include "tautring/strata.hpp"

namespace tautring {

nlohmann::json graph_to_json(const GraphInfo& graph);
nlohmann::json stratum_to_json(const DecoratedStratum& s);
DecoratedStratum stratum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TautClass& x);
/// Throws std::invalid_argument on malformed input.
TautClass tautclass_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MixedClass& x);
MixedClass mixedclass_from_json(const nlohmann::json& j);

}  // namespace tautring
