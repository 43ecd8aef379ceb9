#pragma once

#include "gtorders/mackey.hpp"
#include "gtorders/orbits.hpp"
#include "gtorders/realization.hpp"
#include "gtorders/tableaux.hpp"

#include <json.hpp>

namespace gtorders::io {

using nlohmann::json;

// Tableau: {"n": n, "rows": [[top row], ..., [row 1]]} with entries "p/q".
[[nodiscard]] json to_json(const Tableau& t);
[[nodiscard]] Tableau tableau_from_json(const json& j);

// Shifts: {"i,j": k}; skew elements: [{"shift": {...}, "coeff": "..."}].
[[nodiscard]] json to_json(const ShiftVector& z);
[[nodiscard]] ShiftVector shift_from_json(const json& j);
[[nodiscard]] json to_json(const SkewElement& x);
[[nodiscard]] SkewElement skew_from_json(const json& j);

// Module vectors: [{"tableau": ..., "coeff": "..."}].
[[nodiscard]] json to_json(const ModuleVector& v);
[[nodiscard]] ModuleVector module_vector_from_json(const json& j);

[[nodiscard]] json to_json(const ConventionProfile& p);
[[nodiscard]] ConventionProfile profile_from_json(const json& j);

[[nodiscard]] json to_json(const RelationReport& r);
[[nodiscard]] json to_json(const CenterReport& r);
[[nodiscard]] json to_json(const CalibrationResult& r);
[[nodiscard]] json to_json(const ReachabilityReport& r);
[[nodiscard]] json to_json(const OrbitReport& r);
[[nodiscard]] json to_json(const BlockGraph& g);
[[nodiscard]] json to_json(const MackeyReport& r);
[[nodiscard]] json to_json(const BlockSummary& s);

/// {"cyclic_orders": [...], "h_table": [[...]], "action": [[[image of gen 1], ...], ...]}.
[[nodiscard]] SemidirectSpec semidirect_from_json(const json& j);
[[nodiscard]] json to_json(const SemidirectSpec& s);

}  // namespace gtorders::io
