#pragma once

#include <json.hpp>

#include "ramopuc/duality.hpp"
#include "ramopuc/number_theory.hpp"
#include "ramopuc/opuc.hpp"
#include "ramopuc/poly.hpp"

namespace ramopuc {

// JSON encodings. Rationals travel as "num/den" strings (integers without
// "/1"), polynomials as ascending arrays of those strings.
//
// PopucSystem:
//   {"family": str, "source": str, "N": int,
//    "verblunsky": [a_0..a_N], "phis": [[Φ_0], ..., [Φ_{N+1}]],
//    "h": [h_0..h_N], "delta": [Δ_1..Δ_{N+1}], "moments": [σ_0..σ_{N+1}]}
//
// DualPair:
//   {"spec": "m1,m2,...", "charpoly": [...], "ramanujan": PopucSystem,
//    "sturmian": PopucSystem, "checks": {name: bool, ...}}

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const PopucSystem& sys);
/// Throws InvalidArgument on schema violations.
PopucSystem system_from_json(const nlohmann::json& j);

nlohmann::json checks_to_json(const DualChecks& checks);
nlohmann::json dual_to_json(const DualPair& pair);
DualPair dual_from_json(const nlohmann::json& j);

nlohmann::json weights_to_json(const WeightReport& report);

nlohmann::json table_to_json(const RamanujanTable& table);
RamanujanTable table_from_json(const nlohmann::json& j);

}  // namespace ramopuc
