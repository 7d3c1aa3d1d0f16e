#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "projembed/audit.hpp"
#include "projembed/geometry.hpp"
#include "projembed/measure.hpp"
#include "projembed/quadmap.hpp"

namespace projembed {

/// {"field", "n", "ambient_dim", "radius_pow4": "p/q", "components": [...]}.
/// Components are row-major nested arrays; complex entries are [re, im].
nlohmann::json to_json(const RealQuadMap& map);
nlohmann::json to_json(const HermitianQuadMap& map);

RealQuadMap real_map_from_json(const nlohmann::json& j);
HermitianQuadMap hermitian_map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GeometryReport& report);
nlohmann::json to_json(const IntegralEstimate& estimate);
nlohmann::json to_json(const ClaimAuditEntry& entry);
nlohmann::json to_json(const std::vector<ClaimAuditEntry>& entries);

/// Shortest decimal that round-trips a double (17 significant digits).
std::string format_double(double value);

/// Fixed-width human table, one row per claim.
std::string format_audit_table(const std::vector<ClaimAuditEntry>& entries);

}  // namespace projembed
