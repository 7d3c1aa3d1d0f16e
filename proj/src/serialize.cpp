#include "projembed/serialize.hpp"

#include <algorithm>
#include <complex>
#include <iomanip>
#include <sstream>

#include "projembed/constants.hpp"
#include "projembed/errors.hpp"

namespace projembed {

using nlohmann::json;

namespace {

json matrix_json(const Eigen::MatrixXd& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const Eigen::MatrixXcd& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Map>
json map_header(const Map& map) {
  return json{{"field", to_string(map.field())},
              {"n", map.level()},
              {"ambient_dim", map.ambient_dim()},
              {"radius_pow4", to_string(radius_pow4(map.level()))}};
}

void check_header(const json& j, const char* field) {
  if (!j.is_object() || j.value("field", std::string{}) != field || !j.contains("n") || !j.contains("components")) {
    throw UsageError(std::string("not a ") + field + " quadratic map document");
  }
}

}  // namespace

json to_json(const RealQuadMap& map) {
  json j = map_header(map);
  j["components"] = json::array();
  for (const auto& a : map.components()) j["components"].push_back(matrix_json(a));
  return j;
}

json to_json(const HermitianQuadMap& map) {
  json j = map_header(map);
  j["components"] = json::array();
  for (const auto& a : map.components()) j["components"].push_back(matrix_json(a));
  return j;
}

RealQuadMap real_map_from_json(const json& j) try {
  check_header(j, "real");
  const int n = j.at("n").get<int>();
  std::vector<Eigen::MatrixXd> comps;
  for (const auto& c : j.at("components")) {
    Eigen::MatrixXd a(n + 1, n + 1);
    if (c.size() != static_cast<std::size_t>(n + 1)) throw UsageError("component has the wrong row count");
    for (int r = 0; r <= n; ++r) {
      if (c[r].size() != static_cast<std::size_t>(n + 1)) throw UsageError("component has the wrong column count");
      for (int s = 0; s <= n; ++s) a(r, s) = c[r][s].get<double>();
    }
    comps.push_back(std::move(a));
  }
  return RealQuadMap(n, std::move(comps));
} catch (const json::exception& e) {
  throw UsageError(std::string("malformed map json: ") + e.what());
}

HermitianQuadMap hermitian_map_from_json(const json& j) try {
  check_header(j, "complex");
  const int n = j.at("n").get<int>();
  std::vector<Eigen::MatrixXcd> comps;
  for (const auto& c : j.at("components")) {
    Eigen::MatrixXcd a(n + 1, n + 1);
    if (c.size() != static_cast<std::size_t>(n + 1)) throw UsageError("component has the wrong row count");
    for (int r = 0; r <= n; ++r) {
      if (c[r].size() != static_cast<std::size_t>(n + 1)) throw UsageError("component has the wrong column count");
      for (int s = 0; s <= n; ++s) a(r, s) = {c[r][s].at(0).get<double>(), c[r][s].at(1).get<double>()};
    }
    comps.push_back(std::move(a));
  }
  return HermitianQuadMap(n, std::move(comps));
} catch (const json::exception& e) {
  throw UsageError(std::string("malformed map json: ") + e.what());
}

json to_json(const GeometryReport& r) {
  return json{{"homothety_factor", r.homothety_factor},
              {"anisotropy", r.anisotropy},
              {"alpha_norm_sq", r.alpha_norm_sq},
              {"mean_curvature_norm", r.mean_curvature_norm},
              {"scalar_curvature_gauss", r.scalar_curvature_gauss},
              {"effective_radius_sq", r.effective_radius_sq}};
}

json to_json(const IntegralEstimate& e) {
  return json{{"value", e.value}, {"std_error", e.std_error}, {"sample_count", e.sample_count}, {"seed", e.seed}};
}

json to_json(const ClaimAuditEntry& e) {
  json j{{"claim_id", e.claim_id},
         {"paper_ref", e.paper_ref},
         {"expected", e.expected},
         {"expected_value", e.expected_value},
         {"measured", e.measured},
         {"abs_deviation", e.abs_deviation},
         {"tolerance", e.tolerance},
         {"verdict", to_string(e.verdict)}};
  j["convention"] = e.convention ? json(*e.convention) : json(nullptr);
  j["reference"] = e.reference ? json(*e.reference) : json(nullptr);
  return j;
}

json to_json(const std::vector<ClaimAuditEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) arr.push_back(to_json(e));
  return arr;
}

std::string format_double(double value) {
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

std::string format_audit_table(const std::vector<ClaimAuditEntry>& entries) {
  std::size_t id_w = 8, exp_w = 8;
  for (const auto& e : entries) {
    id_w = std::max(id_w, e.claim_id.size());
    exp_w = std::max(exp_w, e.expected.size());
  }
  id_w += 2;
  exp_w += 2;
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(id_w)) << "claim_id" << std::setw(17) << "verdict"
     << std::setw(static_cast<int>(exp_w)) << "expected" << std::setw(18) << "measured" << std::setw(12) << "abs_dev"
     << std::setw(10) << "tol" << "reference\n";
  os << std::string(id_w + exp_w + 17 + 18 + 12 + 10 + 16, '-') << '\n';
  for (const auto& e : entries) {
    os << std::left << std::setw(static_cast<int>(id_w)) << e.claim_id << std::setw(17) << to_string(e.verdict)
       << std::setw(static_cast<int>(exp_w)) << e.expected << std::setw(18) << std::setprecision(10) << e.measured
       << std::setw(12) << std::setprecision(3) << e.abs_deviation << std::setw(10) << e.tolerance;
    if (e.reference) os << std::setprecision(10) << *e.reference;
    os << '\n';
  }
  return os.str();
}

}  // namespace projembed
