#include <doctest.h>

#include <cmath>

#include "projembed/construct.hpp"
#include "projembed/errors.hpp"
#include "projembed/geometry.hpp"
#include "projembed/sampling.hpp"
#include "projembed/serialize.hpp"

using namespace projembed;

TEST_CASE("level 1 real map as json") {
  auto j = to_json(build_real(1));
  CHECK(j["field"] == "real");
  CHECK(j["n"] == 1);
  CHECK(j["ambient_dim"] == 2);
  CHECK(j["radius_pow4"] == "1/1");
  CHECK(j["components"][0] == nlohmann::json::parse("[[0.0,1.0],[1.0,0.0]]"));
  CHECK(j["components"][1] == nlohmann::json::parse("[[1.0,0.0],[0.0,-1.0]]"));
}

TEST_CASE("maps round-trip through json text exactly") {
  for (int n = 1; n <= 5; ++n) {
    auto r = build_real(n);
    auto back = real_map_from_json(nlohmann::json::parse(to_json(r).dump()));
    REQUIRE(back.ambient_dim() == r.ambient_dim());
    for (int k = 0; k < r.ambient_dim(); ++k) CHECK(back.components()[k] == r.components()[k]);

    auto c = build_complex(n);
    auto cback = hermitian_map_from_json(nlohmann::json::parse(to_json(c).dump()));
    REQUIRE(cback.ambient_dim() == c.ambient_dim());
    for (int k = 0; k < c.ambient_dim(); ++k) CHECK(cback.components()[k] == c.components()[k]);
    Eigen::VectorXcd z = complexify(sample_sphere(2 * n + 2, 1.0, 1, static_cast<std::uint64_t>(n)));
    CHECK(evaluate(cback, z) == evaluate(c, z));
  }
}

TEST_CASE("malformed json is a usage error") {
  auto j = to_json(build_real(2));
  j["components"][0][0] = nlohmann::json::array({1.0});
  CHECK_THROWS_AS(real_map_from_json(j), UsageError);
  auto k = to_json(build_real(2));
  CHECK_THROWS_AS(hermitian_map_from_json(k), UsageError);
}

TEST_CASE("geometry report has the six fields") {
  const double r = domain_radius(2);
  auto j = to_json(geometry_report(build_real(2), frame(Eigen::Vector3d(r, 0, 0), Field::real, r)));
  CHECK(j.size() == 6);
  for (const char* key : {"homothety_factor", "anisotropy", "alpha_norm_sq", "mean_curvature_norm",
                          "scalar_curvature_gauss", "effective_radius_sq"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("double formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 6.0 * std::pow(3.141592653589793, 4.0 / 3.0), -2.5e-300}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("audit table has one row per entry") {
  ClaimAuditEntry e;
  e.claim_id = "x";
  e.expected = "0 rank-deficient points";
  auto table = format_audit_table({e, e});
  CHECK(std::count(table.begin(), table.end(), '\n') >= 3);
}
