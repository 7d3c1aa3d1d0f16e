#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "projembed/audit.hpp"
#include "projembed/errors.hpp"
#include "projembed/quadmap.hpp"
#include "projembed/sampling.hpp"

using namespace projembed;

namespace {

// Grid search over the phase followed by golden-section refinement.
double brute_orbit_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::VectorXcd zx = complexify(x);
  const Eigen::VectorXcd zy = complexify(y);
  auto dist = [&](double t) { return (zx - std::polar(1.0, t) * zy).norm(); };
  constexpr int kGrid = 720;
  int best = 0;
  for (int k = 1; k < kGrid; ++k) {
    if (dist(2 * std::numbers::pi * k / kGrid) < dist(2 * std::numbers::pi * best / kGrid)) best = k;
  }
  double lo = 2 * std::numbers::pi * (best - 1) / kGrid;
  double hi = 2 * std::numbers::pi * (best + 1) / kGrid;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    double a = hi - g * (hi - lo);
    double b = lo + g * (hi - lo);
    if (dist(a) < dist(b)) hi = b; else lo = a;
  }
  return dist(0.5 * (lo + hi));
}

}  // namespace

TEST_CASE("orbit distance") {
  Eigen::Vector3d x(1, 0, 0);
  CHECK(orbit_distance(x, -x, Field::real) == 0.0);
  CHECK(orbit_distance(x, Eigen::Vector3d(0, 1, 0), Field::real) == doctest::Approx(std::sqrt(2.0)));
  for (std::uint64_t i = 0; i < 50; ++i) {
    Eigen::VectorXd a = sample_sphere(6, 1.0, 1, i);
    Eigen::VectorXd b = sample_sphere(6, 1.0, 2, i);
    CHECK(orbit_distance(a, b, Field::complex) == doctest::Approx(brute_orbit_distance(a, b)).epsilon(1e-7));
    Eigen::VectorXd rotated = realify(std::polar(1.0, 0.3 * static_cast<double>(i)) * complexify(a));
    CHECK(orbit_distance(a, rotated, Field::complex) < 1e-7);
  }
}

TEST_CASE("fiber checks") {
  for (int n = 1; n <= 3; ++n) {
    for (Field field : {Field::real, Field::complex}) {
      auto rep = fiber_checks(n, field, 2000, 0);
      CHECK(rep.invariance_residual < 1e-12);
      CHECK(rep.collisions == 0);
      CHECK(rep.separated_pairs > 0);
      CHECK(rep.rank_deficient_points == 0);
      CHECK(rep.min_singular_value > 1e-3);
    }
  }
}

TEST_CASE("diagram checks") {
  auto d1 = diagram_check(1, 200, 0);
  REQUIRE(d1.hopf_residual.has_value());
  CHECK(*d1.hopf_residual < 1e-14);
  for (int n = 1; n <= 4; ++n) {
    auto d = diagram_check(n, 200, 0);
    CHECK(d.restriction_residual < 1e-13);
    CHECK(d.zero_set_max < 1e-13);
    CHECK(d.containment_residual_real < 1e-12);
    CHECK(d.containment_residual_complex < 1e-12);
    if (n > 1) CHECK_FALSE(d.hopf_residual.has_value());
  }
  CHECK_THROWS_AS(diagram_check(5, 10, 0), DomainError);
}

TEST_CASE("geometry survey and predicted homothety") {
  CHECK(predicted_homothety(1) == doctest::Approx(4.0));
  CHECK(predicted_homothety(2) == doctest::Approx(2.0));
  auto s = survey_geometry(3, Field::real, 10, 0);
  CHECK(s.points == 10);
  CHECK(s.lambda_min == doctest::Approx(predicted_homothety(3)).epsilon(1e-12));
  CHECK(s.lambda_max == doctest::Approx(predicted_homothety(3)).epsilon(1e-12));
  CHECK(s.max_gauss_residual < 1e-10);
  CHECK(s.max_symmetry_residual < 1e-12);
  CHECK(s.max_tangency_residual < 1e-12);
}

TEST_CASE("claim audit") {
  AuditConfig cfg;
  cfg.n_max_real = 3;
  cfg.n_max_complex = 2;
  cfg.samples = 300;
  cfg.pair_count = 1000;
  cfg.geometry_points = 5;
  auto entries = run_claim_audit(cfg);
  REQUIRE_FALSE(entries.empty());
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; }));
  CHECK_FALSE(has_hard_failure(entries));
  bool saw_scale_dependent = false;
  for (const auto& e : entries) {
    CAPTURE(e.claim_id);
    CHECK_FALSE(e.paper_ref.empty());
    if (e.verdict == Verdict::match) CHECK(e.abs_deviation <= e.tolerance);
    if (e.verdict == Verdict::scale_dependent) {
      saw_scale_dependent = true;
      REQUIRE(e.reference.has_value());
      CHECK(std::abs(e.measured - *e.reference) <= e.tolerance);
    }
  }
  CHECK(saw_scale_dependent);
  auto has = [&](const std::string& id) {
    return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.claim_id == id; });
  };
  CHECK(has("harmonic_real_n3"));
  CHECK(has("harmonic_complex_n2"));
  CHECK_FALSE(has("harmonic_complex_n3"));
  CHECK(has("gauss_bonnet_rp2_image"));
  CHECK(has("sigma_rp3_domain"));

  auto again = run_claim_audit(cfg);
  REQUIRE(again.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(again[i].claim_id == entries[i].claim_id);
    CHECK(again[i].measured == entries[i].measured);
  }
}

TEST_CASE("audit config validation and verdict names") {
  AuditConfig cfg;
  cfg.n_max_real = 0;
  cfg.n_max_complex = 0;
  CHECK_THROWS_AS(run_claim_audit(cfg), UsageError);
  cfg.n_max_real = 7;
  CHECK_THROWS_AS(run_claim_audit(cfg), DomainError);
  CHECK(to_string(Verdict::match) == "MATCH");
  CHECK(to_string(Verdict::mismatch) == "MISMATCH");
  CHECK(to_string(Verdict::scale_dependent) == "SCALE_DEPENDENT");
  ClaimAuditEntry bad;
  bad.verdict = Verdict::mismatch;
  CHECK(has_hard_failure({bad}));
}
