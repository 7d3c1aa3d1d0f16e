#include "projembed/audit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <Eigen/SVD>

#include "projembed/constants.hpp"
#include "projembed/construct.hpp"
#include "projembed/errors.hpp"
#include "projembed/geometry.hpp"
#include "projembed/measure.hpp"
#include "projembed/sampling.hpp"

namespace projembed {

namespace {

constexpr double kCollisionDistance = 1e-9;
constexpr double kMinSingularValue = 1e-8;
constexpr int kPhaseCount = 16;
constexpr int kMaxFiberPoints = 1000;
constexpr std::uint64_t kPairStream = 0x5EEDF1BEULL;

int real_dim(int n, Field field) { return field == Field::real ? n + 1 : 2 * (n + 1); }

Eigen::VectorXd rotate_phase(const Eigen::VectorXd& x, double theta) {
  return std::cos(theta) * x + std::sin(theta) * complex_structure(x);
}

template <typename Map>
FiberReport fiber_report(const Map& map, int pair_count, std::uint64_t seed) {
  const int n = map.level();
  const Field field = map.field();
  const int dim = real_dim(n, field);
  const double r = domain_radius(n);
  const auto& forms = map.real_forms();

  FiberReport rep;
  rep.points = std::max(1, std::min(pair_count, kMaxFiberPoints));
  rep.min_singular_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < rep.points; ++i) {
    Eigen::VectorXd x = sample_sphere(dim, r, seed, static_cast<std::uint64_t>(i));
    Eigen::VectorXd image = evaluate_forms(forms, x);
    if (field == Field::real) {
      rep.invariance_residual = std::max(rep.invariance_residual, (evaluate_forms(forms, -x) - image).norm());
    } else {
      for (int j = 0; j < kPhaseCount; ++j) {
        double theta = 0.1 + 2.0 * std::numbers::pi * j / kPhaseCount;
        double res = (evaluate_forms(forms, rotate_phase(x, theta)) - image).norm();
        rep.invariance_residual = std::max(rep.invariance_residual, res);
      }
    }
    auto f = frame(x, field, r);
    Eigen::MatrixXd pushed = jacobian_forms(forms, x) * f.basis;
    double smallest = Eigen::JacobiSVD<Eigen::MatrixXd>(pushed).singularValues().minCoeff();
    rep.min_singular_value = std::min(rep.min_singular_value, smallest);
    if (smallest <= kMinSingularValue) ++rep.rank_deficient_points;
  }

  const double delta = 1e-3 * r;
  rep.min_separated_image_distance = std::numeric_limits<double>::infinity();
  for (int i = 0; i < pair_count; ++i) {
    auto idx = static_cast<std::uint64_t>(i);
    Eigen::VectorXd x = sample_sphere(dim, r, seed ^ kPairStream, 2 * idx);
    Eigen::VectorXd y = sample_sphere(dim, r, seed ^ kPairStream, 2 * idx + 1);
    if (orbit_distance(x, y, field) <= delta) continue;
    ++rep.separated_pairs;
    double dist = (evaluate_forms(forms, x) - evaluate_forms(forms, y)).norm();
    rep.min_separated_image_distance = std::min(rep.min_separated_image_distance, dist);
    if (dist < kCollisionDistance) ++rep.collisions;
  }
  return rep;
}

template <typename Map>
GeometrySurvey survey(const Map& map, int point_count, std::uint64_t seed) {
  const int n = map.level();
  const Field field = map.field();
  const double r = domain_radius(n);
  const int d = map.manifold_dim();

  GeometrySurvey s;
  s.points = point_count;
  s.lambda_min = s.alpha_sq_min = s.scalar_min = std::numeric_limits<double>::infinity();
  s.lambda_max = s.alpha_sq_max = s.scalar_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < point_count; ++i) {
    Eigen::VectorXd x = sample_sphere(real_dim(n, field), r, seed, static_cast<std::uint64_t>(i));
    auto f = frame(x, field, r);
    auto pull = pullback_factor(map, f);
    auto alpha = second_fundamental_form(map, f);
    auto inv = curvature_invariants(alpha);

    s.lambda_min = std::min(s.lambda_min, pull.mean);
    s.lambda_max = std::max(s.lambda_max, pull.mean);
    s.max_relative_anisotropy = std::max(s.max_relative_anisotropy, pull.anisotropy / pull.mean);
    s.max_mean_curvature = std::max(s.max_mean_curvature, inv.mean_curvature_norm);
    s.alpha_sq_min = std::min(s.alpha_sq_min, inv.alpha_norm_sq);
    s.alpha_sq_max = std::max(s.alpha_sq_max, inv.alpha_norm_sq);
    s.scalar_min = std::min(s.scalar_min, inv.scalar_curvature);
    s.scalar_max = std::max(s.scalar_max, inv.scalar_curvature);

    const Eigen::VectorXd p = alpha.image_point.normalized();
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        s.max_symmetry_residual = std::max(s.max_symmetry_residual, (alpha.at(a, b) - alpha.at(b, a)).norm());
        double tangency = std::abs(alpha.at(a, b).dot(p));
        for (int c = 0; c < d; ++c) tangency = std::max(tangency, std::abs(alpha.at(a, b).dot(alpha.image_frame.col(c))));
        s.max_tangency_residual = std::max(s.max_tangency_residual, tangency);
      }
    }

    // Intrinsic scalar curvature of the induced metric: a round sphere of
    // radius rho for RP^n, the submersion metric of S^{2n+1}(rho) for CP^n.
    const double rho_sq = pull.mean * x.squaredNorm();
    const double intrinsic =
        field == Field::real ? d * (d - 1) / rho_sq : 4.0 * n * (n + 1) / rho_sq;
    s.max_gauss_residual = std::max(s.max_gauss_residual, std::abs(inv.scalar_curvature - intrinsic));
  }
  return s;
}

ClaimAuditEntry make_entry(std::string id, std::string ref, std::string expected, double expected_value,
                           double measured, double tol) {
  ClaimAuditEntry e;
  e.claim_id = std::move(id);
  e.paper_ref = std::move(ref);
  e.expected = std::move(expected);
  e.expected_value = expected_value;
  e.measured = measured;
  e.abs_deviation = std::abs(measured - expected_value);
  e.tolerance = tol;
  e.verdict = e.abs_deviation <= tol ? Verdict::match : Verdict::mismatch;
  return e;
}

ClaimAuditEntry make_scale_entry(std::string id, std::string ref, std::string expected, double expected_value,
                                 double measured, double tol, MetricConvention convention, double reference,
                                 double reference_tol) {
  auto e = make_entry(std::move(id), std::move(ref), std::move(expected), expected_value, measured, tol);
  e.convention = to_string(convention);
  e.reference = reference;
  if (e.verdict == Verdict::mismatch && std::abs(measured - reference) <= reference_tol) {
    e.verdict = Verdict::scale_dependent;
  }
  return e;
}

std::string level_id(const std::string& stem, Field field, int n) {
  return stem + "_" + to_string(field) + "_n" + std::to_string(n);
}

template <typename Map>
void level_claims(const Map& map, const AuditConfig& cfg, std::vector<ClaimAuditEntry>& out) {
  const int n = map.level();
  const Field field = map.field();
  const bool real = field == Field::real;
  const auto [dim_real, dim_complex] = ambient_dims(n);

  out.push_back(make_entry(level_id("ambient_dim", field, n),
                           real ? "N_n = \\frac{1}{2}n(n+3)-1" : "M_n=(n+1)^2 -2",
                           std::to_string(real ? dim_real : dim_complex), real ? dim_real : dim_complex,
                           map.ambient_dim() - 1, 0.0));

  out.push_back(make_entry(
      level_id("norm_identity", field, n),
      real ? "\\| \\iota_{n} (x)\\|^2 = \\frac{1}{r^4_n}(x_0^2+ \\cdots + x_n^2)^2"
           : "\\| \\iota_{n} (z)\\|^2 = \\frac{1}{r^4_{n}}",
      "0", 0.0, norm_identity_residual(map, radius_pow4(n), cfg.samples, cfg.seed), 1e-12));

  double max_trace = 0.0;
  for (double t : harmonicity_traces(map)) max_trace = std::max(max_trace, std::abs(t));
  out.push_back(make_entry(level_id("harmonic", field, n),
                           real ? "b(x_0^2+\\cdots +" : "a\\overline{z}_n z_0", "0", 0.0, max_trace, 1e-12));

  const auto fib = fiber_report(map, cfg.pair_count, cfg.seed);
  const std::string fiber_ref = real ? "\\mb{Z}/2 & \\hookrightarrow & \\mb{S}^{n}(r_n)"
                                     : "e^{i \\theta}\\cdot z=(e^{i\\theta}z_0, e^{i\\theta}z_1)";
  out.push_back(make_entry(level_id("fiber_invariance", field, n), fiber_ref, "0", 0.0, fib.invariance_residual,
                           1e-12));
  out.push_back(make_entry(level_id("fiber_separation", field, n), fiber_ref, "0 collisions", 0.0, fib.collisions,
                           0.0));
  out.push_back(make_entry(level_id("local_injectivity", field, n), fiber_ref, "0 rank-deficient points", 0.0,
                           fib.rank_deficient_points, 0.0));

  const double r = domain_radius(n);
  double containment = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    Eigen::VectorXd x = sample_sphere(map.real_domain_dim(), r, cfg.seed, static_cast<std::uint64_t>(i));
    containment = std::max(containment, std::abs(evaluate_forms(map.real_forms(), x).norm() - 1.0));
  }
  out.push_back(make_entry(level_id("image_containment", field, n),
                           real ? "\\iota_n : \\mb{S}^n(r_n) \\rightarrow \\mb{S}^{N_n}"
                                : "\\iota_n : \\mb{S}^{2n+1}(r_n) \\rightarrow \\mb{S}^{M_n}",
                           "0", 0.0, containment, 1e-12));

  const auto geo = survey(map, cfg.geometry_points, cfg.seed);
  const std::string gauss_ref = "s_g  = n(n-1) +\\tilde{g}(H,H)- \\tilde{g}(\\alpha,\\alpha)";
  out.push_back(make_entry(level_id("minimality", field, n), "mean curvature H = 0", "0", 0.0,
                           geo.max_mean_curvature, 1e-6));
  const double spread = (geo.lambda_max - geo.lambda_min) / geo.lambda_max;
  out.push_back(make_entry(level_id("homothety", field, n), "isometric 2-to-1 minimal immersion", "0", 0.0,
                           std::max(geo.max_relative_anisotropy, spread), cfg.tol));
  out.push_back(make_scale_entry(level_id("isometry_lambda", field, n),
                                 real ? "\\iota_n : \\mb{S}^n(r_n) \\rightarrow \\mb{S}^{N_n}"
                                      : "\\iota_n : \\mb{S}^{2n+1}(r_n) \\rightarrow \\mb{S}^{M_n}",
                                 "1", 1.0, 0.5 * (geo.lambda_min + geo.lambda_max), cfg.tol,
                                 MetricConvention::image, predicted_homothety(n), cfg.tol));
  out.push_back(make_entry(level_id("gauss_consistency", field, n), gauss_ref, "0", 0.0, geo.max_gauss_residual,
                           1e-6));

  if (n <= 3) {
    double worst = 0.0;
    for (int i = 0; i < cfg.geometry_points; ++i) {
      Eigen::VectorXd x = sample_sphere(map.real_domain_dim(), r, cfg.seed, static_cast<std::uint64_t>(i));
      worst = std::max(worst, laplace_residual(map, x, r));
    }
    out.push_back(make_entry(level_id("laplace_eigenvalue", field, n), "Delta f = -2(m+1) f / r^2", "0", 0.0,
                             worst, 1e-4));
  }
}

void veronese_claims(const AuditConfig& cfg, std::vector<ClaimAuditEntry>& out) {
  const double pi = std::numbers::pi;
  for (auto conv : {MetricConvention::image, MetricConvention::domain}) {
    const bool image = conv == MetricConvention::image;
    const std::string suffix = "_" + to_string(conv);
    const auto inv = global_invariants(2, Field::real, cfg.samples, cfg.seed, conv);

    out.push_back(make_scale_entry("veronese_scalar_curvature" + suffix, "Einstein of scalar curvature $4/3$", "4/3",
                                   4.0 / 3.0, inv.mean_scalar_curvature, cfg.tol, conv, image ? 2.0 / 3.0 : 4.0 / 3.0,
                                   cfg.tol));
    out.push_back(make_scale_entry("veronese_alpha_norm_sq" + suffix, "\\| \\alpha \\|^2= 2/3", "2/3", 2.0 / 3.0,
                                   inv.mean_alpha_norm_sq, cfg.tol, conv, image ? 4.0 / 3.0 : 2.0 / 3.0, cfg.tol));
    const double pi_ref = image ? 8.0 * pi : 2.0 * pi;
    out.push_back(make_scale_entry("pi_functional_rp2" + suffix,
                                   "\\| \\alpha \\|^2 d\\mu_g = 2\\pi =\\Pi (\\mb{P}^2(\\mb{R}))", "2*pi", 2.0 * pi,
                                   inv.pi_functional.value, 1e-3 * 2.0 * pi, conv, pi_ref, 1e-3 * pi_ref));
    out.push_back(make_entry("gauss_bonnet_rp2" + suffix, "s_g d\\mu_g= 1 =", "1", 1.0,
                             inv.gauss_bonnet_ratio->value, 1e-3));
    out.back().convention = to_string(conv);
  }
}

void sigma_claims(const AuditConfig& cfg, std::vector<ClaimAuditEntry>& out) {
  const double sigma = 6.0 * std::pow(std::numbers::pi, 4.0 / 3.0);
  for (auto conv : {MetricConvention::image, MetricConvention::domain}) {
    const auto inv = global_invariants(3, Field::real, cfg.samples, cfg.seed, conv);
    out.push_back(make_entry("sigma_rp3_" + to_string(conv), "6 \\pi^{\\frac{4}{3}}", "6*pi^(4/3)", sigma,
                             inv.sigma_quotient->value, 5e-3 * sigma));
    out.back().convention = to_string(conv);
  }
}

}  // namespace

double orbit_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Field field) {
  if (field == Field::real) return std::min((x - y).norm(), (x + y).norm());
  const std::complex<double> inner = complexify(x).dot(complexify(y));
  return std::sqrt(std::max(0.0, x.squaredNorm() + y.squaredNorm() - 2.0 * std::abs(inner)));
}

FiberReport fiber_checks(int n, Field field, int pair_count, std::uint64_t seed) {
  if (pair_count < 1) throw UsageError("pair_count must be positive");
  if (field == Field::real) return fiber_report(build_real(n), pair_count, seed);
  return fiber_report(build_complex(n), pair_count, seed);
}

DiagramReport diagram_check(int n, int sample_count, std::uint64_t seed) {
  if (n < 1 || n > 4) throw DomainError("diagram checks cover levels 1..4");
  const auto rmap = build_real(n);
  const auto cmap = build_complex(n);
  const auto restriction = real_restriction(cmap, rmap);
  const double r = domain_radius(n);

  DiagramReport rep;
  for (int i = 0; i < sample_count; ++i) {
    auto idx = static_cast<std::uint64_t>(i);
    Eigen::VectorXd x = sample_sphere(n + 1, r, seed, idx);
    Eigen::VectorXd real_image = evaluate(rmap, x);
    Eigen::VectorXd complex_image = evaluate(cmap, x.cast<std::complex<double>>());
    for (std::size_t j = 0; j < restriction.sigma.size(); ++j) {
      double diff = std::abs(complex_image[restriction.sigma[j]] - real_image[static_cast<Eigen::Index>(j)]);
      rep.restriction_residual = std::max(rep.restriction_residual, diff);
    }
    for (int k : restriction.zero_set) rep.zero_set_max = std::max(rep.zero_set_max, std::abs(complex_image[k]));
    rep.containment_residual_real = std::max(rep.containment_residual_real, std::abs(real_image.norm() - 1.0));

    Eigen::VectorXd w = sample_sphere(2 * (n + 1), r, seed, idx);
    rep.containment_residual_complex =
        std::max(rep.containment_residual_complex, std::abs(evaluate(cmap, complexify(w)).norm() - 1.0));

    if (n == 1) {
      Eigen::Vector2cd z = complexify(sample_sphere(4, 1.0, seed, idx));
      double res = (evaluate(cmap, z) - hopf(z)).cwiseAbs().maxCoeff();
      rep.hopf_residual = std::max(rep.hopf_residual.value_or(0.0), res);
    }
  }
  return rep;
}

GeometrySurvey survey_geometry(int n, Field field, int point_count, std::uint64_t seed) {
  if (point_count < 1) throw UsageError("point_count must be positive");
  if (field == Field::real) return survey(build_real(n), point_count, seed);
  return survey(build_complex(n), point_count, seed);
}

double predicted_homothety(int n) {
  const double r_sq = std::sqrt(to_double(radius_pow4(n)));
  return 2.0 * (n + 1) / (n * r_sq);
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::match:
      return "MATCH";
    case Verdict::mismatch:
      return "MISMATCH";
    case Verdict::scale_dependent:
      return "SCALE_DEPENDENT";
  }
  return "MISMATCH";
}

std::vector<ClaimAuditEntry> run_claim_audit(const AuditConfig& cfg) {
  if (cfg.n_max_real < 0 || cfg.n_max_real > 6) throw DomainError("n_max_real must be in [0, 6]");
  if (cfg.n_max_real == 0 && cfg.n_max_complex == 0) throw UsageError("nothing to audit");
  if (cfg.n_max_complex < 0 || cfg.n_max_complex > 4) throw DomainError("n_max_complex must be in [0, 4]");
  if (cfg.samples < 1 || cfg.pair_count < 1 || cfg.geometry_points < 1) {
    throw UsageError("sample counts must be positive");
  }
  if (!(cfg.tol > 0.0)) throw UsageError("tolerance must be positive");

  std::vector<ClaimAuditEntry> out;

  int radius_disagreements = 0;
  for (int n = 1; n <= kMaxLevel; ++n) {
    if (radius_pow4(n, RadiusMode::closed) != radius_pow4(n, RadiusMode::recursive)) ++radius_disagreements;
  }
  out.push_back(make_entry("radius_sequences", "r_n^4 =\\left(\\frac{n+1}{2}\\right)^2(n-1)!", "0 disagreements", 0.0,
                           radius_disagreements, 0.0));
  out.push_back(make_entry("radius_r3", "r_3=2^{\\frac{3}{4}}", "2^(3/4)", std::pow(2.0, 0.75),
                           std::pow(to_double(radius_pow4(3)), 0.25), 1e-12));

  for (int n = 1; n <= cfg.n_max_real; ++n) level_claims(build_real(n), cfg, out);
  for (int n = 1; n <= cfg.n_max_complex; ++n) level_claims(build_complex(n), cfg, out);

  for (int n = 1; n <= std::min(cfg.n_max_complex, cfg.n_max_real); ++n) {
    auto diagram = diagram_check(n, cfg.samples, cfg.seed);
    out.push_back(make_entry("real_restriction_n" + std::to_string(n), "restriction to real vectors", "0",
                             0.0, std::max(diagram.restriction_residual, diagram.zero_set_max), 1e-13));
    if (diagram.hopf_residual) {
      out.push_back(make_entry("hopf_factorization", "2(y_0x_1-x_0y_1)", "0", 0.0, *diagram.hopf_residual, 1e-14));
    }
  }

  if (cfg.n_max_real >= 2) veronese_claims(cfg, out);
  if (cfg.n_max_real >= 3) sigma_claims(cfg, out);

  std::stable_sort(out.begin(), out.end(),
                   [](const ClaimAuditEntry& a, const ClaimAuditEntry& b) { return a.claim_id < b.claim_id; });
  return out;
}

bool has_hard_failure(const std::vector<ClaimAuditEntry>& entries) {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ClaimAuditEntry& e) { return e.verdict == Verdict::mismatch; });
}

}  // namespace projembed
