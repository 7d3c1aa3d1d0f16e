#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projembed/quadmap.hpp"

namespace projembed {

/// Fiber structure of the level-n map: constancy on fibers, separation of
/// distinct fibers and full rank on the directions that descend.
struct FiberReport {
  double invariance_residual = 0.0;
  int separated_pairs = 0;
  int collisions = 0;  // separated pairs whose images are closer than 1e-9
  double min_separated_image_distance = 0.0;
  double min_singular_value = 0.0;
  int rank_deficient_points = 0;  // smallest singular value <= 1e-8
  int points = 0;
};

/// Distance between fibers: min(|x-y|, |x+y|) for RP^n and
/// min over theta of |x - e^{i theta} y| = sqrt(|x|^2 + |y|^2 - 2|<x,y>|) for CP^n.
double orbit_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Field field);

FiberReport fiber_checks(int n, Field field, int pair_count, std::uint64_t seed);

struct DiagramReport {
  double restriction_residual = 0.0;
  double zero_set_max = 0.0;
  std::optional<double> hopf_residual;  // level 1 only
  double containment_residual_real = 0.0;
  double containment_residual_complex = 0.0;
};

/// Commutation checks for levels 1..4.
DiagramReport diagram_check(int n, int sample_count, std::uint64_t seed);

/// Pointwise geometry gathered over random points of one level.
struct GeometrySurvey {
  int points = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double max_relative_anisotropy = 0.0;
  double max_mean_curvature = 0.0;
  double alpha_sq_min = 0.0;
  double alpha_sq_max = 0.0;
  double scalar_min = 0.0;
  double scalar_max = 0.0;
  double max_symmetry_residual = 0.0;
  double max_tangency_residual = 0.0;
  /// |s - d(d-1)/rho^2| with rho^2 = lambda r^2; meaningful for the real field.
  double max_gauss_residual = 0.0;
};

GeometrySurvey survey_geometry(int n, Field field, int point_count, std::uint64_t seed);

/// Closed-form homothety factor 2(n+1)/(n r_n^2), valid for both fields.
double predicted_homothety(int n);

enum class Verdict { match, mismatch, scale_dependent };

std::string to_string(Verdict verdict);

struct ClaimAuditEntry {
  std::string claim_id;
  std::string paper_ref;
  std::string expected;  // as stated
  double expected_value = 0.0;
  double measured = 0.0;
  double abs_deviation = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::match;
  std::optional<std::string> convention;  // "image" or "domain" for metric-dependent claims
  std::optional<double> reference;        // independent value under that convention
};

struct AuditConfig {
  int n_max_real = 4;
  int n_max_complex = 4;
  std::uint64_t seed = 0;
  int samples = 1000;        // norm identity, diagram and Monte-Carlo samples
  int pair_count = 10000;    // fiber separation pairs
  int geometry_points = 20;  // pointwise geometry per level
  double tol = 1e-8;         // pointwise geometric identities
};

/// Runs every check and returns one entry per claim, ordered by claim_id.
/// Scale-dependent claims that miss the stated value get SCALE_DEPENDENT as long
/// as they hit their independent reference; anything else that misses is a
/// MISMATCH.
std::vector<ClaimAuditEntry> run_claim_audit(const AuditConfig& config);

bool has_hard_failure(const std::vector<ClaimAuditEntry>& entries);

}  // namespace projembed
