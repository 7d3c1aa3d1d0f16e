#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "projembed/quadmap.hpp"

namespace projembed {

/// Volume of the round sphere S^dim(r).
double sphere_volume(int dim, double r);

/// Which metric the quotient is measured in. `image` is the metric the
/// embedding actually induces (domain metric times the homothety factor);
/// `domain` is the metric of S^n(r_n)/Z2 or S^{2n+1}(r_n)/S^1 itself.
enum class MetricConvention { image, domain };

std::string to_string(MetricConvention convention);
MetricConvention parse_metric(const std::string& text);

/// Homothety factor of build_*(n) at the reference point r_n e_0.
double reference_homothety(int n, Field field);

/// Scale of the chosen metric relative to the domain metric.
double metric_scale(MetricConvention convention, int n, Field field);

/// Volume of the quotient with the domain metric: half of S^n(r) for RP^n,
/// Vol(S^{2n+1}(r)) / (2 pi r) for CP^n.
double domain_quotient_volume(int n, Field field);

struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int sample_count = 0;
  std::uint64_t seed = 0;
};

/// f is evaluated on the domain sphere of radius r_n (interleaved real
/// coordinates for the complex field).
using QuotientIntegrand = std::function<double(const Eigen::VectorXd&)>;

/// Monte-Carlo integral over RP^n or CP^n in the metric `scale` times the
/// domain metric: domain_quotient_volume * scale^{d/2} * mean(f).
///
/// The first few samples are checked for fiber invariance (x -> -x, or a phase
/// rotation) at 1e-10; failure throws PreconditionError.
IntegralEstimate integrate_quotient(const QuotientIntegrand& f, int n, Field field, int sample_count,
                                    std::uint64_t seed, double scale);

IntegralEstimate integrate_quotient(const QuotientIntegrand& f, int n, Field field, int sample_count,
                                    std::uint64_t seed, MetricConvention convention = MetricConvention::image);

/// Global invariants of the embedded quotient. Pointwise, the scalar
/// curvature in the chosen metric is s_img * lambda(x) / scale, and |alpha|^2
/// is what the Gauss equation then assigns (d(d-1) + |H|^2 - s). For the image
/// convention both coincide with the measured values.
struct GlobalInvariants {
  std::optional<MetricConvention> convention;  // empty for an explicit scale
  double scale = 1.0;
  IntegralEstimate volume;
  IntegralEstimate total_scalar;
  IntegralEstimate pi_functional;
  double mean_scalar_curvature = 0.0;
  double mean_alpha_norm_sq = 0.0;
  std::optional<IntegralEstimate> gauss_bonnet_ratio;  // real n = 2
  std::optional<IntegralEstimate> sigma_quotient;      // real n = 3
};

GlobalInvariants global_invariants(int n, Field field, int sample_count, std::uint64_t seed,
                                   MetricConvention convention = MetricConvention::image);

/// Same with an explicit metric scale (used to check scale invariance).
GlobalInvariants global_invariants(int n, Field field, int sample_count, std::uint64_t seed, double scale);

}  // namespace projembed
