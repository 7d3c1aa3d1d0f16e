#include "projembed/measure.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "projembed/construct.hpp"
#include "projembed/errors.hpp"
#include "projembed/geometry.hpp"
#include "projembed/sampling.hpp"

namespace projembed {

namespace {

constexpr int kInvarianceSpotChecks = 8;
constexpr double kInvarianceTol = 1e-10;

int real_dim(int n, Field field) { return field == Field::real ? n + 1 : 2 * (n + 1); }
int quotient_dim(int n, Field field) { return field == Field::real ? n : 2 * n; }

Eigen::VectorXd fiber_image(const Eigen::VectorXd& x, Field field) {
  if (field == Field::real) return -x;
  // e^{i theta} x with theta = 1
  return std::cos(1.0) * x + std::sin(1.0) * complex_structure(x);
}

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanAndError mean_and_error(const std::vector<double>& values) {
  MeanAndError out;
  const auto count = static_cast<double>(values.size());
  if (values.empty()) return out;
  out.mean = pairwise_sum(values) / count;
  if (values.size() < 2) return out;
  std::vector<double> dev(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) dev[i] = (values[i] - out.mean) * (values[i] - out.mean);
  out.std_error = std::sqrt(pairwise_sum(dev) / (count - 1.0) / count);
  return out;
}

IntegralEstimate scaled_estimate(const std::vector<double>& values, double factor, std::uint64_t seed) {
  auto me = mean_and_error(values);
  return {factor * me.mean, factor * me.std_error, static_cast<int>(values.size()), seed};
}

double measure_factor(int n, Field field, double scale) {
  return domain_quotient_volume(n, field) * std::pow(scale, 0.5 * quotient_dim(n, field));
}

template <typename Map>
GlobalInvariants invariants_for(const Map& map, int sample_count, std::uint64_t seed, double scale) {
  const int n = map.level();
  const Field field = map.field();
  const int d = quotient_dim(n, field);
  const double r = domain_radius(n);

  std::vector<double> ones(static_cast<std::size_t>(sample_count), 1.0);
  std::vector<double> scalar(ones.size());
  std::vector<double> alpha_sq(ones.size());
  for (int i = 0; i < sample_count; ++i) {
    Eigen::VectorXd x = sample_sphere(real_dim(n, field), r, seed, static_cast<std::uint64_t>(i));
    auto rep = geometry_report(map, frame(x, field, r));
    double s = rep.scalar_curvature_gauss * rep.homothety_factor / scale;
    scalar[static_cast<std::size_t>(i)] = s;
    alpha_sq[static_cast<std::size_t>(i)] =
        d * (d - 1) + rep.mean_curvature_norm * rep.mean_curvature_norm - s;
  }

  const double factor = measure_factor(n, field, scale);
  GlobalInvariants out;
  out.scale = scale;
  out.volume = scaled_estimate(ones, factor, seed);
  out.total_scalar = scaled_estimate(scalar, factor, seed);
  out.pi_functional = scaled_estimate(alpha_sq, factor, seed);
  out.mean_scalar_curvature = mean_and_error(scalar).mean;
  out.mean_alpha_norm_sq = mean_and_error(alpha_sq).mean;

  if (field == Field::real && n == 2) {
    const double k = 1.0 / (4.0 * std::numbers::pi);
    out.gauss_bonnet_ratio =
        IntegralEstimate{k * out.total_scalar.value, k * out.total_scalar.std_error, sample_count, seed};
  }
  if (field == Field::real && n == 3) {
    const double k = 1.0 / std::cbrt(out.volume.value);
    out.sigma_quotient =
        IntegralEstimate{k * out.total_scalar.value, k * out.total_scalar.std_error, sample_count, seed};
  }
  return out;
}

}  // namespace

double sphere_volume(int dim, double r) {
  const double half = 0.5 * (dim + 1);
  return 2.0 * std::pow(std::numbers::pi, half) * std::pow(r, dim) / std::tgamma(half);
}

std::string to_string(MetricConvention convention) {
  return convention == MetricConvention::image ? "image" : "domain";
}

MetricConvention parse_metric(const std::string& text) {
  if (text == "image") return MetricConvention::image;
  if (text == "domain") return MetricConvention::domain;
  throw UsageError("unknown metric convention '" + text + "'");
}

double reference_homothety(int n, Field field) {
  const double r = domain_radius(n);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(real_dim(n, field));
  x[0] = r;
  auto f = frame(x, field, r);
  return field == Field::real ? pullback_factor(build_real(n), f).mean : pullback_factor(build_complex(n), f).mean;
}

double metric_scale(MetricConvention convention, int n, Field field) {
  return convention == MetricConvention::image ? reference_homothety(n, field) : 1.0;
}

double domain_quotient_volume(int n, Field field) {
  const double r = domain_radius(n);
  if (field == Field::real) return 0.5 * sphere_volume(n, r);
  return sphere_volume(2 * n + 1, r) / (2.0 * std::numbers::pi * r);
}

IntegralEstimate integrate_quotient(const QuotientIntegrand& f, int n, Field field, int sample_count,
                                    std::uint64_t seed, double scale) {
  if (sample_count < 1) throw UsageError("sample_count must be positive");
  if (!(scale > 0.0)) throw UsageError("metric scale must be positive");
  const double r = domain_radius(n);
  std::vector<double> values(static_cast<std::size_t>(sample_count));
  for (int i = 0; i < sample_count; ++i) {
    Eigen::VectorXd x = sample_sphere(real_dim(n, field), r, seed, static_cast<std::uint64_t>(i));
    double v = f(x);
    if (i < kInvarianceSpotChecks) {
      double w = f(fiber_image(x, field));
      if (std::abs(v - w) > kInvarianceTol * std::max(1.0, std::abs(v))) {
        throw PreconditionError("integrand is not invariant under the fiber action");
      }
    }
    values[static_cast<std::size_t>(i)] = v;
  }
  return scaled_estimate(values, measure_factor(n, field, scale), seed);
}

IntegralEstimate integrate_quotient(const QuotientIntegrand& f, int n, Field field, int sample_count,
                                    std::uint64_t seed, MetricConvention convention) {
  return integrate_quotient(f, n, field, sample_count, seed, metric_scale(convention, n, field));
}

GlobalInvariants global_invariants(int n, Field field, int sample_count, std::uint64_t seed, double scale) {
  if (sample_count < 1) throw UsageError("sample_count must be positive");
  if (!(scale > 0.0)) throw UsageError("metric scale must be positive");
  if (field == Field::real) return invariants_for(build_real(n), sample_count, seed, scale);
  return invariants_for(build_complex(n), sample_count, seed, scale);
}

GlobalInvariants global_invariants(int n, Field field, int sample_count, std::uint64_t seed,
                                   MetricConvention convention) {
  auto out = global_invariants(n, field, sample_count, seed, metric_scale(convention, n, field));
  out.convention = convention;
  return out;
}

}  // namespace projembed
