#include "projembed/sampling.hpp"

#include <cmath>
#include <random>

namespace projembed {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index)
    : state_(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)) {}

CounterRng::result_type CounterRng::operator()() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Eigen::VectorXd sample_sphere(int dim, double radius, std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v[i] = normal(rng);
  } while (v.norm() < 1e-8);
  return radius * v / v.norm();
}

Eigen::VectorXd sample_ball(int dim, double radius, std::uint64_t seed, std::uint64_t index) {
  // Separate stream for the radial draw so the direction matches sample_sphere.
  CounterRng rng(~seed, index);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double t = std::pow(uniform(rng), 1.0 / dim);
  return sample_sphere(dim, radius * t, seed, index);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  auto half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace projembed
