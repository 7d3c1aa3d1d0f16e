#pragma once

#include <cstdint>
#include <limits>
#include <span>

#include <Eigen/Core>

namespace projembed {

/// Counter-based generator: the stream for sample `index` under `seed` is a
/// pure function of the pair, so batches can be drawn in any order or in
/// parallel and still reproduce bit-for-bit.
///
/// Mixing is SplitMix64. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

 private:
  std::uint64_t state_;
};

/// Uniform point on the round sphere S^{dim-1}(radius) in R^dim.
Eigen::VectorXd sample_sphere(int dim, double radius, std::uint64_t seed, std::uint64_t index);

/// Uniform point in the closed ball of the given radius in R^dim.
Eigen::VectorXd sample_ball(int dim, double radius, std::uint64_t seed, std::uint64_t index);

/// Pairwise summation in a fixed tree order.
double pairwise_sum(std::span<const double> values);

}  // namespace projembed
