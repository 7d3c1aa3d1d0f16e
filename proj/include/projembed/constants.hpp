#pragma once

#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace projembed {

using Rational = boost::multiprecision::cpp_rational;

/// Highest level for which exact constants are produced. The closed form of
/// r_n^4 carries (n-1)!, so the cap keeps everything desk-sized.
inline constexpr int kMaxLevel = 12;

enum class RadiusMode { closed, recursive };

/// Exact data for one level of the inductive construction.
///
/// `a_sq` and `b_sq` are the squared coefficients of the appended block and
/// only exist for n >= 2; level 1 is the base map.
struct EmbeddingConstants {
  int n = 1;
  Rational radius_pow4;
  std::optional<Rational> a_sq;
  std::optional<Rational> b_sq;
  int dim_real_ambient = 1;     // N_n
  int dim_complex_ambient = 2;  // M_n
};

/// r_n^4. Closed form ((n+1)/2)^2 (n-1)!, or the recursion
/// r_n^4 = (n+1)(n^2-1)/n^2 * r_{n-1}^4 from r_1^4 = 1.
Rational radius_pow4(int n, RadiusMode mode = RadiusMode::closed);

/// (a^2, b^2) for level n >= 2: b^2 = 1/((n^2-1) r_{n-1}^4), a^2 = 2n(n+1) b^2.
std::pair<Rational, Rational> step_constants(int n);

/// (N_n, M_n) from the closed forms n(n+3)/2 - 1 and (n+1)^2 - 2.
std::pair<int, int> ambient_dims(int n);

/// Same as ambient_dims but through N_n = N_{n-1}+n+1, M_n = M_{n-1}+2n+1.
std::pair<int, int> ambient_dims_recursive(int n);

EmbeddingConstants embedding_constants(int n);

/// "p/q" with the denominator always present, e.g. "1/1".
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace projembed
