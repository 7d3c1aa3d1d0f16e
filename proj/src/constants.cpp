#include "projembed/constants.hpp"

#include <string>

#include "projembed/errors.hpp"

namespace projembed {

namespace {

void check_level(int n, int lowest) {
  if (n < lowest) {
    throw DomainError("level " + std::to_string(n) + " is below the minimum " + std::to_string(lowest));
  }
  if (n > kMaxLevel) {
    throw DomainError("level " + std::to_string(n) + " exceeds the supported cap " + std::to_string(kMaxLevel));
  }
}

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Rational radius_pow4(int n, RadiusMode mode) {
  check_level(n, 1);
  if (mode == RadiusMode::closed) {
    Rational half(n + 1, 2);
    return half * half * factorial(n - 1);
  }
  Rational r4 = 1;
  for (int k = 2; k <= n; ++k) {
    r4 *= Rational((k + 1) * (k * k - 1), k * k);
  }
  return r4;
}

std::pair<Rational, Rational> step_constants(int n) {
  check_level(n, 2);
  Rational b_sq = 1 / (Rational(n * n - 1) * radius_pow4(n - 1));
  Rational a_sq = Rational(2 * n * (n + 1)) * b_sq;
  return {a_sq, b_sq};
}

std::pair<int, int> ambient_dims(int n) {
  check_level(n, 1);
  return {n * (n + 3) / 2 - 1, (n + 1) * (n + 1) - 2};
}

std::pair<int, int> ambient_dims_recursive(int n) {
  check_level(n, 1);
  int real_dim = 1;
  int complex_dim = 2;
  for (int k = 2; k <= n; ++k) {
    real_dim += k + 1;
    complex_dim += 2 * k + 1;
  }
  return {real_dim, complex_dim};
}

EmbeddingConstants embedding_constants(int n) {
  EmbeddingConstants c;
  c.n = n;
  c.radius_pow4 = radius_pow4(n);
  if (n >= 2) {
    auto [a_sq, b_sq] = step_constants(n);
    c.a_sq = a_sq;
    c.b_sq = b_sq;
  }
  std::tie(c.dim_real_ambient, c.dim_complex_ambient) = ambient_dims(n);
  return c;
}

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int p(text.substr(0, slash));
    boost::multiprecision::cpp_int q(text.substr(slash + 1));
    if (q == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw UsageError("not a rational: '" + text + "'");
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace projembed
