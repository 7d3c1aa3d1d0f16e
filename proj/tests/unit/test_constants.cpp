#include <doctest.h>

#include "projembed/constants.hpp"
#include "projembed/errors.hpp"

using namespace projembed;

TEST_CASE("radius_pow4 reproduces the low levels") {
  CHECK(radius_pow4(1) == Rational(1));
  CHECK(radius_pow4(2) == Rational(9, 4));  // r_2^2 = 3/2
  CHECK(radius_pow4(3) == Rational(8));     // r_3 = 2^(3/4)
  for (int n = 1; n <= 3; ++n) CHECK(radius_pow4(n, RadiusMode::recursive) == radius_pow4(n));
}

TEST_CASE("closed and recursive radius agree exactly up to the cap") {
  for (int n = 1; n <= kMaxLevel; ++n) {
    CAPTURE(n);
    CHECK(radius_pow4(n, RadiusMode::closed) == radius_pow4(n, RadiusMode::recursive));
  }
}

TEST_CASE("radius_pow4 rejects levels outside [1, 12]") {
  CHECK_THROWS_AS(radius_pow4(0), DomainError);
  CHECK_THROWS_AS(radius_pow4(-3, RadiusMode::recursive), DomainError);
  CHECK_THROWS_AS(radius_pow4(kMaxLevel + 1), DomainError);
}

TEST_CASE("step constants") {
  // b^2 = 1/((n^2-1) r_{n-1}^4), evaluated by hand.
  auto [a2, b2] = step_constants(2);
  CHECK(a2 == Rational(4));
  CHECK(b2 == Rational(1, 3));
  auto [a3, b3] = step_constants(3);
  CHECK(a3 == Rational(4, 3));
  CHECK(b3 == Rational(1, 18));
  auto [a5, b5] = step_constants(5);
  CHECK(a5 / b5 == Rational(60));
  for (int n = 2; n <= kMaxLevel; ++n) {
    auto [a, b] = step_constants(n);
    CHECK(a == Rational(2 * n * (n + 1)) * b);
  }
  CHECK_THROWS_AS(step_constants(1), DomainError);
}

TEST_CASE("ambient dimensions") {
  CHECK(ambient_dims(1) == std::pair{1, 2});
  CHECK(ambient_dims(2) == std::pair{4, 7});
  CHECK(ambient_dims(3) == std::pair{8, 14});
  CHECK_THROWS_AS(ambient_dims(0), DomainError);
  for (int n = 1; n <= kMaxLevel; ++n) {
    CAPTURE(n);
    auto [real_dim, complex_dim] = ambient_dims(n);
    CHECK(ambient_dims_recursive(n) == ambient_dims(n));
    // traceless symmetric (n+1)x(n+1) matrices = degree-2 harmonics on S^n
    CHECK(real_dim + 1 == (n + 1) * (n + 2) / 2 - 1);
    CHECK(real_dim + 1 == n * (n + 3) / 2);
    // traceless Hermitian (n+1)x(n+1) matrices
    CHECK(complex_dim + 1 == (n + 1) * (n + 1) - 1);
    if (n >= 2) CHECK(complex_dim + 1 == ambient_dims(n - 1).second + 2 * n + 2);
  }
}

TEST_CASE("embedding_constants bundles the level data") {
  auto c1 = embedding_constants(1);
  CHECK_FALSE(c1.a_sq.has_value());
  CHECK(c1.dim_real_ambient == 1);
  auto c3 = embedding_constants(3);
  REQUIRE(c3.a_sq.has_value());
  CHECK(*c3.a_sq == Rational(2 * 3 * 4) * *c3.b_sq);
  CHECK(c3.radius_pow4 > 0);
  CHECK(c3.dim_complex_ambient == 14);
}

TEST_CASE("rational text form") {
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK(to_string(Rational(9, 4)) == "9/4");
  CHECK(to_string(radius_pow4(12)) == "1686484800/1");
  for (int n = 1; n <= kMaxLevel; ++n) CHECK(parse_rational(to_string(radius_pow4(n))) == radius_pow4(n));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x/2"), UsageError);
}
