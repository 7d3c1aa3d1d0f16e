#include "projembed/construct.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "projembed/constants.hpp"
#include "projembed/errors.hpp"

namespace projembed {

namespace {

void check_range(int n, int cap) {
  if (n < 1 || n > cap) {
    throw DomainError("level " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
  }
}

template <typename Matrix>
Matrix pad(const Matrix& a, int size) {
  Matrix out = Matrix::Zero(size, size);
  out.topLeftCorner(a.rows(), a.cols()) = a;
  return out;
}

}  // namespace

RealQuadMap build_real(int n) {
  check_range(n, kMaxRealLevel);
  std::vector<Eigen::MatrixXd> comps(2, Eigen::MatrixXd::Zero(2, 2));
  comps[0] << 0, 1, 1, 0;
  comps[1] << 1, 0, 0, -1;

  for (int level = 2; level <= n; ++level) {
    const int size = level + 1;
    auto [a_sq, b_sq] = step_constants(level);
    const double a = std::sqrt(to_double(a_sq));
    const double b = std::sqrt(to_double(b_sq));
    const double scale = 1.0 / std::sqrt(static_cast<double>(level + 1));

    std::vector<Eigen::MatrixXd> next;
    next.reserve(comps.size() + static_cast<std::size_t>(level) + 1);
    for (const auto& c : comps) next.push_back(scale * pad(c, size));
    for (int k = 0; k < level; ++k) {
      Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(size, size);
      cross(level, k) = cross(k, level) = 0.5 * a;
      next.push_back(scale * cross);
    }
    Eigen::MatrixXd last = Eigen::MatrixXd::Zero(size, size);
    for (int k = 0; k < level; ++k) last(k, k) = b;
    last(level, level) = -level * b;
    next.push_back(scale * last);
    comps = std::move(next);
  }
  return RealQuadMap(n, std::move(comps));
}

HermitianQuadMap build_complex(int n) {
  check_range(n, kMaxComplexLevel);
  using C = std::complex<double>;
  const C i{0.0, 1.0};

  // [Re, Im] of coef * conj(z_new) z_k as Hermitian forms.
  auto pair_forms = [&](int size, int new_index, int k, double coef) {
    Eigen::MatrixXcd re = Eigen::MatrixXcd::Zero(size, size);
    Eigen::MatrixXcd im = Eigen::MatrixXcd::Zero(size, size);
    re(new_index, k) = re(k, new_index) = 0.5 * coef;
    im(new_index, k) = -0.5 * coef * i;
    im(k, new_index) = 0.5 * coef * i;
    return std::pair{re, im};
  };

  std::vector<Eigen::MatrixXcd> comps;
  {
    auto [re, im] = pair_forms(2, 1, 0, 2.0);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
    diag(0, 0) = 1.0;
    diag(1, 1) = -1.0;
    comps = {re, im, diag};
  }

  for (int level = 2; level <= n; ++level) {
    const int size = level + 1;
    auto [a_sq, b_sq] = step_constants(level);
    const double a = std::sqrt(to_double(a_sq));
    const double b = std::sqrt(to_double(b_sq));
    const double scale = 1.0 / std::sqrt(static_cast<double>(level + 1));

    std::vector<Eigen::MatrixXcd> next;
    next.reserve(comps.size() + 2 * static_cast<std::size_t>(level) + 1);
    for (const auto& c : comps) next.push_back(scale * pad(c, size));
    for (int k = 0; k < level; ++k) {
      auto [re, im] = pair_forms(size, level, k, a);
      next.push_back(scale * re);
      next.push_back(scale * im);
    }
    Eigen::MatrixXcd last = Eigen::MatrixXcd::Zero(size, size);
    for (int k = 0; k < level; ++k) last(k, k) = b;
    last(level, level) = -level * b;
    next.push_back(scale * last);
    comps = std::move(next);
  }
  return HermitianQuadMap(n, std::move(comps));
}

Eigen::Vector3d hopf(const Eigen::Vector2cd& z) {
  const double x0 = z[0].real(), y0 = z[0].imag();
  const double x1 = z[1].real(), y1 = z[1].imag();
  if (x1 == 0.0 && y1 == 0.0) return {0.0, 0.0, 1.0};
  return {2.0 * (x0 * x1 + y0 * y1), 2.0 * (y0 * x1 - x0 * y1), x0 * x0 + y0 * y0 - x1 * x1 - y1 * y1};
}

RealRestriction real_restriction(const HermitianQuadMap& cmap) {
  return real_restriction(cmap, build_real(cmap.level()));
}

double domain_radius(int n) { return std::pow(to_double(radius_pow4(n)), 0.25); }

}  // namespace projembed
