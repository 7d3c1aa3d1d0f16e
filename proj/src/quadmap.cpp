#include "projembed/quadmap.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "projembed/errors.hpp"
#include "projembed/sampling.hpp"

namespace projembed {

std::string to_string(Field field) { return field == Field::real ? "real" : "complex"; }

Field parse_field(const std::string& text) {
  if (text == "real") return Field::real;
  if (text == "complex") return Field::complex;
  throw UsageError("unknown field '" + text + "'");
}

RealQuadMap::RealQuadMap(int n, std::vector<Eigen::MatrixXd> components)
    : n_(n), components_(std::move(components)) {
  if (n < 1) throw UsageError("domain level must be at least 1");
  for (const auto& a : components_) {
    if (a.rows() != n + 1 || a.cols() != n + 1) throw UsageError("component matrix has the wrong shape");
    if (a != a.transpose()) throw UsageError("component matrix is not symmetric");
  }
}

HermitianQuadMap::HermitianQuadMap(int n, std::vector<Eigen::MatrixXcd> components)
    : n_(n), components_(std::move(components)) {
  if (n < 1) throw UsageError("domain level must be at least 1");
  real_forms_.reserve(components_.size());
  for (const auto& a : components_) {
    if (a.rows() != n + 1 || a.cols() != n + 1) throw UsageError("component matrix has the wrong shape");
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-15 * scale) {
      throw UsageError("component matrix is not Hermitian");
    }
    real_forms_.push_back(realify_hermitian(a));
  }
}

Eigen::VectorXd realify(const Eigen::VectorXcd& z) {
  Eigen::VectorXd x(2 * z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    x[2 * i] = z[i].real();
    x[2 * i + 1] = z[i].imag();
  }
  return x;
}

Eigen::VectorXcd complexify(const Eigen::VectorXd& x) {
  if (x.size() % 2 != 0) throw UsageError("realified vector must have even length");
  Eigen::VectorXcd z(x.size() / 2);
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = {x[2 * i], x[2 * i + 1]};
  return z;
}

Eigen::MatrixXd realify_hermitian(const Eigen::MatrixXcd& a) {
  // A = P + iQ with P symmetric, Q antisymmetric; per 2x2 block (i,j):
  // [[P, -Q], [Q, P]] in (Re, Im) coordinates.
  const auto m = a.rows();
  Eigen::MatrixXd s(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      double p = 0.5 * (a(i, j).real() + a(j, i).real());
      double q = 0.5 * (a(i, j).imag() - a(j, i).imag());
      s(2 * i, 2 * j) = p;
      s(2 * i + 1, 2 * j + 1) = p;
      s(2 * i, 2 * j + 1) = -q;
      s(2 * i + 1, 2 * j) = q;
    }
  }
  return s;
}

Eigen::VectorXd complex_structure(const Eigen::VectorXd& x) {
  Eigen::VectorXd y(x.size());
  for (Eigen::Index i = 0; i + 1 < x.size(); i += 2) {
    y[i] = -x[i + 1];
    y[i + 1] = x[i];
  }
  return y;
}

Eigen::VectorXd evaluate_forms(const std::vector<Eigen::MatrixXd>& forms, const Eigen::VectorXd& x) {
  Eigen::VectorXd out(forms.size());
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (forms[k].cols() != x.size()) throw UsageError("point dimension does not match the map domain");
    out[static_cast<Eigen::Index>(k)] = x.dot(forms[k] * x);
  }
  return out;
}

Eigen::MatrixXd jacobian_forms(const std::vector<Eigen::MatrixXd>& forms, const Eigen::VectorXd& x) {
  Eigen::MatrixXd jac(forms.size(), x.size());
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (forms[k].cols() != x.size()) throw UsageError("point dimension does not match the map domain");
    jac.row(static_cast<Eigen::Index>(k)) = 2.0 * (forms[k] * x).transpose();
  }
  return jac;
}

Eigen::VectorXd evaluate(const RealQuadMap& map, const Eigen::VectorXd& x) {
  if (x.size() != map.domain_dim()) throw UsageError("point dimension does not match the map domain");
  return evaluate_forms(map.components(), x);
}

Eigen::VectorXcd hermitian_values(const HermitianQuadMap& map, const Eigen::VectorXcd& z) {
  if (z.size() != map.domain_dim()) throw UsageError("point dimension does not match the map domain");
  Eigen::VectorXcd out(map.ambient_dim());
  for (int k = 0; k < map.ambient_dim(); ++k) out[k] = z.dot(map.components()[k] * z);
  return out;
}

Eigen::VectorXd evaluate(const HermitianQuadMap& map, const Eigen::VectorXcd& z) {
  return hermitian_values(map, z).real();
}

Eigen::MatrixXd jacobian(const RealQuadMap& map, const Eigen::VectorXd& x) {
  if (x.size() != map.domain_dim()) throw UsageError("point dimension does not match the map domain");
  return jacobian_forms(map.components(), x);
}

Eigen::MatrixXd jacobian(const HermitianQuadMap& map, const Eigen::VectorXcd& z) {
  if (z.size() != map.domain_dim()) throw UsageError("point dimension does not match the map domain");
  return jacobian_forms(map.real_forms(), realify(z));
}

std::vector<double> harmonicity_traces(const RealQuadMap& map) {
  std::vector<double> traces;
  for (const auto& a : map.components()) traces.push_back(a.trace());
  return traces;
}

std::vector<double> harmonicity_traces(const HermitianQuadMap& map) {
  std::vector<double> traces;
  for (const auto& a : map.components()) traces.push_back(a.trace().real());
  return traces;
}

namespace {

double norm_residual_forms(const std::vector<Eigen::MatrixXd>& forms, int dim, const Rational& radius_pow4,
                           int sample_count, std::uint64_t seed) {
  const double r4 = to_double(radius_pow4);
  double worst = 0.0;
  for (int i = 0; i < sample_count; ++i) {
    Eigen::VectorXd x = sample_ball(dim, 2.0, seed, static_cast<std::uint64_t>(i));
    double sq = x.squaredNorm();
    double residual = std::abs(evaluate_forms(forms, x).squaredNorm() - sq * sq / r4);
    worst = std::max(worst, residual);
  }
  return worst;
}

}  // namespace

double norm_identity_residual(const RealQuadMap& map, const Rational& radius_pow4, int sample_count,
                              std::uint64_t seed) {
  return norm_residual_forms(map.real_forms(), map.real_domain_dim(), radius_pow4, sample_count, seed);
}

double norm_identity_residual(const HermitianQuadMap& map, const Rational& radius_pow4, int sample_count,
                              std::uint64_t seed) {
  return norm_residual_forms(map.real_forms(), map.real_domain_dim(), radius_pow4, sample_count, seed);
}

RealRestriction real_restriction(const HermitianQuadMap& cmap, const RealQuadMap& rmap) {
  if (cmap.level() != rmap.level()) throw UsageError("maps are at different levels");
  constexpr double kTol = 1e-14;
  RealRestriction out;
  out.sigma.assign(static_cast<std::size_t>(rmap.ambient_dim()), -1);
  std::vector<bool> used(out.sigma.size(), false);
  for (int k = 0; k < cmap.ambient_dim(); ++k) {
    Eigen::MatrixXd re = cmap.components()[k].real();
    re = 0.5 * (re + re.transpose()).eval();
    if (re.cwiseAbs().maxCoeff() <= kTol) {
      out.zero_set.push_back(k);
      continue;
    }
    bool matched = false;
    for (std::size_t j = 0; j < out.sigma.size() && !matched; ++j) {
      if (used[j]) continue;
      if ((re - rmap.components()[j]).cwiseAbs().maxCoeff() <= kTol) {
        out.sigma[j] = k;
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) {
      throw StructuralError("complex coordinate " + std::to_string(k) + " has no real counterpart");
    }
  }
  for (std::size_t j = 0; j < out.sigma.size(); ++j) {
    if (!used[j]) throw StructuralError("real coordinate " + std::to_string(j) + " is not matched");
  }
  return out;
}

}  // namespace projembed
