#include "projembed/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "projembed/errors.hpp"

namespace projembed {

namespace {

constexpr double kGramSchmidtTol = 1e-12;

// Orthonormalise v against the columns of q, twice for stability.
Eigen::VectorXd orthogonalize(Eigen::VectorXd v, const Eigen::MatrixXd& q, Eigen::Index count) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index j = 0; j < count; ++j) v -= q.col(j).dot(v) * q.col(j);
  }
  return v;
}

int manifold_dim(Field field, Eigen::Index real_dim) {
  return field == Field::real ? static_cast<int>(real_dim) - 1 : static_cast<int>(real_dim) - 2;
}

PullbackFactor pullback_forms(const std::vector<Eigen::MatrixXd>& forms, const TangentFrame& f) {
  Eigen::MatrixXd pushed = jacobian_forms(forms, f.base_point) * f.basis;
  PullbackFactor out;
  out.gram = pushed.transpose() * pushed;
  const auto d = out.gram.rows();
  out.mean = out.gram.trace() / static_cast<double>(d);
  out.anisotropy = (out.gram - out.mean * Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
  return out;
}

SecondFundamentalForm sff_forms(const std::vector<Eigen::MatrixXd>& forms, const TangentFrame& f) {
  const Eigen::VectorXd& x = f.base_point;
  const int d = f.dim();
  const double r_sq = x.squaredNorm();

  SecondFundamentalForm out;
  out.d = d;
  out.image_point = evaluate_forms(forms, x);
  const double p_norm = out.image_point.norm();
  if (std::abs(p_norm - 1.0) > 1e-10) {
    throw PreconditionError("image point is not on the unit sphere (norm " + std::to_string(p_norm) + ")");
  }

  // Gram-Schmidt on the pushed-forward basis, tracking coefficients so that
  // image_frame = pushed * coeff (coeff upper triangular).
  const Eigen::MatrixXd pushed = jacobian_forms(forms, x) * f.basis;
  const auto ambient = pushed.rows();
  out.image_frame = Eigen::MatrixXd::Zero(ambient, d);
  Eigen::MatrixXd coeff = Eigen::MatrixXd::Zero(d, d);
  const double scale = std::max(1.0, pushed.cwiseAbs().maxCoeff());
  for (int a = 0; a < d; ++a) {
    Eigen::VectorXd v = pushed.col(a);
    Eigen::VectorXd c = Eigen::VectorXd::Unit(d, a);
    for (int pass = 0; pass < 2; ++pass) {
      for (int b = 0; b < a; ++b) {
        double proj = out.image_frame.col(b).dot(v);
        v -= proj * out.image_frame.col(b);
        c -= proj * coeff.col(b);
      }
    }
    double len = v.norm();
    if (len < kGramSchmidtTol * scale) {
      throw StructuralError("image tangent space is rank deficient at direction " + std::to_string(a));
    }
    out.image_frame.col(a) = v / len;
    coeff.col(a) = c / len;
  }

  Eigen::MatrixXd span(ambient, d + 1);
  span.leftCols(d) = out.image_frame;
  span.col(d) = orthogonalize(out.image_point / p_norm, out.image_frame, d).normalized();

  auto normal_accel = [&](const Eigen::VectorXd& w) {
    const double w_sq = w.squaredNorm();
    Eigen::VectorXd acc(forms.size());
    for (std::size_t k = 0; k < forms.size(); ++k) {
      acc[static_cast<Eigen::Index>(k)] = 2.0 * w.dot(forms[k] * w) - 2.0 * w_sq / r_sq * x.dot(forms[k] * x);
    }
    return orthogonalize(acc, span, d + 1);
  };

  // Form on the domain basis.
  std::vector<Eigen::VectorXd> beta(static_cast<std::size_t>(d * d));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    beta[static_cast<std::size_t>(i * d + i)] = normal_accel(f.basis.col(i));
    for (int j = i + 1; j < d; ++j) {
      Eigen::VectorXd plus = normal_accel(inv_sqrt2 * (f.basis.col(i) + f.basis.col(j)));
      Eigen::VectorXd minus = normal_accel(inv_sqrt2 * (f.basis.col(i) - f.basis.col(j)));
      beta[static_cast<std::size_t>(i * d + j)] = 0.5 * (plus - minus);
      beta[static_cast<std::size_t>(j * d + i)] = beta[static_cast<std::size_t>(i * d + j)];
    }
  }

  // Change to the image-orthonormal frame.
  out.values.assign(static_cast<std::size_t>(d * d), Eigen::VectorXd::Zero(ambient));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(ambient);
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          v += coeff(i, a) * coeff(j, b) * beta[static_cast<std::size_t>(i * d + j)];
        }
      }
      out.values[static_cast<std::size_t>(a * d + b)] = v;
    }
  }
  return out;
}

GeometryReport report_forms(const std::vector<Eigen::MatrixXd>& forms, const TangentFrame& f) {
  auto pull = pullback_forms(forms, f);
  auto inv = curvature_invariants(sff_forms(forms, f));
  GeometryReport rep;
  rep.homothety_factor = pull.mean;
  rep.anisotropy = pull.anisotropy;
  rep.alpha_norm_sq = inv.alpha_norm_sq;
  rep.mean_curvature_norm = inv.mean_curvature_norm;
  rep.scalar_curvature_gauss = inv.scalar_curvature;
  rep.effective_radius_sq = pull.mean * f.base_point.squaredNorm();
  return rep;
}

double laplace_forms(const std::vector<Eigen::MatrixXd>& forms, const Eigen::VectorXd& x, double radius) {
  if (std::abs(x.norm() - radius) > 1e-12 * std::max(1.0, radius)) {
    throw DomainError("base point is not on the sphere of the given radius");
  }
  const auto m = x.size() - 1;
  const double h = kLaplaceStep;
  const Eigen::MatrixXd tangent = sphere_tangent_basis(x);
  const Eigen::VectorXd f0 = evaluate_forms(forms, x);
  Eigen::VectorXd lap = Eigen::VectorXd::Zero(f0.size());
  const double c = std::cos(h / radius);
  const double s = radius * std::sin(h / radius);
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::VectorXd fp = evaluate_forms(forms, c * x + s * tangent.col(i));
    Eigen::VectorXd fm = evaluate_forms(forms, c * x - s * tangent.col(i));
    lap += (fp - 2.0 * f0 + fm) / (h * h);
  }
  const double eigenvalue = 2.0 * static_cast<double>(m + 1) / (radius * radius);
  return (lap + eigenvalue * f0).cwiseAbs().maxCoeff();
}

}  // namespace

Eigen::MatrixXd sphere_tangent_basis(const Eigen::VectorXd& x) {
  const auto dim = x.size();
  const double len = x.norm();
  if (len == 0.0) throw DomainError("zero vector has no tangent space");
  Eigen::VectorXd v = Eigen::VectorXd::Unit(dim, 0) - x / len;
  Eigen::MatrixXd reflect = Eigen::MatrixXd::Identity(dim, dim);
  if (v.norm() > 1e-15) reflect -= 2.0 * v * v.transpose() / v.squaredNorm();
  return reflect.rightCols(dim - 1);
}

TangentFrame frame(const Eigen::VectorXd& base_point, Field field, double radius) {
  const double len = base_point.norm();
  if (len == 0.0) throw DomainError("frame requested at the origin");
  if (std::abs(len - radius) > 1e-12 * std::max(1.0, radius)) {
    throw DomainError("base point is off the sphere of radius " + std::to_string(radius));
  }
  if (field == Field::complex && base_point.size() % 2 != 0) {
    throw UsageError("complex base point needs interleaved real coordinates");
  }

  TangentFrame f;
  f.field = field;
  f.base_point = base_point;
  Eigen::MatrixXd cols = sphere_tangent_basis(base_point);
  if (field == Field::real) {
    f.basis = std::move(cols);
    return f;
  }

  const Eigen::VectorXd fiber = complex_structure(base_point) / len;
  Eigen::Index drop = 0;
  (cols.transpose() * fiber).cwiseAbs().maxCoeff(&drop);

  const int d = manifold_dim(field, base_point.size());
  Eigen::MatrixXd q(base_point.size(), d + 1);
  q.col(0) = fiber;
  Eigen::Index filled = 1;
  for (Eigen::Index k = 0; k < cols.cols(); ++k) {
    if (k == drop) continue;
    Eigen::VectorXd v = orthogonalize(cols.col(k), q, filled);
    q.col(filled++) = v.normalized();
  }
  f.basis = q.rightCols(d);
  return f;
}

PullbackFactor pullback_factor(const RealQuadMap& map, const TangentFrame& frame) {
  return pullback_forms(map.real_forms(), frame);
}
PullbackFactor pullback_factor(const HermitianQuadMap& map, const TangentFrame& frame) {
  return pullback_forms(map.real_forms(), frame);
}

SecondFundamentalForm second_fundamental_form(const RealQuadMap& map, const TangentFrame& frame) {
  return sff_forms(map.real_forms(), frame);
}
SecondFundamentalForm second_fundamental_form(const HermitianQuadMap& map, const TangentFrame& frame) {
  return sff_forms(map.real_forms(), frame);
}

CurvatureInvariants curvature_invariants(const SecondFundamentalForm& alpha) {
  CurvatureInvariants inv;
  const int d = alpha.d;
  if (d == 0) return inv;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(alpha.at(0, 0).size());
  for (int i = 0; i < d; ++i) {
    mean += alpha.at(i, i);
    for (int j = 0; j < d; ++j) inv.alpha_norm_sq += alpha.at(i, j).squaredNorm();
  }
  inv.mean_curvature_norm = mean.norm();
  inv.scalar_curvature = d * (d - 1) + mean.squaredNorm() - inv.alpha_norm_sq;
  return inv;
}

GeometryReport geometry_report(const RealQuadMap& map, const TangentFrame& frame) {
  return report_forms(map.real_forms(), frame);
}
GeometryReport geometry_report(const HermitianQuadMap& map, const TangentFrame& frame) {
  return report_forms(map.real_forms(), frame);
}

double laplace_residual(const RealQuadMap& map, const Eigen::VectorXd& base_point, double radius) {
  return laplace_forms(map.real_forms(), base_point, radius);
}
double laplace_residual(const HermitianQuadMap& map, const Eigen::VectorXd& base_point, double radius) {
  return laplace_forms(map.real_forms(), base_point, radius);
}

}  // namespace projembed
