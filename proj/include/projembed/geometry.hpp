#pragma once

#include <vector>

#include <Eigen/Core>

#include "projembed/quadmap.hpp"

namespace projembed {

/// A point of the domain sphere together with an orthonormal basis of the
/// directions that descend to the quotient: the tangent space in the real
/// case, the horizontal space (orthogonal to x and i x) in the complex case.
/// Complex points are kept in interleaved real coordinates.
struct TangentFrame {
  Field field = Field::real;
  Eigen::VectorXd base_point;
  Eigen::MatrixXd basis;  // one column per direction

  int dim() const { return static_cast<int>(basis.cols()); }
  double radius() const { return base_point.norm(); }
};

/// Deterministic frame: the Householder reflection sending e_0 to x/|x|
/// supplies an orthonormal basis of x^perp. In the complex case the column
/// most aligned with i x is dropped and the rest re-orthonormalised against it.
///
/// Throws DomainError for a zero point or one off the sphere of `radius`
/// by more than 1e-12 (relative).
TangentFrame frame(const Eigen::VectorXd& base_point, Field field, double radius);

/// Full tangent basis of the domain sphere at x (dimension dim(x) - 1).
Eigen::MatrixXd sphere_tangent_basis(const Eigen::VectorXd& x);

struct PullbackFactor {
  double mean = 0.0;        // trace(G) / d
  double anisotropy = 0.0;  // max |G - mean I|
  Eigen::MatrixXd gram;     // G = (J B)^T (J B)
};

PullbackFactor pullback_factor(const RealQuadMap& map, const TangentFrame& frame);
PullbackFactor pullback_factor(const HermitianQuadMap& map, const TangentFrame& frame);

/// Second fundamental form of the image inside the unit sphere, expressed in
/// the orthonormal frame obtained by Gram-Schmidt on the pushed-forward basis.
struct SecondFundamentalForm {
  int d = 0;
  Eigen::VectorXd image_point;
  Eigen::MatrixXd image_frame;          // orthonormal columns spanning d(map)(T_x)
  std::vector<Eigen::VectorXd> values;  // row-major d x d, ambient vectors

  const Eigen::VectorXd& at(int i, int j) const { return values[static_cast<std::size_t>(i * d + j)]; }
};

/// Curve-acceleration method: along the great circle through the base point
/// with velocity w the image acceleration is 2 w^T S_k w - 2|w|^2/r^2 x^T S_k x;
/// its component normal to the image tangent space and to the image point is
/// alpha(w, w). Off-diagonal entries come from polarization on normalised
/// directions. Throws StructuralError when the pushed-forward basis loses rank.
SecondFundamentalForm second_fundamental_form(const RealQuadMap& map, const TangentFrame& frame);
SecondFundamentalForm second_fundamental_form(const HermitianQuadMap& map, const TangentFrame& frame);

struct CurvatureInvariants {
  double alpha_norm_sq = 0.0;
  double mean_curvature_norm = 0.0;
  double scalar_curvature = 0.0;  // d(d-1) + |H|^2 - |alpha|^2
};

CurvatureInvariants curvature_invariants(const SecondFundamentalForm& alpha);

struct GeometryReport {
  double homothety_factor = 0.0;
  double anisotropy = 0.0;
  double alpha_norm_sq = 0.0;
  double mean_curvature_norm = 0.0;
  double scalar_curvature_gauss = 0.0;
  double effective_radius_sq = 0.0;  // homothety_factor * r^2
};

GeometryReport geometry_report(const RealQuadMap& map, const TangentFrame& frame);
GeometryReport geometry_report(const HermitianQuadMap& map, const TangentFrame& frame);

/// Step used by laplace_residual.
inline constexpr double kLaplaceStep = 1e-3;

/// Compares a second-order finite-difference Laplace-Beltrami of every
/// component (great circles through x, arclength step 1e-3) with
/// -2(m+1)/r^2 times the component, m the sphere dimension. `base_point` is in
/// real (interleaved for complex) coordinates. Returns the largest residual.
double laplace_residual(const RealQuadMap& map, const Eigen::VectorXd& base_point, double radius);
double laplace_residual(const HermitianQuadMap& map, const Eigen::VectorXd& base_point, double radius);

}  // namespace projembed
