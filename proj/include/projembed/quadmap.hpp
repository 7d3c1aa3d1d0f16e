#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "projembed/constants.hpp"

namespace projembed {

enum class Field { real, complex };

std::string to_string(Field field);
Field parse_field(const std::string& text);

/// x -> (x^T A_k x)_k on R^{n+1}, one symmetric matrix per ambient coordinate.
class RealQuadMap {
 public:
  /// Throws UsageError unless every matrix is (n+1)x(n+1) and exactly symmetric.
  RealQuadMap(int n, std::vector<Eigen::MatrixXd> components);

  int level() const { return n_; }
  Field field() const { return Field::real; }
  int domain_dim() const { return n_ + 1; }
  /// Dimension of the real vector space the forms act on.
  int real_domain_dim() const { return n_ + 1; }
  int ambient_dim() const { return static_cast<int>(components_.size()); }
  /// Manifold dimension of the quotient.
  int manifold_dim() const { return n_; }

  const std::vector<Eigen::MatrixXd>& components() const { return components_; }
  const std::vector<Eigen::MatrixXd>& real_forms() const { return components_; }

 private:
  int n_;
  std::vector<Eigen::MatrixXd> components_;
};

/// z -> (z^* A_k z)_k on C^{n+1}, one Hermitian matrix per real ambient coordinate.
///
/// Each form is also kept in realified shape: a symmetric 2(n+1) square
/// matrix acting on interleaved coordinates (Re z_0, Im z_0, Re z_1, ...).
/// All geometry is done on that real picture.
class HermitianQuadMap {
 public:
  HermitianQuadMap(int n, std::vector<Eigen::MatrixXcd> components);

  int level() const { return n_; }
  Field field() const { return Field::complex; }
  int domain_dim() const { return n_ + 1; }
  int real_domain_dim() const { return 2 * (n_ + 1); }
  int ambient_dim() const { return static_cast<int>(components_.size()); }
  int manifold_dim() const { return 2 * n_; }

  const std::vector<Eigen::MatrixXcd>& components() const { return components_; }
  const std::vector<Eigen::MatrixXd>& real_forms() const { return real_forms_; }

 private:
  int n_;
  std::vector<Eigen::MatrixXcd> components_;
  std::vector<Eigen::MatrixXd> real_forms_;
};

/// Interleaved real coordinates of a complex vector.
Eigen::VectorXd realify(const Eigen::VectorXcd& z);
Eigen::VectorXcd complexify(const Eigen::VectorXd& x);
/// Symmetric matrix S with x^T S x = z^* A z for x = realify(z).
Eigen::MatrixXd realify_hermitian(const Eigen::MatrixXcd& a);
/// Multiplication by i in interleaved real coordinates.
Eigen::VectorXd complex_structure(const Eigen::VectorXd& x);

Eigen::VectorXd evaluate(const RealQuadMap& map, const Eigen::VectorXd& x);
Eigen::VectorXd evaluate(const HermitianQuadMap& map, const Eigen::VectorXcd& z);
/// Raw z^* A_k z before dropping the (rounding-level) imaginary part.
Eigen::VectorXcd hermitian_values(const HermitianQuadMap& map, const Eigen::VectorXcd& z);

/// Analytic Jacobian, rows = ambient coordinates, columns = real domain
/// directions (interleaved Re/Im for the Hermitian case). Row k is 2 S_k x.
Eigen::MatrixXd jacobian(const RealQuadMap& map, const Eigen::VectorXd& x);
Eigen::MatrixXd jacobian(const HermitianQuadMap& map, const Eigen::VectorXcd& z);

/// Evaluation and Jacobian of a list of real symmetric forms; shared by both fields.
Eigen::VectorXd evaluate_forms(const std::vector<Eigen::MatrixXd>& forms, const Eigen::VectorXd& x);
Eigen::MatrixXd jacobian_forms(const std::vector<Eigen::MatrixXd>& forms, const Eigen::VectorXd& x);

/// Trace of each coefficient matrix; a quadratic form is harmonic iff its trace vanishes.
std::vector<double> harmonicity_traces(const RealQuadMap& map);
std::vector<double> harmonicity_traces(const HermitianQuadMap& map);

/// max |‖map(x)‖^2 - |x|^4 / r^4| over points drawn uniformly from the ball of radius 2.
double norm_identity_residual(const RealQuadMap& map, const Rational& radius_pow4, int sample_count,
                              std::uint64_t seed);
double norm_identity_residual(const HermitianQuadMap& map, const Rational& radius_pow4, int sample_count,
                              std::uint64_t seed);

/// How the real map sits inside the complex one on real points.
struct RealRestriction {
  std::vector<int> sigma;     // real coordinate j -> complex coordinate sigma[j]
  std::vector<int> zero_set;  // complex coordinates that vanish on real points
};

/// Matches coordinates structurally: on real vectors z^* A z = x^T Re(A) x, so
/// a complex coordinate vanishes iff Re(A) = 0 and otherwise must equal some
/// real component. Throws StructuralError if a real component is left unmatched.
RealRestriction real_restriction(const HermitianQuadMap& cmap, const RealQuadMap& rmap);

}  // namespace projembed
