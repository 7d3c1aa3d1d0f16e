#pragma once

#include <Eigen/Core>

#include "projembed/quadmap.hpp"

namespace projembed {

inline constexpr int kMaxRealLevel = 12;
inline constexpr int kMaxComplexLevel = 8;

/// The real embedding at level n (1 <= n <= 12).
///
/// Level 1 is (2 x0 x1, x0^2 - x1^2). Level n takes the level n-1 components,
/// appends a x_n x_k for k < n and b(|x'|^2 - n x_n^2), and scales the whole
/// list by 1/sqrt(n+1). a, b are the positive roots of the exact squares.
RealQuadMap build_real(int n);

/// The complex embedding at level n (1 <= n <= 8).
///
/// Each complex coordinate a conj(z_n) z_k is stored as the pair
/// [Re, Im] of Hermitian forms; the base map is (2 z0 conj(z1), |z0|^2 - |z1|^2)
/// which already has the conj(z_n) z_k shape with n = 1, k = 0.
HermitianQuadMap build_complex(int n);

/// Closed-form Hopf map S^3 -> S^2 in the coordinates z_k = x_k + i y_k.
Eigen::Vector3d hopf(const Eigen::Vector2cd& z);

/// Real restriction of build_complex(n) against build_real(n).
RealRestriction real_restriction(const HermitianQuadMap& cmap);

/// r_n as a double.
double domain_radius(int n);

}  // namespace projembed
