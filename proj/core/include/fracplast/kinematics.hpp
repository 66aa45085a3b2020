#pragma once

/**
 * @file kinematics.hpp
 * @brief Numerical laboratory for fractional kinematics in 1D and 2D.
 *
 * Fractional deformation gradients are built axis by axis: component (a, A)
 * is ell^(alpha-1) times the Riesz-Caputo derivative of phi_a along X_A over
 * [X_A - ell, X_A + ell], all other coordinates frozen.  Motions are plain
 * callables; the quadrature requests exactly the nodes it needs.
 */

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "fracplast/frac_kernel.hpp"

namespace fracplast::kinematics {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using MotionMap = std::function<Vector(const Vector&)>;

/// Axis-aligned box on which a motion may be sampled.
struct Box {
  Vector lower;
  Vector upper;

  bool contains(const Vector& p) const;
};

struct SampledMotion {
  int dimension = 1;
  MotionMap phi;
  /// Inverse motion; required for spatial gradients.
  MotionMap varphi;
  /// Sampling domain of phi; unbounded when empty.
  std::optional<Box> material_domain;
  /// Sampling domain of varphi; unbounded when empty.
  std::optional<Box> spatial_domain;

  /// phi(X) = M X + c (and the exact inverse when M is invertible).
  static SampledMotion affine(const Matrix& M, const Vector& c);
};

struct DeformationTensors {
  Matrix F;          ///< classical deformation gradient
  Matrix F_tilde_X;  ///< material fractional deformation gradient
  Matrix F_tilde_x;  ///< spatial fractional deformation gradient
  Matrix F_alpha;    ///< F_tilde_X F^-1 F_tilde_x^-1
  Matrix F_alpha_x;  ///< F_tilde_x F
  Matrix F_alpha_X;  ///< F_tilde_X F^-1
  double J = 0.0;
  double J_tilde_X = 0.0;
  double J_tilde_x = 0.0;
  double J_alpha = 0.0;
  double J_alpha_x = 0.0;
  double J_alpha_X = 0.0;
};

struct StrainSet {
  Matrix E;        ///< 1/2 (F^T F - I)
  Matrix e;        ///< 1/2 (i - F^-T F^-1)
  Matrix C;        ///< F^T F
  Matrix c;        ///< F^-T F^-1
  Matrix eps_inf;  ///< 1/2 (F + F^T) - I
  /// max-norm of F^T e F - E (pull-back) and F^-T E F^-1 - e (push-forward).
  double pull_back_residual = 0.0;
  double push_forward_residual = 0.0;
};

struct ElementMaps {
  double dv = 0.0;
  Vector ds;
};

/// The six residuals of the superposed rigid motion identities.
struct ObjectivityReport {
  double F = 0.0;          ///< F* - Q F
  double F_tilde_X = 0.0;  ///< F_tilde_X* - Q F_tilde_X
  double F_tilde_x = 0.0;  ///< F_tilde_x* - F_tilde_x Q^T
  double F_alpha = 0.0;    ///< F_alpha* - Q F_alpha
  double F_alpha_X = 0.0;  ///< F_alpha_X* - Q F_alpha_X Q^T
  double F_alpha_x = 0.0;  ///< F_alpha_x* - F_alpha_x

  double max() const;
};

/**
 * Material fractional deformation gradient at X.
 *
 * The quadrature runs over [X_A - half_interval, X_A + half_interval]
 * (default: spec.ell()) while the prefactor is always ell^(alpha-1); passing
 * a half interval different from ell reproduces the scale factor
 * (ell / (L/2))^(alpha-1) seen for rigid rotations.
 *
 * Throws std::domain_error when the stencil leaves the material domain.
 */
Matrix fractional_deformation_gradient(const SampledMotion& motion, const Vector& X,
                                       const FractionalOperatorSpec& spec,
                                       std::optional<double> half_interval = std::nullopt,
                                       InnerScheme scheme = InnerScheme::central);

/// Spatial counterpart acting on varphi.  Throws std::invalid_argument when
/// the motion has no inverse.
Matrix spatial_fractional_deformation_gradient(const SampledMotion& motion, const Vector& x,
                                               const FractionalOperatorSpec& spec,
                                               std::optional<double> half_interval = std::nullopt,
                                               InnerScheme scheme = InnerScheme::central);

/// Classical gradient of phi by central differences with step h.
Matrix classical_deformation_gradient(const SampledMotion& motion, const Vector& X, double h);

/// Throws std::domain_error naming the first singular input.
DeformationTensors composite_tensors(const Matrix& F_tilde_X, const Matrix& F_tilde_x,
                                     const Matrix& F);

/// max |F_tilde_X - R| for phi(X) = R X, quadrature interval of length L.
/// L defaults to 2 ell, i.e. ell = L/2.
double rigid_motion_check(const Matrix& R, const FractionalOperatorSpec& spec,
                          std::optional<double> interval_length = std::nullopt);

/// Throws std::invalid_argument unless Q is proper orthogonal.
ObjectivityReport objectivity_check(const DeformationTensors& tensors, const Matrix& Q);

/// Throws std::domain_error if F is singular.
StrainSet strain_measures(const Matrix& F);

ElementMaps volume_surface_maps(const Matrix& F, double dV, const Vector& dS);

/// Symmetric part of ell^(alpha-1) D^alpha U at X.
Matrix infinitesimal_fractional_strain(const SampledMotion& displacement, const Vector& X,
                                       const FractionalOperatorSpec& spec,
                                       InnerScheme scheme = InnerScheme::central);

/// Planar rotation by theta (radians).
Matrix rotation2d(double theta);

}  // namespace fracplast::kinematics
