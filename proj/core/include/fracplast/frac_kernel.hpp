#pragma once

/**
 * @file frac_kernel.hpp
 * @brief Riesz-Caputo fractional derivative on a finite symmetric interval.
 *
 * For an evaluation point X and length scale ell the operator acts on the
 * interval [X - ell, X + ell].  Each half is discretized with m equal
 * subintervals of width h = ell / m and the Caputo integrals are evaluated
 * with the modified (product) trapezoidal rule: the classical first
 * derivative f' is interpolated piecewise-linearly between quadrature nodes
 * and integrated exactly against the weakly singular kernel.
 *
 * Left Caputo (nodes a = X_0 < ... < X_m = X):
 *
 *     D_left f(X) ~ A * { B f'(X_0) + sum_{j=1}^{m-1} c_j f'(X_j) + f'(X_m) }
 *
 * Right Caputo (nodes X = X_0 < ... < X_m = b):
 *
 *     D_right f(X) ~ -A * { f'(X_0) + sum_{j=1}^{m-1} d_j f'(X_j) + B f'(X_m) }
 *
 * with p = 2 - alpha and
 *
 *     A   = h^(1-alpha) / Gamma(3-alpha)
 *     B   = (m-1)^p - (m-2+alpha) m^(1-alpha)
 *     c_j = (m-j+1)^p - 2 (m-j)^p + (m-j-1)^p
 *     d_j = (j+1)^p   - 2 j^p     + (j-1)^p
 *
 * The Riesz-Caputo combination is RC = E (D_left - D_right) with
 * E = Gamma(2-alpha) / 2.  Only orders 0 < alpha <= 1 (n = 1) are supported;
 * at alpha = 1 all of B, c_j, d_j vanish and RC reduces to f'(X).
 */

#include <span>
#include <vector>

namespace fracplast {

/// Classical finite-difference scheme used for f' at each quadrature node.
enum class InnerScheme { forward, central, backward };

/// Order, length scale and quadrature resolution of the nonlocal operator.
class FractionalOperatorSpec {
 public:
  /// Throws std::domain_error unless 0 < alpha <= 1, ell > 0 and m >= 2.
  FractionalOperatorSpec(double alpha, double ell, int m);

  double alpha() const noexcept { return alpha_; }
  double ell() const noexcept { return ell_; }
  int m() const noexcept { return m_; }

  /// Quadrature step h = ell / m.
  double step() const noexcept { return ell_ / m_; }
  /// Length of the integration interval, L = 2 ell.
  double interval_length() const noexcept { return 2.0 * ell_; }

  bool is_classical() const noexcept { return alpha_ == 1.0; }

 private:
  double alpha_;
  double ell_;
  int m_;
};

/// Scalars of the discretized operator.  C and D hold the m-1 middle weights
/// of the left and right sums; F = ell^(alpha-1) E A.
struct StencilCoefficients {
  double A = 0.0;
  double B = 0.0;
  std::vector<double> C;
  std::vector<double> D;
  double E = 0.0;
  double F = 0.0;
};

StencilCoefficients stencil_coefficients(const FractionalOperatorSpec& spec);

/// Weights w_0..w_m of the left sum over nodes a..X (A not folded in).
std::vector<double> caputo_left_weights(const FractionalOperatorSpec& spec);

/// Weights v_0..v_m of the right sum over nodes X..b (A and the (-1)^n sign
/// not folded in).
std::vector<double> caputo_right_weights(const FractionalOperatorSpec& spec);

/**
 * The discretized Riesz-Caputo operator with its weights materialized.
 *
 * Normally built from a spec; with_weights() accepts externally supplied
 * weight vectors so that verification harnesses can inject faults.
 */
class RieszCaputoOperator {
 public:
  explicit RieszCaputoOperator(const FractionalOperatorSpec& spec);

  static RieszCaputoOperator with_weights(const FractionalOperatorSpec& spec,
                                          std::vector<double> left,
                                          std::vector<double> right);

  const FractionalOperatorSpec& spec() const noexcept { return spec_; }
  const StencilCoefficients& coefficients() const noexcept { return coeffs_; }
  std::span<const double> left_weights() const noexcept { return left_; }
  std::span<const double> right_weights() const noexcept { return right_; }

  /// Left Caputo derivative at X from f' on nodes X-ell .. X (m+1 values).
  double left_caputo(std::span<const double> fprime) const;
  /// Right Caputo derivative at X from f' on nodes X .. X+ell (m+1 values).
  double right_caputo(std::span<const double> fprime) const;

  /// RC derivative from f' on the 2m+1 nodes X-ell .. X+ell (centre at m).
  double derivative_from_fprime(std::span<const double> fprime) const;

  /// RC derivative from f itself, sampled on the 2m+3 nodes
  /// X-ell-h .. X+ell+h (centre at index m+1).  f' at every quadrature
  /// node is approximated with the given scheme.
  double derivative_from_samples(std::span<const double> f, InnerScheme scheme) const;

  /// Combined weights g_k, k = -m..m, such that
  /// RC = E A sum_k g_k f'(X + k h).  Index 0 of the result is k = -m.
  std::vector<double> combined_weights() const;

 private:
  RieszCaputoOperator(const FractionalOperatorSpec& spec, StencilCoefficients coeffs,
                      std::vector<double> left, std::vector<double> right);

  FractionalOperatorSpec spec_;
  StencilCoefficients coeffs_;
  std::vector<double> left_;
  std::vector<double> right_;
};

double left_caputo_from_fprime(const FractionalOperatorSpec& spec,
                               std::span<const double> fprime);
double right_caputo_from_fprime(const FractionalOperatorSpec& spec,
                                std::span<const double> fprime);
double rc_derivative_from_fprime(const FractionalOperatorSpec& spec,
                                 std::span<const double> fprime);
double rc_derivative_of_sampled_function(const FractionalOperatorSpec& spec,
                                         std::span<const double> f, InnerScheme scheme);

}  // namespace fracplast
