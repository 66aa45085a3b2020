#include "fracplast/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracplast::kinematics {

namespace {

constexpr double kSingularTol = 1e-12;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void require_invertible(const Matrix& m, const char* name) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > 2) {
    throw std::invalid_argument(std::string(name) + " must be a 1x1 or 2x2 matrix");
  }
  const double scale = std::pow(std::max(m.norm(), 1e-300), static_cast<double>(m.rows()));
  if (!m.allFinite() || std::abs(m.determinant()) <= kSingularTol * scale) {
    throw std::domain_error(std::string(name) + " is singular");
  }
}

// Relative max-norm residual.
double residual(const Matrix& got, const Matrix& want) {
  return max_abs(got - want) / std::max(1.0, max_abs(want));
}

Matrix gradient_of(const MotionMap& map, const std::optional<Box>& domain, int dim,
                   const Vector& point, const FractionalOperatorSpec& spec,
                   std::optional<double> half_interval, InnerScheme scheme) {
  if (point.size() != dim) {
    throw std::invalid_argument("evaluation point has wrong dimension");
  }
  const double half = half_interval.value_or(spec.ell());
  const FractionalOperatorSpec quad(spec.alpha(), half, spec.m());
  const RieszCaputoOperator op(quad);
  const double h = quad.step();
  const int m = spec.m();
  const double scale = std::pow(spec.ell(), spec.alpha() - 1.0);

  Matrix G(dim, dim);
  std::vector<Vector> values(2 * m + 3);
  std::vector<double> comp(2 * m + 3);
  for (int A = 0; A < dim; ++A) {
    for (int k = -(m + 1); k <= m + 1; ++k) {
      Vector p = point;
      p[A] += k * h;
      if (domain && !domain->contains(p)) {
        throw std::domain_error("fractional stencil leaves the sampled domain along axis " +
                                std::to_string(A));
      }
      values[k + m + 1] = map(p);
    }
    for (int a = 0; a < dim; ++a) {
      for (std::size_t s = 0; s < values.size(); ++s) comp[s] = values[s][a];
      G(a, A) = scale * op.derivative_from_samples(comp, scheme);
    }
  }
  return G;
}

}  // namespace

bool Box::contains(const Vector& p) const {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] < lower[i] || p[i] > upper[i]) return false;
  }
  return true;
}

SampledMotion SampledMotion::affine(const Matrix& M, const Vector& c) {
  SampledMotion motion;
  motion.dimension = static_cast<int>(M.rows());
  motion.phi = [M, c](const Vector& X) -> Vector { return M * X + c; };
  if (std::abs(M.determinant()) > kSingularTol) {
    const Matrix Minv = M.inverse();
    motion.varphi = [Minv, c](const Vector& x) -> Vector { return Minv * (x - c); };
  }
  return motion;
}

double ObjectivityReport::max() const {
  return std::max({F, F_tilde_X, F_tilde_x, F_alpha, F_alpha_X, F_alpha_x});
}

Matrix fractional_deformation_gradient(const SampledMotion& motion, const Vector& X,
                                       const FractionalOperatorSpec& spec,
                                       std::optional<double> half_interval, InnerScheme scheme) {
  if (!motion.phi) throw std::invalid_argument("motion has no forward map");
  return gradient_of(motion.phi, motion.material_domain, motion.dimension, X, spec,
                     half_interval, scheme);
}

Matrix spatial_fractional_deformation_gradient(const SampledMotion& motion, const Vector& x,
                                               const FractionalOperatorSpec& spec,
                                               std::optional<double> half_interval,
                                               InnerScheme scheme) {
  if (!motion.varphi) throw std::invalid_argument("motion has no inverse map");
  return gradient_of(motion.varphi, motion.spatial_domain, motion.dimension, x, spec,
                     half_interval, scheme);
}

Matrix classical_deformation_gradient(const SampledMotion& motion, const Vector& X, double h) {
  const int d = motion.dimension;
  Matrix G(d, d);
  for (int A = 0; A < d; ++A) {
    Vector p = X;
    Vector q = X;
    p[A] += h;
    q[A] -= h;
    G.col(A) = (motion.phi(p) - motion.phi(q)) / (2.0 * h);
  }
  return G;
}

DeformationTensors composite_tensors(const Matrix& F_tilde_X, const Matrix& F_tilde_x,
                                     const Matrix& F) {
  require_invertible(F, "F");
  require_invertible(F_tilde_X, "F_tilde_X");
  require_invertible(F_tilde_x, "F_tilde_x");

  DeformationTensors t;
  t.F = F;
  t.F_tilde_X = F_tilde_X;
  t.F_tilde_x = F_tilde_x;
  const Matrix Finv = F.inverse();
  t.F_alpha = F_tilde_X * Finv * F_tilde_x.inverse();
  t.F_alpha_x = F_tilde_x * F;
  t.F_alpha_X = F_tilde_X * Finv;
  t.J = F.determinant();
  t.J_tilde_X = F_tilde_X.determinant();
  t.J_tilde_x = F_tilde_x.determinant();
  t.J_alpha = t.F_alpha.determinant();
  t.J_alpha_x = t.F_alpha_x.determinant();
  t.J_alpha_X = t.F_alpha_X.determinant();
  return t;
}

double rigid_motion_check(const Matrix& R, const FractionalOperatorSpec& spec,
                          std::optional<double> interval_length) {
  const auto motion = SampledMotion::affine(R, Vector::Zero(R.rows()));
  Vector X(R.rows());
  X.setConstant(0.25);
  const double half = interval_length ? *interval_length / 2.0 : spec.ell();
  const Matrix FX = fractional_deformation_gradient(motion, X, spec, half);
  return max_abs(FX - R);
}

ObjectivityReport objectivity_check(const DeformationTensors& tensors, const Matrix& Q) {
  const auto d = tensors.F.rows();
  if (Q.rows() != d || Q.cols() != d) {
    throw std::invalid_argument("Q has wrong dimension");
  }
  const Matrix I = Matrix::Identity(d, d);
  if (max_abs(Q.transpose() * Q - I) > 1e-12 || Q.determinant() <= 0.0) {
    throw std::invalid_argument("Q must be proper orthogonal");
  }

  // Superposed rigid motion acts on the primary gradients; the composites
  // are recomputed from the starred primaries.
  const Matrix Qinv = Q.inverse();
  const Matrix F_star = Q * tensors.F;
  const Matrix FX_star = Q * tensors.F_tilde_X;
  const Matrix Fx_star = tensors.F_tilde_x * Qinv;
  const auto star = composite_tensors(FX_star, Fx_star, F_star);

  ObjectivityReport r;
  r.F = residual(star.F, Q * tensors.F);
  r.F_tilde_X = residual(star.F_tilde_X, Q * tensors.F_tilde_X);
  r.F_tilde_x = residual(star.F_tilde_x, tensors.F_tilde_x * Q.transpose());
  r.F_alpha = residual(star.F_alpha, Q * tensors.F_alpha);
  r.F_alpha_X = residual(star.F_alpha_X, Q * tensors.F_alpha_X * Q.transpose());
  r.F_alpha_x = residual(star.F_alpha_x, tensors.F_alpha_x);
  return r;
}

StrainSet strain_measures(const Matrix& F) {
  require_invertible(F, "F_diamond");
  const auto d = F.rows();
  const Matrix I = Matrix::Identity(d, d);
  const Matrix Finv = F.inverse();

  StrainSet s;
  s.C = F.transpose() * F;
  s.c = Finv.transpose() * Finv;
  s.E = 0.5 * (s.C - I);
  s.e = 0.5 * (I - s.c);
  s.eps_inf = 0.5 * (F + F.transpose()) - I;
  s.pull_back_residual = residual(F.transpose() * s.e * F, s.E);
  s.push_forward_residual = residual(Finv.transpose() * s.E * Finv, s.e);
  return s;
}

ElementMaps volume_surface_maps(const Matrix& F, double dV, const Vector& dS) {
  require_invertible(F, "F_diamond");
  const double J = F.determinant();
  return {J * dV, J * F.inverse().transpose() * dS};
}

Matrix infinitesimal_fractional_strain(const SampledMotion& displacement, const Vector& X,
                                       const FractionalOperatorSpec& spec, InnerScheme scheme) {
  const Matrix G = fractional_deformation_gradient(displacement, X, spec, std::nullopt, scheme);
  return 0.5 * (G + G.transpose());
}

Matrix rotation2d(double theta) {
  Matrix R(2, 2);
  R << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return R;
}

}  // namespace fracplast::kinematics
