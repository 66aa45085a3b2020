#include "fracplast/frac_kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracplast {

namespace {

void require_size(std::span<const double> v, std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " samples, got " + std::to_string(v.size()));
  }
}

// Three-term power weight (k+1)^p - 2 k^p + (k-1)^p.
double middle_weight(int k, double p) {
  return std::pow(k + 1.0, p) - 2.0 * std::pow(static_cast<double>(k), p) +
         std::pow(k - 1.0, p);
}

}  // namespace

FractionalOperatorSpec::FractionalOperatorSpec(double alpha, double ell, int m)
    : alpha_(alpha), ell_(ell), m_(m) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("alpha must lie in (0,1], got " + std::to_string(alpha));
  }
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw std::domain_error("length scale ell must be positive and finite");
  }
  if (m < 2) {
    throw std::domain_error("quadrature resolution m must be >= 2, got " + std::to_string(m));
  }
}

StencilCoefficients stencil_coefficients(const FractionalOperatorSpec& spec) {
  const double alpha = spec.alpha();
  const int m = spec.m();
  const double p = 2.0 - alpha;  // n - alpha + 1 with n = 1

  StencilCoefficients c;
  c.A = std::pow(spec.step(), 1.0 - alpha) / std::tgamma(3.0 - alpha);
  c.B = std::pow(m - 1.0, p) - (m - 2.0 + alpha) * std::pow(static_cast<double>(m), 1.0 - alpha);
  c.C.resize(m - 1);
  c.D.resize(m - 1);
  for (int j = 1; j < m; ++j) {
    c.C[j - 1] = middle_weight(m - j, p);
    c.D[j - 1] = middle_weight(j, p);
  }
  c.E = 0.5 * std::tgamma(2.0 - alpha) / std::tgamma(2.0);
  c.F = std::pow(spec.ell(), alpha - 1.0) * c.E * c.A;
  return c;
}

std::vector<double> caputo_left_weights(const FractionalOperatorSpec& spec) {
  const auto c = stencil_coefficients(spec);
  std::vector<double> w;
  w.reserve(spec.m() + 1);
  w.push_back(c.B);
  w.insert(w.end(), c.C.begin(), c.C.end());
  w.push_back(1.0);
  return w;
}

std::vector<double> caputo_right_weights(const FractionalOperatorSpec& spec) {
  const auto c = stencil_coefficients(spec);
  std::vector<double> v;
  v.reserve(spec.m() + 1);
  v.push_back(1.0);
  v.insert(v.end(), c.D.begin(), c.D.end());
  v.push_back(c.B);
  return v;
}

RieszCaputoOperator::RieszCaputoOperator(const FractionalOperatorSpec& spec)
    : RieszCaputoOperator(spec, stencil_coefficients(spec), caputo_left_weights(spec),
                          caputo_right_weights(spec)) {}

RieszCaputoOperator::RieszCaputoOperator(const FractionalOperatorSpec& spec,
                                         StencilCoefficients coeffs, std::vector<double> left,
                                         std::vector<double> right)
    : spec_(spec), coeffs_(std::move(coeffs)), left_(std::move(left)), right_(std::move(right)) {
  const auto expected = static_cast<std::size_t>(spec_.m() + 1);
  require_size(left_, expected, "left weights");
  require_size(right_, expected, "right weights");
}

RieszCaputoOperator RieszCaputoOperator::with_weights(const FractionalOperatorSpec& spec,
                                                      std::vector<double> left,
                                                      std::vector<double> right) {
  return RieszCaputoOperator(spec, stencil_coefficients(spec), std::move(left), std::move(right));
}

double RieszCaputoOperator::left_caputo(std::span<const double> fprime) const {
  require_size(fprime, left_.size(), "left_caputo");
  double sum = 0.0;
  for (std::size_t j = 0; j < left_.size(); ++j) sum += left_[j] * fprime[j];
  return coeffs_.A * sum;
}

double RieszCaputoOperator::right_caputo(std::span<const double> fprime) const {
  require_size(fprime, right_.size(), "right_caputo");
  double sum = 0.0;
  for (std::size_t j = 0; j < right_.size(); ++j) sum += right_[j] * fprime[j];
  return -coeffs_.A * sum;
}

double RieszCaputoOperator::derivative_from_fprime(std::span<const double> fprime) const {
  const auto m = static_cast<std::size_t>(spec_.m());
  require_size(fprime, 2 * m + 1, "rc_derivative_from_fprime");
  const double left = left_caputo(fprime.subspan(0, m + 1));
  const double right = right_caputo(fprime.subspan(m, m + 1));
  return coeffs_.E * (left - right);
}

double RieszCaputoOperator::derivative_from_samples(std::span<const double> f,
                                                    InnerScheme scheme) const {
  const auto m = static_cast<std::size_t>(spec_.m());
  require_size(f, 2 * m + 3, "rc_derivative_of_sampled_function");
  const double h = spec_.step();

  // Quadrature node k (0..2m) sits at sample index k+1.
  std::vector<double> fprime(2 * m + 1);
  for (std::size_t k = 0; k < fprime.size(); ++k) {
    const std::size_t s = k + 1;
    switch (scheme) {
      case InnerScheme::forward:
        fprime[k] = (f[s + 1] - f[s]) / h;
        break;
      case InnerScheme::central:
        fprime[k] = (f[s + 1] - f[s - 1]) / (2.0 * h);
        break;
      case InnerScheme::backward:
        fprime[k] = (f[s] - f[s - 1]) / h;
        break;
    }
  }
  return derivative_from_fprime(fprime);
}

std::vector<double> RieszCaputoOperator::combined_weights() const {
  const auto m = static_cast<std::size_t>(spec_.m());
  std::vector<double> g(2 * m + 1, 0.0);
  for (std::size_t j = 0; j <= m; ++j) {
    g[j] += left_[j];
    g[m + j] += right_[j];
  }
  return g;
}

double left_caputo_from_fprime(const FractionalOperatorSpec& spec,
                               std::span<const double> fprime) {
  return RieszCaputoOperator(spec).left_caputo(fprime);
}

double right_caputo_from_fprime(const FractionalOperatorSpec& spec,
                                std::span<const double> fprime) {
  return RieszCaputoOperator(spec).right_caputo(fprime);
}

double rc_derivative_from_fprime(const FractionalOperatorSpec& spec,
                                 std::span<const double> fprime) {
  return RieszCaputoOperator(spec).derivative_from_fprime(fprime);
}

double rc_derivative_of_sampled_function(const FractionalOperatorSpec& spec,
                                         std::span<const double> f, InnerScheme scheme) {
  return RieszCaputoOperator(spec).derivative_from_samples(f, scheme);
}

}  // namespace fracplast
