#pragma once

// 1D rate-independent perfect plasticity with radial return.
//
// Yield function f = |sigma| - sigma_Y.  A plastic step projects the trial
// stress back onto the yield surface with dgamma = f_trial / E.

#include <limits>

namespace fracplast {

struct MaterialParams {
  double E = 205e9;        ///< Young's modulus [Pa]
  double sigma_Y = 1.2e9;  ///< flow stress [Pa]; +inf disables plasticity

  /// Throws std::domain_error unless E > 0 and sigma_Y > 0.
  void validate() const;

  static MaterialParams elastic(double E) {
    return {E, std::numeric_limits<double>::infinity()};
  }
};

struct PointState {
  double eps_total = 0.0;
  double eps_plastic = 0.0;
  double sigma = 0.0;
  double dgamma_last = 0.0;

  double eps_elastic() const noexcept { return eps_total - eps_plastic; }
};

struct TrialState {
  double sigma_trial = 0.0;
  double f_trial = 0.0;
};

double yield_function(double sigma, const MaterialParams& params) noexcept;

TrialState elastic_trial(const PointState& state, double d_eps, const MaterialParams& params);

/// Plastic corrector.  `state` is the converged state of the previous step;
/// `d_eps` the strain increment that produced the trial.  Throws
/// std::logic_error when f_trial <= 0.
PointState return_map(const TrialState& trial, const PointState& state, double d_eps,
                      const MaterialParams& params);

PointState update_point(const PointState& state, double d_eps, const MaterialParams& params);

}  // namespace fracplast
