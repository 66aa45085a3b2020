#include "fracplast/plasticity.hpp"

#include <cmath>
#include <stdexcept>

namespace fracplast {

void MaterialParams::validate() const {
  if (!(E > 0.0) || !std::isfinite(E)) {
    throw std::domain_error("Young's modulus E must be positive and finite");
  }
  if (!(sigma_Y > 0.0)) {
    throw std::domain_error("flow stress sigma_Y must be positive");
  }
}

double yield_function(double sigma, const MaterialParams& params) noexcept {
  return std::abs(sigma) - params.sigma_Y;
}

TrialState elastic_trial(const PointState& state, double d_eps, const MaterialParams& params) {
  TrialState t;
  t.sigma_trial = params.E * (state.eps_total + d_eps - state.eps_plastic);
  t.f_trial = yield_function(t.sigma_trial, params);
  return t;
}

PointState return_map(const TrialState& trial, const PointState& state, double d_eps,
                      const MaterialParams& params) {
  if (!(trial.f_trial > 0.0)) {
    throw std::logic_error("return_map called on an elastic trial state");
  }
  const double sign = trial.sigma_trial >= 0.0 ? 1.0 : -1.0;
  const double dgamma = trial.f_trial / params.E;

  PointState next;
  next.eps_total = state.eps_total + d_eps;
  next.dgamma_last = dgamma;
  next.sigma = trial.sigma_trial - dgamma * params.E * sign;
  next.eps_plastic = state.eps_plastic + dgamma * sign;
  return next;
}

PointState update_point(const PointState& state, double d_eps, const MaterialParams& params) {
  const TrialState trial = elastic_trial(state, d_eps, params);
  if (trial.f_trial <= 0.0) {
    PointState next = state;
    next.eps_total = state.eps_total + d_eps;
    next.sigma = trial.sigma_trial;
    next.dgamma_last = 0.0;
    return next;
  }
  return return_map(trial, state, d_eps, params);
}

}  // namespace fracplast
