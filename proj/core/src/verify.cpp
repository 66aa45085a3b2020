#include "fracplast/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "fracplast/bvp_solver.hpp"
#include "fracplast/classical_reference.hpp"
#include "fracplast/frac_kernel.hpp"
#include "fracplast/kinematics.hpp"
#include "fracplast/plasticity.hpp"

namespace fracplast {

namespace {

namespace kin = kinematics;

RieszCaputoOperator make_operator(const FractionalOperatorSpec& spec, double perturb) {
  if (perturb == 0.0) return RieszCaputoOperator(spec);
  auto left = caputo_left_weights(spec);
  auto right = caputo_right_weights(spec);
  for (auto& w : left) w *= 1.0 + perturb;
  for (auto& w : right) w *= 1.0 + perturb;
  return RieszCaputoOperator::with_weights(spec, std::move(left), std::move(right));
}

CheckResult make(std::string name, double value, double tol) {
  return {std::move(name), value, tol, std::isfinite(value) && value <= tol};
}

const std::vector<double> kAlphas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
const std::vector<int> kMs{2, 4, 10, 100};

CheckResult check_constant_annihilation(double perturb) {
  double worst = 0.0;
  for (double a : kAlphas) {
    for (int m : kMs) {
      const auto op = make_operator(FractionalOperatorSpec(a, 0.1, m), perturb);
      const std::vector<double> f(static_cast<std::size_t>(2 * m + 3), 3.7);
      worst = std::max(worst, std::abs(op.derivative_from_samples(f, InnerScheme::central)));
    }
  }
  return make("kernel: RC of constant = 0", worst, 0.0);
}

CheckResult check_affine_exactness(double perturb) {
  double worst = 0.0;
  for (double a : kAlphas) {
    for (int m : kMs) {
      const double ell = 0.2;
      const auto op = make_operator(FractionalOperatorSpec(a, ell, m), perturb);
      std::vector<double> f(static_cast<std::size_t>(2 * m + 3));
      const double h = ell / m;
      for (int k = 0; k < 2 * m + 3; ++k) f[static_cast<std::size_t>(k)] = 0.4 + 2.5 * (k - m - 1) * h;
      const double g = std::pow(ell, a - 1.0) * op.derivative_from_samples(f, InnerScheme::central);
      worst = std::max(worst, std::abs(g - 2.5) / 2.5);
    }
  }
  return make("kernel: ell^(a-1) RC(c t + d) = c", worst, 1e-10);
}

CheckResult check_classical_collapse(double perturb) {
  double worst = 0.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int m : kMs) {
    const double ell = 0.3;
    const auto op = make_operator(FractionalOperatorSpec(1.0, ell, m), perturb);
    std::vector<double> f(static_cast<std::size_t>(2 * m + 3));
    for (auto& v : f) v = u(rng);
    const double h = ell / m;
    const double central = (f[static_cast<std::size_t>(m + 2)] - f[static_cast<std::size_t>(m)]) / (2 * h);
    const double rc = op.derivative_from_samples(f, InnerScheme::central);
    worst = std::max(worst, std::abs(rc - central) / std::max(1.0, std::abs(central)));
  }
  return make("kernel: alpha=1 equals central difference", worst, 1e-12);
}

// Equilibrium and strain brackets for m = 2 against the closed forms
// B = 1 - a 2^(1-a), C = D = 2^(2-a) - 2.
CheckResult check_stencils(double perturb) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double a = std::max(1e-6, u(rng));
    const double B = 1.0 - a * std::pow(2.0, 1.0 - a);
    const double C = std::pow(2.0, 2.0 - a) - 2.0;
    const double D = C;
    const auto op = make_operator(FractionalOperatorSpec(a, 0.1, 2), perturb);

    const std::vector<double> eq{B, C - 2 * B, B - 2 * C + 2, C + D - 4, B - 2 * D + 2, D - 2 * B, B};
    const std::vector<double> fwd{-B, B - C, C - 2, 2 - D, D - B, B};
    const std::vector<double> cen{-B, -C, B - 2, C - D, 2 - B, D, B};
    const std::vector<double> bwd{-B, B - C, C - 2, 2 - D, D - B, B};

    auto compare = [&](const Stencil& st, const std::vector<double>& want) {
      for (std::size_t k = 0; k < want.size(); ++k) {
        worst = std::max(worst, std::abs(st.bracket.at(k) - want[k]));
      }
    };
    compare(equilibrium_stencil(op), eq);
    compare(strain_stencil(op, PositionClass::left_boundary), fwd);
    compare(strain_stencil(op, PositionClass::interior), cen);
    compare(strain_stencil(op, PositionClass::right_boundary), bwd);
  }
  return make("stencils: m=2 brackets match closed forms", worst, 1e-13);
}

CheckResult check_mirror_weights(double perturb) {
  double worst = 0.0;
  for (double a : kAlphas) {
    for (int m : kMs) {
      const auto op = make_operator(FractionalOperatorSpec(a, 0.1, m), perturb);
      const auto L = op.left_weights();
      const auto R = op.right_weights();
      for (int j = 0; j <= m; ++j) {
        worst = std::max(worst, std::abs(L[static_cast<std::size_t>(j)] - R[static_cast<std::size_t>(m - j)]));
      }
    }
  }
  return make("kernel: left/right weight mirror symmetry", worst, 0.0);
}

CheckResult check_rigid_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> alpha(0.05, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const FractionalOperatorSpec spec(alpha(rng), 0.15, 2 + i);
    worst = std::max(worst, kin::rigid_motion_check(kin::rotation2d(angle(rng)), spec));
  }
  return make("kinematics: rotation with ell = L/2 gives R", worst, 1e-10);
}

CheckResult check_length_scale_necessity() {
  double worst = 0.0;
  for (double a : {0.2, 0.5, 0.8}) {
    const FractionalOperatorSpec spec(a, 0.2, 4);
    const double dev = kin::rigid_motion_check(kin::Matrix::Identity(2, 2), spec, spec.ell());
    worst = std::max(worst, std::abs(dev - std::abs(std::pow(2.0, a - 1.0) - 1.0)));
  }
  return make("kinematics: ell = L deviation |2^(a-1) - 1|", worst, 1e-10);
}

kin::Matrix random_invertible(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  kin::Matrix M = kin::Matrix::Identity(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M(i, j) += u(rng);
  return M;
}

CheckResult check_objectivity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto t = kin::composite_tensors(random_invertible(rng), random_invertible(rng),
                                          random_invertible(rng));
    worst = std::max(worst, kin::objectivity_check(t, kin::rotation2d(angle(rng))).max());
  }
  return make("kinematics: objectivity residuals", worst, 1e-12);
}

CheckResult check_strain_round_trip(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto s = kin::strain_measures(random_invertible(rng));
    worst = std::max({worst, s.pull_back_residual, s.push_forward_residual});
  }
  return make("kinematics: E = F^T e F round trip", worst, 1e-12);
}

CheckResult check_alpha_one_composites() {
  // phi(X) = (X1 + 0.1 X1^2 + 0.05 X2, X2 + 0.02 X1 X2)
  kin::SampledMotion motion;
  motion.dimension = 2;
  motion.phi = [](const kin::Vector& X) {
    kin::Vector x(2);
    x << X[0] + 0.1 * X[0] * X[0] + 0.05 * X[1], X[1] + 0.02 * X[0] * X[1];
    return x;
  };
  const FractionalOperatorSpec spec(1.0, 1e-3, 2);
  kin::Vector X(2);
  X << 0.3, -0.2;
  const kin::Matrix FX = kin::fractional_deformation_gradient(motion, X, spec);
  const kin::Matrix F = kin::classical_deformation_gradient(motion, X, spec.step());
  const auto t = kin::composite_tensors(FX, F.inverse(), F);
  const kin::Matrix I = kin::Matrix::Identity(2, 2);
  const double dev = std::max({(FX - F).cwiseAbs().maxCoeff(), (t.F_alpha - F).cwiseAbs().maxCoeff(),
                               (t.F_alpha_x - I).cwiseAbs().maxCoeff(),
                               (t.F_alpha_X - I).cwiseAbs().maxCoeff()});
  return make("kinematics: alpha=1 collapse to F, I, i", dev, 1e-12);
}

CheckResult check_kkt(std::mt19937_64& rng) {
  const MaterialParams mat{205e9, 1.2e9};
  std::uniform_real_distribution<double> inc(-2e-3, 2e-3);
  double worst = 0.0;
  for (int h = 0; h < 200; ++h) {
    PointState s;
    for (int k = 0; k < 30; ++k) {
      s = update_point(s, inc(rng), mat);
      const double f = yield_function(s.sigma, mat);
      worst = std::max({worst, -s.dgamma_last, f / mat.sigma_Y,
                        std::abs(s.dgamma_last * f) / mat.sigma_Y});
    }
  }
  return make("plasticity: KKT conditions", worst, 1e-10);
}

CheckResult check_classical_solver() {
  LoadProgram prog;
  prog.u_bar = 0.003;
  prog.n_steps = 10;
  const FractionalOperatorSpec spec(1.0, 0.1, 2);
  const Grid1D grid = Grid1D::make(spec, 1.0);
  prog.body_force.assign(static_cast<std::size_t>(grid.n_nodes()), 615e6);
  const Problem p{spec, 1.0, MaterialParams{205e9, 1.2e9}, prog};
  const auto a = run(p).final_state();
  const auto b = classical_reference(p).final_state();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    worst = std::max(worst, std::abs(a.points[i].eps_plastic - b.points[i].eps_plastic) / 1e-3);
    worst = std::max(worst, std::abs(a.points[i].sigma - b.points[i].sigma) / 1.2e9);
  }
  return make("solver: alpha=1 run equals classical reference", worst, 1e-10);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  const double p = options.perturb_weights;
  std::vector<CheckResult> r;
  r.push_back(check_constant_annihilation(p));
  r.push_back(check_affine_exactness(p));
  r.push_back(check_classical_collapse(p));
  r.push_back(check_mirror_weights(p));
  r.push_back(check_stencils(p));
  r.push_back(check_rigid_rotation(rng));
  r.push_back(check_length_scale_necessity());
  r.push_back(check_objectivity(rng));
  r.push_back(check_strain_round_trip(rng));
  r.push_back(check_alpha_one_composites());
  r.push_back(check_kkt(rng));
  r.push_back(check_classical_solver());
  return r;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string out = fmt::format("{:<52} {:>12} {:>10}  {}\n", "check", "deviation", "tolerance", "result");
  for (const auto& c : results) {
    out += fmt::format("{:<52} {:>12.3e} {:>10.1e}  {}\n", c.name, c.value, c.tolerance,
                       c.passed ? "PASS" : "FAIL");
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace fracplast
