// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Each criterion also has a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fracplast/bvp_solver.hpp"
#include "fracplast/classical_reference.hpp"
#include "fracplast/config.hpp"
#include "fracplast/experiments.hpp"
#include "fracplast/frac_kernel.hpp"
#include "fracplast/kinematics.hpp"
#include "fracplast/plasticity.hpp"

using namespace fracplast;
namespace fs = std::filesystem;
namespace kin = fracplast::kinematics;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

FieldState final_state(double alpha, double ell_fraction, int m) {
  return run(baseline_config(alpha, ell_fraction, m).problem()).final_state();
}

FieldState classical_state(double ell_fraction, int m) {
  return classical_reference(baseline_config(1.0, ell_fraction, m).problem()).final_state();
}

double peak(const FieldState& s) {
  const auto e = s.eps_plastic();
  return *std::max_element(e.begin(), e.end());
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / *hi;
}

// ---------------------------------------------------------------------------

Outcome stencil_reproduction() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    double a = u(rng);
    while (a <= 0.0) a = u(rng);
    const double B = 1 - a * std::pow(2.0, 1 - a);
    const double C = std::pow(2.0, 2 - a) - 2;
    const double D = C;
    const FractionalOperatorSpec s(a, 0.1, 2);
    const std::vector<std::pair<Stencil, std::vector<double>>> cases{
        {equilibrium_stencil(s), {B, C - 2 * B, B - 2 * C + 2, C + D - 4, B - 2 * D + 2, D - 2 * B, B}},
        {strain_stencil(s, PositionClass::left_boundary), {-B, B - C, C - 2, 2 - D, D - B, B}},
        {strain_stencil(s, PositionClass::interior), {-B, -C, B - 2, C - D, 2 - B, D, B}},
        {strain_stencil(s, PositionClass::right_boundary), {-B, B - C, C - 2, 2 - D, D - B, B}}};
    for (const auto& [st, want] : cases) {
      if (st.bracket.size() != want.size()) return {false, "stencil length mismatch"};
      for (std::size_t k = 0; k < want.size(); ++k) {
        worst = std::max(worst, std::abs(st.bracket[k] - want[k]));
      }
    }
  }
  return {worst <= 1e-13, fmt("max deviation %.2e over 20 alphas", worst)};
}

Outcome classical_collapse() {
  double worst = 0.0;
  for (double ell : {0.4, 0.2, 0.04}) {
    const Problem p = baseline_config(1.0, ell, 2).problem();
    const auto a = run(p);
    const auto b = classical_reference(p);
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
      const auto& x = a.steps[k];
      const auto& y = b.steps[k];
      for (std::size_t i = 0; i < x.points.size(); ++i) {
        const int node = static_cast<int>(i);
        worst = std::max(worst, std::abs(x.u(node) - y.u(node)) / p.program.u_bar);
        worst = std::max(worst, std::abs(x.points[i].eps_plastic - y.points[i].eps_plastic) /
                                    (p.material.sigma_Y / p.material.E));
        worst = std::max(worst, std::abs(x.points[i].sigma - y.points[i].sigma) / p.material.sigma_Y);
      }
    }
  }
  return {worst <= 1e-10, fmt("max scaled deviation %.2e on U, eps_p, sigma", worst)};
}

Outcome classical_mesh_sensitivity() {
  const auto coarse = final_state(1.0, 0.4, 2);  // dx = 0.2 l
  const auto fine = final_state(1.0, 0.04, 2);   // dx = 0.02 l
  const double ratio = peak(fine) / peak(coarse);
  const auto e = coarse.eps_plastic();
  const auto plastic = std::count_if(e.begin(), e.end(), [](double v) { return v > kPlasticZoneThreshold; });
  const bool whole_bar = plastic == static_cast<long>(e.size());
  const bool ok = ratio >= 1.5 && ratio <= 2.5 && whole_bar;
  return {ok, fmt("peak ratio %.4f (want [1.5, 2.5])", ratio) + ", coarse plastic nodes " +
                  std::to_string(plastic) + "/" + std::to_string(e.size()) + " (want all)"};
}

Outcome regularization() {
  std::vector<double> cls;
  for (double ell : {0.4, 0.2, 0.04}) cls.push_back(peak(final_state(1.0, ell, 2)));
  const double classical_spread = spread(cls);
  bool ok = true;
  std::string detail = fmt("classical spread %.4f; fractional", classical_spread);
  for (double ell : {0.2, 0.1, 0.02}) {
    std::vector<double> v;
    for (int m : {2, 4, 10}) v.push_back(peak(final_state(0.95, ell, m)));
    const double s = spread(v);
    ok = ok && s < classical_spread;
    detail += fmt(" %.4f", s);
  }
  return {ok, detail};
}

Outcome length_scale_convergence() {
  std::vector<double> dist;
  for (double ell : {0.2, 0.1, 0.02}) {
    const int m = 2;
    const auto f = final_state(0.95, ell, m);
    const auto c = classical_state(ell, m);
    const double dx = ell / m;
    double sum = 0.0;
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      const double d = f.points[i].eps_plastic - c.points[i].eps_plastic;
      sum += d * d * dx;
    }
    dist.push_back(std::sqrt(sum));
  }
  const bool ok = dist[0] > dist[1] && dist[1] > dist[2];
  return {ok, fmt("L2 distances %.3e", dist[0]) + fmt(" > %.3e", dist[1]) + fmt(" > %.3e", dist[2])};
}

Outcome kernel_oracles() {
  const std::vector<double> alphas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  const std::vector<int> ms{2, 4, 10, 100};
  double constant = 0.0;
  double identity = 0.0;
  for (double a : alphas) {
    for (int m : ms) {
      const double ell = 0.1;
      const FractionalOperatorSpec s(a, ell, m);
      const std::vector<double> zeros(static_cast<std::size_t>(m + 1), 0.0);
      constant = std::max({constant, std::abs(left_caputo_from_fprime(s, zeros)),
                           std::abs(right_caputo_from_fprime(s, zeros))});
      const std::vector<double> c(static_cast<std::size_t>(2 * m + 3), 2.0);
      constant = std::max(constant, std::abs(rc_derivative_of_sampled_function(s, c, InnerScheme::central)));

      std::vector<double> f(static_cast<std::size_t>(2 * m + 3));
      for (int k = 0; k < 2 * m + 3; ++k) f[static_cast<std::size_t>(k)] = (k - m - 1) * s.step();
      identity = std::max(identity, std::abs(std::pow(ell, a - 1) *
                                                 rc_derivative_of_sampled_function(s, f, InnerScheme::central) -
                                             1.0));
    }
  }

  // Left Caputo over [a, t]: f(t) = t is reproduced at every h; the cubic
  // (t - a)^3 measures the observed order.
  const double a = 0.5;
  const double span = 0.8;
  double linear_err = 0.0;
  double min_order = 1e9;
  double prev = 0.0;
  for (int m : {8, 16, 32, 64, 128}) {
    const FractionalOperatorSpec s(a, span, m);
    const std::vector<double> ones(static_cast<std::size_t>(m + 1), 1.0);
    linear_err = std::max(linear_err, std::abs(left_caputo_from_fprime(s, ones) -
                                               std::pow(span, 1 - a) / std::tgamma(2 - a)));
    std::vector<double> fp(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) fp[static_cast<std::size_t>(j)] = 3 * std::pow(j * s.step(), 2);
    const double err = std::abs(left_caputo_from_fprime(s, fp) - 6 / std::tgamma(4 - a) * std::pow(span, 3 - a));
    if (prev > 0) min_order = std::min(min_order, std::log2(prev / err));
    prev = err;
  }
  const bool ok = constant == 0.0 && identity <= 1e-10 && linear_err <= 1e-12 && min_order >= 1.0;
  return {ok, fmt("constant %.1e", constant) + fmt(", identity %.2e", identity) +
                  fmt(", f=t error %.2e", linear_err) + fmt(", cubic order %.2f", min_order)};
}

kin::Matrix random_invertible(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  kin::Matrix M = kin::Matrix::Identity(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M(i, j) += u(rng);
  return M;
}

Outcome kinematics_identities() {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> alpha(0.05, 1.0);
  double rigid = 0.0;
  for (int i = 0; i < 10; ++i) {
    const FractionalOperatorSpec s(alpha(rng), 0.2, 2 + i % 5);
    rigid = std::max(rigid, kin::rigid_motion_check(kin::rotation2d(angle(rng)), s));
  }
  double objectivity = 0.0;
  double round_trip = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto t = kin::composite_tensors(random_invertible(rng), random_invertible(rng), random_invertible(rng));
    objectivity = std::max(objectivity, kin::objectivity_check(t, kin::rotation2d(angle(rng))).max());
    const auto s = kin::strain_measures(random_invertible(rng));
    round_trip = std::max(round_trip, s.pull_back_residual);
  }
  const bool ok = rigid <= 1e-10 && objectivity <= 1e-12 && round_trip <= 1e-12;
  return {ok, fmt("rigid %.2e", rigid) + fmt(", objectivity %.2e", objectivity) +
                  fmt(", round trip %.2e", round_trip)};
}

Outcome plasticity_kkt() {
  const MaterialParams mat{205e9, 1.2e9};
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> inc(-3e-3, 3e-3);
  std::uniform_int_distribution<int> len(1, 60);
  double worst = 0.0;
  bool equivariant = true;
  for (int h = 0; h < 1000; ++h) {
    PointState s, mirror;
    const int steps = len(rng);
    for (int k = 0; k < steps; ++k) {
      const double d = inc(rng);
      s = update_point(s, d, mat);
      mirror = update_point(mirror, -d, mat);
      const double f = yield_function(s.sigma, mat);
      worst = std::max({worst, -s.dgamma_last, f / mat.sigma_Y, std::abs(s.dgamma_last * f) / mat.sigma_Y});
      equivariant = equivariant && mirror.sigma == -s.sigma && mirror.eps_plastic == -s.eps_plastic;
    }
  }
  return {worst <= 1e-10 && equivariant,
          fmt("worst KKT violation %.2e", worst) + (equivariant ? ", sign equivariant" : ", NOT sign equivariant")};
}

Outcome preset_counts() {
  const fs::path root = fs::temp_directory_path() / ("fracplast_acceptance_" + std::to_string(std::random_device{}()));
  bool ok = true;
  std::string detail;
  for (auto [name, expected] : {std::pair{"fig-r2", 30}, std::pair{"fig-r3", 9}, std::pair{"fig-r4", 9},
                                std::pair{"fig-r5", 9}}) {
    const auto res = run_sweep(SweepSpec::preset(name), root / name);
    long dirs = 0;
    for (const auto& e : fs::directory_iterator(root / name)) dirs += e.is_directory();
    long rows = -1;
    std::ifstream in(root / name / "summary.csv");
    for (std::string line; std::getline(in, line);) ++rows;
    const bool all_ok = std::all_of(res.begin(), res.end(), [](const SweepPoint& p) { return p.status == "ok"; });
    ok = ok && dirs == expected && rows == expected && all_ok;
    detail += std::string(detail.empty() ? "" : ", ") + name + " " + std::to_string(dirs);
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  return {ok, detail + " runs"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "stencil reproduction (m = 2, 20 random alphas)", 1.0, stencil_reproduction},
      {2, "classical collapse: alpha = 1 run equals the classical reference", 10.0, classical_collapse},
      {3, "classical mesh sensitivity: peak ratio in [1.5, 2.5], coarse zone spans the bar", 10.0,
       classical_mesh_sensitivity},
      {4, "regularization: m-spread below the classical dx-spread", 60.0, regularization},
      {5, "length-scale convergence to the classical profile", 60.0, length_scale_convergence},
      {6, "fractional kernel oracles", 5.0, kernel_oracles},
      {7, "kinematics identities", 5.0, kinematics_identities},
      {8, "plasticity KKT suite (1000 histories)", 5.0, plasticity_kkt},
      {9, "sweep preset counts", 300.0, preset_counts},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.passed && in_time;
    failures += !pass;
    std::printf("%s  criterion %d: %s -- %s [%.3f s / %.0f s budget%s]\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", OVER BUDGET");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
