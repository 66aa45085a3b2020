#include "fracplast/classical_reference.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fracplast {

namespace {

// Thomas algorithm for (1, -2, 1) / dx^2 with right-hand side r.
std::vector<double> solve_laplacian(const std::vector<double>& r, double dx) {
  const std::size_t n = r.size();
  const double off = 1.0 / (dx * dx);
  const double diag = -2.0 / (dx * dx);
  std::vector<double> c(n, 0.0);
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = diag - (i > 0 ? off * c[i - 1] : 0.0);
    if (denom == 0.0) {
      throw SolverError("classical reference: zero pivot at unknown " + std::to_string(i),
                        static_cast<std::ptrdiff_t>(i));
    }
    c[i] = off / denom;
    d[i] = (r[i] - (i > 0 ? off * d[i - 1] : 0.0)) / denom;
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) x[i] = d[i] - (i + 1 < n ? c[i] * x[i + 1] : 0.0);
  return x;
}

}  // namespace

History classical_reference(const Problem& problem) {
  problem.material.validate();
  const FractionalOperatorSpec spec(1.0, problem.spec.ell(), problem.spec.m());
  const Grid1D grid = Grid1D::make(spec, problem.length);
  const auto& prog = problem.program;
  if (static_cast<int>(prog.body_force.size()) != grid.n_nodes()) {
    throw ConfigError(ConfigError::Kind::constraint,
                      "body force must be given at every physical node");
  }

  const int n = grid.n_intervals;
  const int m = grid.m;
  const double dx = grid.dx;
  const double steps = prog.n_steps;
  const double du_left = prog.u_left() / steps;
  const double du_right = prog.u_right() / steps;

  History history{grid, {}};
  FieldState state;
  state.m = m;
  state.U_ext.assign(static_cast<std::size_t>(grid.n_extended()), 0.0);
  state.points.assign(static_cast<std::size_t>(n + 1), PointState{});

  for (int k = 0; k < prog.n_steps; ++k) {
    std::vector<double> r(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
      r[static_cast<std::size_t>(i - 1)] = -prog.body_force[static_cast<std::size_t>(i)] / steps /
                                           problem.material.E;
    }
    r.front() -= du_left / (dx * dx);
    r.back() -= du_right / (dx * dx);
    const auto interior = solve_laplacian(r, dx);

    std::vector<double> du(static_cast<std::size_t>(n + 1));
    du.front() = du_left;
    du.back() = du_right;
    for (int i = 1; i < n; ++i) du[static_cast<std::size_t>(i)] = interior[static_cast<std::size_t>(i - 1)];

    for (int node = -m; node <= n + m; ++node) {
      const double v = node <= 0 ? du_left : (node >= n ? du_right : du[static_cast<std::size_t>(node)]);
      state.U_ext[static_cast<std::size_t>(node + m)] += v;
    }

    for (int i = 0; i <= n; ++i) {
      double d_eps;
      if (i == 0) {
        d_eps = (du[1] - du[0]) / dx;
      } else if (i == n) {
        d_eps = (du[static_cast<std::size_t>(n)] - du[static_cast<std::size_t>(n - 1)]) / dx;
      } else {
        d_eps = (du[static_cast<std::size_t>(i + 1)] - du[static_cast<std::size_t>(i - 1)]) / (2.0 * dx);
      }
      auto& p = state.points[static_cast<std::size_t>(i)];
      p = update_point(p, d_eps, problem.material);
    }
    history.steps.push_back(state);
  }
  return history;
}

}  // namespace fracplast
