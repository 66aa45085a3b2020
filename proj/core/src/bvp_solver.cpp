#include "fracplast/bvp_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace fracplast {

double BodyForceProfile::at(double x, double length) const {
  switch (kind) {
    case Kind::uniform:
      return magnitude;
    case Kind::central_segment: {
      const double half = 0.5 * fraction * length;
      return std::abs(x - 0.5 * length) <= half * (1.0 + 1e-12) ? magnitude : 0.0;
    }
    case Kind::table: {
      if (table.empty()) return 0.0;
      const double s = x / length;
      if (s <= table.front().first) return table.front().second;
      if (s >= table.back().first) return table.back().second;
      const auto hi = std::upper_bound(table.begin(), table.end(), s,
                                       [](double v, const auto& p) { return v < p.first; });
      const auto lo = hi - 1;
      const double t = (s - lo->first) / (hi->first - lo->first);
      return lo->second + t * (hi->second - lo->second);
    }
  }
  return 0.0;
}

Grid1D Grid1D::make(const FractionalOperatorSpec& spec, double length) {
  if (!(length > 0.0)) {
    throw ConfigError(ConfigError::Kind::constraint, "bar length l must be positive");
  }
  if (spec.ell() > length * (1.0 + 1e-12)) {
    throw ConfigError(ConfigError::Kind::constraint,
                      "length scale ell must not exceed the bar length l");
  }
  const double dx = spec.step();
  const double ratio = length / dx;
  const double n = std::round(ratio);
  if (std::abs(ratio - n) > 1e-9 * ratio || n < 2) {
    throw ConfigError(ConfigError::Kind::constraint,
                      "grid constraint dx = ell/m must divide l into an integer number (>= 2) "
                      "of intervals; l/(ell/m) = " + std::to_string(ratio));
  }
  Grid1D g;
  g.length = length;
  g.n_intervals = static_cast<int>(n);
  g.dx = length / n;
  g.m = spec.m();
  return g;
}

double LoadProgram::u_left() const noexcept {
  return ends == EndConvention::outward ? -u_bar : u_bar;
}

double LoadProgram::u_right() const noexcept { return u_bar; }

double Stencil::weight(int offset) const noexcept {
  const int k = offset - first_offset;
  if (k < 0 || k >= static_cast<int>(bracket.size())) return 0.0;
  return bracket[static_cast<std::size_t>(k)];
}

double Stencil::coefficient(int offset, double dx) const {
  return prefactor / std::pow(dx, power) * weight(offset);
}

namespace {

// Gradient bracket with forward inner differences over offsets -m..m+1:
// s_o = g_{o-1} - g_o.
std::vector<double> forward_bracket(const std::vector<double>& g, int m) {
  std::vector<double> s(2 * m + 2, 0.0);
  auto gat = [&](int k) { return (k < -m || k > m) ? 0.0 : g[static_cast<std::size_t>(k + m)]; };
  for (int o = -m; o <= m + 1; ++o) s[static_cast<std::size_t>(o + m)] = gat(o - 1) - gat(o);
  return s;
}

}  // namespace

Stencil equilibrium_stencil(const RieszCaputoOperator& op) {
  const int m = op.spec().m();
  const auto s = forward_bracket(op.combined_weights(), m);
  auto sat = [&](int o) {
    return (o < -m || o > m + 1) ? 0.0 : s[static_cast<std::size_t>(o + m)];
  };
  Stencil st;
  st.first_offset = -(m + 1);
  st.bracket.resize(2 * m + 3);
  // Grad|_i - Grad|_{i-1}: coefficient on U_{i+o} is s_o - s_{o+1}.
  for (int o = -(m + 1); o <= m + 1; ++o) {
    st.bracket[static_cast<std::size_t>(o + m + 1)] = sat(o) - sat(o + 1);
  }
  st.prefactor = op.coefficients().F;
  st.power = 2;
  return st;
}

Stencil equilibrium_stencil(const FractionalOperatorSpec& spec) {
  return equilibrium_stencil(RieszCaputoOperator(spec));
}

Stencil strain_stencil(const RieszCaputoOperator& op, PositionClass position) {
  const int m = op.spec().m();
  const auto g = op.combined_weights();
  auto gat = [&](int k) { return (k < -m || k > m) ? 0.0 : g[static_cast<std::size_t>(k + m)]; };

  Stencil st;
  st.power = 1;
  switch (position) {
    case PositionClass::left_boundary:
      st.first_offset = -m;
      st.bracket = forward_bracket(g, m);
      st.prefactor = op.coefficients().F;
      break;
    case PositionClass::interior:
      st.first_offset = -(m + 1);
      st.bracket.resize(2 * m + 3);
      for (int o = -(m + 1); o <= m + 1; ++o) {
        st.bracket[static_cast<std::size_t>(o + m + 1)] = gat(o - 1) - gat(o + 1);
      }
      st.prefactor = 0.5 * op.coefficients().F;
      break;
    case PositionClass::right_boundary:
      st.first_offset = -(m + 1);
      st.bracket.resize(2 * m + 2);
      for (int o = -(m + 1); o <= m; ++o) {
        st.bracket[static_cast<std::size_t>(o + m + 1)] = gat(o) - gat(o + 1);
      }
      st.prefactor = op.coefficients().F;
      break;
  }
  return st;
}

Stencil strain_stencil(const FractionalOperatorSpec& spec, PositionClass position) {
  return strain_stencil(RieszCaputoOperator(spec), position);
}

std::vector<double> sample_body_force(const BodyForceProfile& profile, const Grid1D& grid) {
  std::vector<double> b(static_cast<std::size_t>(grid.n_nodes()));
  for (int i = 0; i < grid.n_nodes(); ++i) b[static_cast<std::size_t>(i)] = profile.at(grid.x(i), grid.length);
  return b;
}

BandedSystem assemble(const RieszCaputoOperator& op, const Grid1D& grid,
                      const MaterialParams& params, const LoadProgram& program, int step_index) {
  const auto& spec = op.spec();
  if (grid.m != spec.m() || std::abs(grid.dx - spec.step()) > 1e-9 * spec.step()) {
    throw ConfigError(ConfigError::Kind::constraint,
                      "grid/spec mismatch: the grid spacing must equal dx = ell/m");
  }
  if (program.n_steps < 1 || step_index < 0 || step_index >= program.n_steps) {
    throw ConfigError(ConfigError::Kind::constraint, "load step index out of range");
  }
  if (static_cast<int>(program.body_force.size()) != grid.n_nodes()) {
    throw ConfigError(ConfigError::Kind::constraint,
                      "body force must be given at every physical node");
  }

  const int n = grid.n_intervals;
  const int m = grid.m;
  const auto unknowns = static_cast<std::size_t>(n - 1);
  const auto band = static_cast<std::size_t>(m + 1);
  const auto steps = static_cast<double>(program.n_steps);

  BandedSystem sys{BandMatrix(unknowns, band, band), std::vector<double>(unknowns, 0.0),
                   program.u_left() / steps, program.u_right() / steps};

  const Stencil st = equilibrium_stencil(op);
  for (int i = 1; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i - 1);
    double rhs = -program.body_force[static_cast<std::size_t>(i)] / steps / params.E;
    for (int o = st.first_offset; o <= st.last_offset(); ++o) {
      const double c = st.coefficient(o, grid.dx);
      const int node = i + o;
      if (node <= 0) {
        rhs -= c * sys.du_left;
      } else if (node >= n) {
        rhs -= c * sys.du_right;
      } else {
        sys.matrix.add(row, static_cast<std::size_t>(node - 1), c);
      }
    }
    sys.rhs[row] = rhs;
  }
  return sys;
}

BandedSystem assemble(const FractionalOperatorSpec& spec, const Grid1D& grid,
                      const MaterialParams& params, const LoadProgram& program, int step_index) {
  return assemble(RieszCaputoOperator(spec), grid, params, program, step_index);
}

std::vector<double> solve_increment(const BandedSystem& system) {
  auto du = system.matrix.solve(system.rhs);

  const auto Ax = system.matrix.multiply(du);
  double res = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < du.size(); ++i) {
    res = std::max(res, std::abs(Ax[i] - system.rhs[i]));
    norm = std::max(norm, std::abs(system.rhs[i]));
  }
  if (res > 1e-10 * norm) {
    throw SolverError("banded solve residual " + std::to_string(res) +
                          " exceeds tolerance relative to rhs " + std::to_string(norm),
                      -1);
  }
  return du;
}

std::vector<double> extend_increment(std::span<const double> interior, const BandedSystem& system,
                                     const Grid1D& grid) {
  const int n = grid.n_intervals;
  const int m = grid.m;
  std::vector<double> ext(static_cast<std::size_t>(grid.n_extended()));
  for (int node = -m; node <= n + m; ++node) {
    double v;
    if (node <= 0) {
      v = system.du_left;
    } else if (node >= n) {
      v = system.du_right;
    } else {
      v = interior[static_cast<std::size_t>(node - 1)];
    }
    ext[static_cast<std::size_t>(node + m)] = v;
  }
  return ext;
}

std::vector<double> strain_increments(std::span<const double> du_ext,
                                      const RieszCaputoOperator& op, const Grid1D& grid) {
  const int n = grid.n_intervals;
  const int m = grid.m;
  if (static_cast<int>(du_ext.size()) != grid.n_extended()) {
    throw std::invalid_argument("strain_increments: increments must cover nodes -m..n+m");
  }
  const std::array<Stencil, 3> stencils{strain_stencil(op, PositionClass::left_boundary),
                                        strain_stencil(op, PositionClass::interior),
                                        strain_stencil(op, PositionClass::right_boundary)};
  std::vector<double> d_eps(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    const Stencil& st = i == 0 ? stencils[0] : (i == n ? stencils[2] : stencils[1]);
    double s = 0.0;
    for (int o = st.first_offset; o <= st.last_offset(); ++o) {
      s += st.weight(o) * du_ext[static_cast<std::size_t>(i + o + m)];
    }
    d_eps[static_cast<std::size_t>(i)] = st.prefactor / grid.dx * s;
  }
  return d_eps;
}

std::vector<double> strain_increments(std::span<const double> du_ext,
                                      const FractionalOperatorSpec& spec, const Grid1D& grid) {
  return strain_increments(du_ext, RieszCaputoOperator(spec), grid);
}

std::vector<double> FieldState::displacement() const {
  return {U_ext.begin() + m, U_ext.end() - m};
}

std::vector<double> FieldState::eps_total() const {
  std::vector<double> v;
  v.reserve(points.size());
  for (const auto& p : points) v.push_back(p.eps_total);
  return v;
}

std::vector<double> FieldState::eps_plastic() const {
  std::vector<double> v;
  v.reserve(points.size());
  for (const auto& p : points) v.push_back(p.eps_plastic);
  return v;
}

std::vector<double> FieldState::sigma() const {
  std::vector<double> v;
  v.reserve(points.size());
  for (const auto& p : points) v.push_back(p.sigma);
  return v;
}

History run(const Problem& problem) {
  problem.material.validate();
  const Grid1D grid = Grid1D::make(problem.spec, problem.length);
  const RieszCaputoOperator op(problem.spec);

  History history{grid, {}};
  history.steps.reserve(static_cast<std::size_t>(problem.program.n_steps));

  FieldState state;
  state.m = grid.m;
  state.U_ext.assign(static_cast<std::size_t>(grid.n_extended()), 0.0);
  state.points.assign(static_cast<std::size_t>(grid.n_nodes()), PointState{});

  for (int k = 0; k < problem.program.n_steps; ++k) {
    std::vector<double> du_ext;
    try {
      const BandedSystem sys = assemble(op, grid, problem.material, problem.program, k);
      du_ext = extend_increment(solve_increment(sys), sys, grid);
    } catch (const SolverError& e) {
      throw SolverError("load step " + std::to_string(k) + ": " + e.what(), e.pivot_row());
    }
    for (std::size_t j = 0; j < du_ext.size(); ++j) state.U_ext[j] += du_ext[j];

    const auto d_eps = strain_increments(du_ext, op, grid);
    for (std::size_t i = 0; i < state.points.size(); ++i) {
      state.points[i] = update_point(state.points[i], d_eps[i], problem.material);
    }
    history.steps.push_back(state);
  }
  return history;
}

}  // namespace fracplast
