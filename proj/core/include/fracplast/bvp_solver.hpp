#pragma once

/**
 * @file bvp_solver.hpp
 * @brief Incremental 1D boundary-value solver for the nonlocal elasto-plastic bar.
 *
 * Physical nodes X_0..X_n with spacing dx = ell / m, so the quadrature nodes
 * of the fractional operator coincide with grid nodes.  m fictitious nodes
 * on each side (X_{-m}..X_{-1}, X_{n+1}..X_{n+m}) carry the displacement of
 * the adjacent end.
 *
 * Each load step solves the elastic incremental equilibrium
 *
 *     d/dX (Grad dU) + db / E = 0
 *
 * for the interior increments, then computes fractional strain increments
 * and corrects stresses pointwise by return mapping.  Stresses are not
 * re-equilibrated after the plastic correction.
 *
 * The equilibrium operator at node i is the backward difference
 * (Grad|_i - Grad|_{i-1}) / dx of the fractional gradient, with forward
 * differences for f' at each quadrature node.  Its support is the 2m+3
 * nodes i-m-1 .. i+m+1.
 */

#include <span>
#include <utility>
#include <vector>

#include "fracplast/banded.hpp"
#include "fracplast/errors.hpp"
#include "fracplast/frac_kernel.hpp"
#include "fracplast/plasticity.hpp"

namespace fracplast {

enum class EndConvention {
  outward,        ///< U(0) = -u_bar, U(l) = +u_bar
  both_positive,  ///< U(0) = U(l) = +u_bar
};

enum class PositionClass { left_boundary, interior, right_boundary };

struct BodyForceProfile {
  enum class Kind { uniform, central_segment, table };

  Kind kind = Kind::uniform;
  double magnitude = 615e6;  ///< N/m^3
  /// Loaded fraction of the bar, centred on l/2 (central_segment only).
  double fraction = 1.0;
  /// (x / l, b) pairs, linearly interpolated and held constant outside.
  std::vector<std::pair<double, double>> table;

  double at(double x, double length) const;
};

struct Grid1D {
  double length = 1.0;
  int n_intervals = 0;
  double dx = 0.0;
  int m = 2;

  /// Derives n = l m / ell.  Throws ConfigError unless it is an integer and
  /// ell <= l.
  static Grid1D make(const FractionalOperatorSpec& spec, double length);

  int n_nodes() const noexcept { return n_intervals + 1; }
  /// Physical plus fictitious nodes.
  int n_extended() const noexcept { return n_intervals + 1 + 2 * m; }
  double x(int node) const noexcept { return node * dx; }
};

struct LoadProgram {
  double u_bar = 0.003;
  int n_steps = 100;
  EndConvention ends = EndConvention::outward;
  std::vector<double> body_force;  ///< per physical node, N/m^3

  double u_left() const noexcept;
  double u_right() const noexcept;
};

/// Linear stencil: value = prefactor / dx^power * sum_k bracket[k] U_{i+first_offset+k}.
struct Stencil {
  int first_offset = 0;
  std::vector<double> bracket;
  double prefactor = 1.0;
  int power = 1;

  int last_offset() const noexcept {
    return first_offset + static_cast<int>(bracket.size()) - 1;
  }
  /// Bracket entry at a node offset, zero outside the support.
  double weight(int offset) const noexcept;
  /// Full coefficient including prefactor / dx^power.
  double coefficient(int offset, double dx) const;
};

/// Bracket over offsets -(m+1)..+(m+1), prefactor F, power 2.
Stencil equilibrium_stencil(const RieszCaputoOperator& op);
Stencil equilibrium_stencil(const FractionalOperatorSpec& spec);

/// Forward (left boundary, offsets -m..m+1, prefactor F), central (interior,
/// offsets -(m+1)..m+1, prefactor F/2) or backward (right boundary,
/// offsets -(m+1)..m, prefactor F).  Power 1.
Stencil strain_stencil(const RieszCaputoOperator& op, PositionClass position);
Stencil strain_stencil(const FractionalOperatorSpec& spec, PositionClass position);

struct BandedSystem {
  BandMatrix matrix;          ///< unknown k <-> node k+1
  std::vector<double> rhs;
  double du_left = 0.0;   ///< prescribed increment on nodes -m..0
  double du_right = 0.0;  ///< prescribed increment on nodes n..n+m
};

struct FieldState {
  int m = 0;
  std::vector<double> U_ext;  ///< nodes -m .. n+m
  std::vector<PointState> points;

  double u(int node) const { return U_ext.at(static_cast<std::size_t>(node + m)); }
  std::vector<double> displacement() const;
  std::vector<double> eps_total() const;
  std::vector<double> eps_plastic() const;
  std::vector<double> sigma() const;
};

struct Problem {
  FractionalOperatorSpec spec;
  double length = 1.0;
  MaterialParams material;
  LoadProgram program;
};

struct History {
  Grid1D grid;
  std::vector<FieldState> steps;  ///< state after each load step

  const FieldState& final_state() const { return steps.back(); }
};

/// Per-node body force sampled from a profile.
std::vector<double> sample_body_force(const BodyForceProfile& profile, const Grid1D& grid);

/// Throws ConfigError when the grid does not match the spec.
BandedSystem assemble(const RieszCaputoOperator& op, const Grid1D& grid,
                      const MaterialParams& params, const LoadProgram& program, int step_index);
BandedSystem assemble(const FractionalOperatorSpec& spec, const Grid1D& grid,
                      const MaterialParams& params, const LoadProgram& program, int step_index);

/// Interior increments; throws SolverError on a singular system or when the
/// residual check fails.
std::vector<double> solve_increment(const BandedSystem& system);

/// Extends interior increments with the prescribed end and fictitious values.
std::vector<double> extend_increment(std::span<const double> interior, const BandedSystem& system,
                                     const Grid1D& grid);

/// Per-node strain increments from increments on nodes -m..n+m.
std::vector<double> strain_increments(std::span<const double> du_ext,
                                      const RieszCaputoOperator& op, const Grid1D& grid);
std::vector<double> strain_increments(std::span<const double> du_ext,
                                      const FractionalOperatorSpec& spec, const Grid1D& grid);

/// Marches the load program.  Deterministic; errors carry the step index.
History run(const Problem& problem);

}  // namespace fracplast
