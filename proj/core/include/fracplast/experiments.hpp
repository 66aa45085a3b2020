#pragma once

/**
 * @file experiments.hpp
 * @brief Single runs, parameter sweeps and their file outputs.
 *
 * A run directory holds
 *   run.json          canonical configuration echo
 *   profile_final.csv x,u,eps_total,eps_elastic,eps_plastic,sigma (one row per node)
 *   history.csv       step,peak_eps_p,plastic_zone_width
 *   plot_eps_p.py     matplotlib script plotting eps_p over x
 *
 * A sweep directory holds one run directory per point, named
 * a{alpha}_l{ell_fraction}_m{m}, plus summary.csv.
 */

#include <filesystem>
#include <string>
#include <vector>

#include "fracplast/bvp_solver.hpp"
#include "fracplast/config.hpp"

namespace fracplast {

/// Nodes with eps_p above this count toward the plastic zone.
inline constexpr double kPlasticZoneThreshold = 1e-12;

struct RunSummary {
  double dx = 0.0;
  double peak_eps_p = 0.0;          ///< max over nodes of eps_p
  double plastic_zone_width = 0.0;  ///< (# nodes with eps_p > threshold) * dx
  double max_U = 0.0;               ///< max |U| over physical nodes
};

RunSummary summarize(const FieldState& state, const Grid1D& grid);

std::string profile_csv(const FieldState& state, const Grid1D& grid);
std::string history_csv(const History& history);
std::string plot_script(const std::string& profile_file);

struct RunOutput {
  History history;
  RunSummary summary;
};

enum class Solver { fractional, classical };

/// Runs the configuration and, if out_dir is non-empty, writes the run files
/// into it.  Throws ConfigError, SolverError, or std::runtime_error on I/O.
RunOutput run_single(const RunConfig& config, const std::filesystem::path& out_dir,
                     Solver solver = Solver::fractional);

struct SweepSpec {
  std::string name;  ///< preset name or "custom"
  std::vector<double> alphas;
  std::vector<double> ell_fractions;
  std::vector<int> ms;
  RunConfig base;

  /// fig-r1, fig-r2, fig-r3, fig-r4, fig-r5.  Throws ConfigError otherwise.
  static SweepSpec preset(const std::string& name, const RunConfig& base = {});
  static std::vector<std::string> preset_names();

  /// Cross product in alpha-major, then ell, then m order.  Throws
  /// ConfigError when empty.
  std::vector<RunConfig> points() const;
};

struct SweepPoint {
  RunConfig config;
  std::string directory;
  std::string status;  ///< "ok", "config_error" or "solver_error"
  std::string message;
  RunSummary summary;
};

std::string point_directory_name(double alpha, double ell_fraction, int m);

/// Runs every point on `workers` threads (0 = hardware concurrency) and writes
/// summary.csv.  Failing points are recorded, not fatal.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec, const std::filesystem::path& out_root,
                                  unsigned workers = 0);

std::string summary_csv(const std::vector<SweepPoint>& points);

}  // namespace fracplast
