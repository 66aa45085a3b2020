#pragma once

/**
 * @file config.hpp
 * @brief Run configuration: a flat JSON object plus command-line overrides.
 *
 * Recognized keys (all values are JSON scalars unless noted):
 *
 *   alpha, ell_fraction, m          required; ell = ell_fraction * l
 *   l                               bar length [m], default 1
 *   E, sigma_Y                      [Pa], defaults 205e9, 1.2e9 ("inf" disables yield)
 *   u_bar_fraction                  end displacement / l, default 0.003
 *   body_force                      "uniform" | "central_segment" | "table"
 *   body_force_magnitude            [N/m^3], default 615e6
 *   body_force_fraction             loaded fraction for central_segment
 *   body_force_table                array of [x/l, b] pairs
 *   n_steps                         default 100
 *   end_convention                  "outward" | "both_positive"
 *   n                               optional; must equal l m / ell
 *   output                          output directory
 */

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fracplast/bvp_solver.hpp"
#include "fracplast/errors.hpp"

namespace fracplast {

struct RunConfig {
  std::optional<double> alpha;
  std::optional<double> ell_fraction;
  std::optional<int> m;
  double l = 1.0;
  double E = 205e9;
  double sigma_Y = 1.2e9;
  double u_bar_fraction = 0.003;
  BodyForceProfile body_force;
  int n_steps = 100;
  EndConvention end_convention = EndConvention::outward;
  std::optional<int> n;
  std::filesystem::path output;

  /// Throws ConfigError (Kind::constraint) naming the violated constraint.
  void validate() const;

  FractionalOperatorSpec spec() const;
  Grid1D grid() const;
  Problem problem() const;

  /// Canonical JSON form (used as the run header).
  std::string to_json() const;
};

RunConfig parse_config_text(std::string_view text);
RunConfig parse_config_file(const std::filesystem::path& path);

/// Applies a single `key=value` override using the file's key names.
void apply_override(RunConfig& config, std::string_view key, std::string_view value);

/// The baseline parameters of the tension example with the given operator.
RunConfig baseline_config(double alpha, double ell_fraction, int m);

std::string to_string(EndConvention ends);
std::string to_string(BodyForceProfile::Kind kind);

}  // namespace fracplast
