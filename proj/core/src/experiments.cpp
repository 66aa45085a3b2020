#include "fracplast/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include <fmt/format.h>

#include "fracplast/classical_reference.hpp"
#include "fracplast/csv.hpp"

namespace fracplast {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

double peak_plastic(const FieldState& state) {
  double peak = 0.0;
  bool first = true;
  for (const auto& p : state.points) {
    if (first || p.eps_plastic > peak) peak = p.eps_plastic;
    first = false;
  }
  return peak;
}

double zone_width(const FieldState& state, double dx) {
  const auto count = std::count_if(state.points.begin(), state.points.end(), [](const PointState& p) {
    return p.eps_plastic > kPlasticZoneThreshold;
  });
  return static_cast<double>(count) * dx;
}

}  // namespace

RunSummary summarize(const FieldState& state, const Grid1D& grid) {
  RunSummary s;
  s.dx = grid.dx;
  s.peak_eps_p = peak_plastic(state);
  s.plastic_zone_width = zone_width(state, grid.dx);
  for (int i = 0; i <= grid.n_intervals; ++i) s.max_U = std::max(s.max_U, std::abs(state.u(i)));
  return s;
}

std::string profile_csv(const FieldState& state, const Grid1D& grid) {
  using csv::format_decimal;
  std::string out = "x,u,eps_total,eps_elastic,eps_plastic,sigma\n";
  for (int i = 0; i <= grid.n_intervals; ++i) {
    const auto& p = state.points[static_cast<std::size_t>(i)];
    out += fmt::format("{},{},{},{},{},{}\n", format_decimal(grid.x(i)), format_decimal(state.u(i)),
                       format_decimal(p.eps_total), format_decimal(p.eps_elastic()),
                       format_decimal(p.eps_plastic), format_decimal(p.sigma));
  }
  return out;
}

std::string history_csv(const History& history) {
  using csv::format_decimal;
  std::string out = "step,peak_eps_p,plastic_zone_width\n";
  for (std::size_t k = 0; k < history.steps.size(); ++k) {
    const auto& s = history.steps[k];
    out += fmt::format("{},{},{}\n", k + 1, format_decimal(peak_plastic(s)),
                       format_decimal(zone_width(s, history.grid.dx)));
  }
  return out;
}

std::string plot_script(const std::string& profile_file) {
  return fmt::format(
      "#!/usr/bin/env python3\n"
      "# Plastic strain along the bar.\n"
      "import csv\n"
      "import sys\n"
      "\n"
      "import matplotlib\n"
      "matplotlib.use(\"Agg\")\n"
      "import matplotlib.pyplot as plt\n"
      "\n"
      "path = sys.argv[1] if len(sys.argv) > 1 else \"{}\"\n"
      "with open(path, newline=\"\") as f:\n"
      "    rows = list(csv.DictReader(f))\n"
      "x = [float(r[\"x\"]) for r in rows]\n"
      "eps_p = [float(r[\"eps_plastic\"]) for r in rows]\n"
      "plt.plot(x, eps_p, marker=\".\")\n"
      "plt.xlabel(\"X [m]\")\n"
      "plt.ylabel(\"plastic strain [-]\")\n"
      "plt.grid(True)\n"
      "plt.savefig(path.rsplit(\".\", 1)[0] + \"_eps_p.png\", dpi=150)\n",
      profile_file);
}

RunOutput run_single(const RunConfig& config, const fs::path& out_dir, Solver solver) {
  const Problem problem = config.problem();
  RunOutput out{solver == Solver::classical ? classical_reference(problem) : run(problem), {}};
  out.summary = summarize(out.history.final_state(), out.history.grid);

  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + out_dir.string() + "'");
    write_file(out_dir / "run.json", config.to_json() + "\n");
    write_file(out_dir / "profile_final.csv", profile_csv(out.history.final_state(), out.history.grid));
    write_file(out_dir / "history.csv", history_csv(out.history));
    write_file(out_dir / "plot_eps_p.py", plot_script("profile_final.csv"));
  }
  return out;
}

SweepSpec SweepSpec::preset(const std::string& name, const RunConfig& base) {
  SweepSpec s;
  s.name = name;
  s.base = base;
  const std::vector<double> ells{0.2, 0.1, 0.02};
  if (name == "fig-r1") {
    // Classical mesh study: dx in {0.2, 0.1, 0.02} l with m = 2.
    s.alphas = {1.0};
    s.ell_fractions = {0.4, 0.2, 0.04};
    s.ms = {2};
  } else if (name == "fig-r2") {
    s.alphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    s.ell_fractions = {0.02, 0.1, 0.2};
    s.ms = {2};
  } else if (name == "fig-r3" || name == "fig-r4" || name == "fig-r5") {
    const double alpha = name == "fig-r3" ? 0.95 : (name == "fig-r4" ? 0.5 : 0.2);
    s.alphas = {alpha};
    s.ell_fractions = ells;
    s.ms = {2, 4, 10};
  } else {
    throw ConfigError(ConfigError::Kind::constraint, "unknown sweep preset '" + name + "'");
  }
  return s;
}

std::vector<std::string> SweepSpec::preset_names() {
  return {"fig-r1", "fig-r2", "fig-r3", "fig-r4", "fig-r5"};
}

std::vector<RunConfig> SweepSpec::points() const {
  if (alphas.empty() || ell_fractions.empty() || ms.empty()) {
    throw ConfigError(ConfigError::Kind::constraint,
                      "sweep needs at least one alpha, one ell and one m");
  }
  std::vector<RunConfig> pts;
  for (double a : alphas) {
    for (double e : ell_fractions) {
      for (int m : ms) {
        RunConfig c = base;
        c.alpha = a;
        c.ell_fraction = e;
        c.m = m;
        c.n.reset();
        pts.push_back(c);
      }
    }
  }
  return pts;
}

std::string point_directory_name(double alpha, double ell_fraction, int m) {
  return fmt::format("a{}_l{}_m{}", alpha, ell_fraction, m);
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec, const fs::path& out_root,
                                  unsigned workers) {
  const auto configs = spec.points();
  std::vector<SweepPoint> results(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    results[i].config = configs[i];
    results[i].directory =
        point_directory_name(*configs[i].alpha, *configs[i].ell_fraction, *configs[i].m);
  }

  std::error_code ec;
  fs::create_directories(out_root, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + out_root.string() + "'");

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(configs.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) {
      auto& r = results[i];
      try {
        r.summary = run_single(r.config, out_root / r.directory).summary;
        r.status = "ok";
      } catch (const ConfigError& e) {
        r.status = "config_error";
        r.message = e.what();
      } catch (const std::exception& e) {
        r.status = "solver_error";
        r.message = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  write_file(out_root / "summary.csv", summary_csv(results));
  return results;
}

std::string summary_csv(const std::vector<SweepPoint>& points) {
  using csv::format_decimal;
  std::string out = "alpha,ell_fraction,m,dx,peak_eps_p,plastic_zone_width,max_U,status\n";
  for (const auto& p : points) {
    const auto& c = p.config;
    const double dx = p.status == "ok" ? p.summary.dx : *c.ell_fraction * c.l / *c.m;
    out += fmt::format("{},{},{},{},{},{},{},{}\n", format_decimal(*c.alpha),
                       format_decimal(*c.ell_fraction), *c.m, format_decimal(dx),
                       format_decimal(p.summary.peak_eps_p),
                       format_decimal(p.summary.plastic_zone_width),
                       format_decimal(p.summary.max_U), p.status);
  }
  return out;
}

}  // namespace fracplast
