#include "cli_app.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "fracplast/banded.hpp"
#include "fracplast/config.hpp"
#include "fracplast/experiments.hpp"
#include "fracplast/verify.hpp"

namespace fracplast::cli {

namespace fs = std::filesystem;

namespace {

fs::path output_root() {
  if (const char* env = std::getenv(kOutputRootEnv); env != nullptr && *env != '\0') return env;
  return "fracplast_out";
}

struct RunArgs {
  std::string config_file;
  std::string out;
  std::vector<std::string> overrides;
  std::optional<double> alpha;
  std::optional<double> ell_fraction;
  std::optional<int> m;
  std::optional<int> n_steps;
  bool classical = false;
};

struct SweepArgs {
  std::string preset;
  std::vector<double> alphas;
  std::vector<double> ells;
  std::vector<int> ms;
  std::string config_file;
  std::vector<std::string> overrides;
  std::string out;
  unsigned jobs = 0;
};

struct VerifyArgs {
  double perturb_weights = 0.0;
  std::uint64_t seed = VerifyOptions{}.seed;
};

void apply_overrides(RunConfig& c, const std::vector<std::string>& overrides) {
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError(ConfigError::Kind::parse, "override '" + kv + "' is not KEY=VALUE");
    }
    apply_override(c, kv.substr(0, eq), kv.substr(eq + 1));
  }
}

fs::path resolve_output(const std::string& flag, const fs::path& from_config,
                        const std::string& fallback_name) {
  if (!flag.empty()) return flag;
  if (!from_config.empty()) return from_config;
  return output_root() / fallback_name;
}

int do_run(const RunArgs& a, std::ostream& out) {
  RunConfig c = parse_config_file(a.config_file);
  apply_overrides(c, a.overrides);
  if (a.alpha) c.alpha = a.alpha;
  if (a.ell_fraction) c.ell_fraction = a.ell_fraction;
  if (a.m) c.m = a.m;
  if (a.n_steps) c.n_steps = *a.n_steps;
  c.validate();

  const std::string name = "run_" + point_directory_name(*c.alpha, *c.ell_fraction, *c.m);
  const fs::path dir = resolve_output(a.out, c.output, name);
  const auto result = run_single(c, dir, a.classical ? Solver::classical : Solver::fractional);

  out << c.to_json() << "\n";
  out << "output: " << dir.string() << "\n";
  out << "dx = " << result.summary.dx << ", peak eps_p = " << result.summary.peak_eps_p
      << ", plastic zone = " << result.summary.plastic_zone_width
      << ", max |U| = " << result.summary.max_U << "\n";
  return kOk;
}

int do_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig base;
  if (!a.config_file.empty()) base = parse_config_file(a.config_file);
  apply_overrides(base, a.overrides);

  SweepSpec spec;
  if (!a.preset.empty()) {
    spec = SweepSpec::preset(a.preset, base);
  } else {
    spec.name = "custom";
    spec.base = base;
    spec.alphas = a.alphas;
    spec.ell_fractions = a.ells;
    spec.ms = a.ms;
  }
  (void)spec.points();  // rejects an empty cross product before any I/O

  const fs::path dir = resolve_output(a.out, base.output, spec.name);
  const auto results = run_sweep(spec, dir, a.jobs);

  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.status != "ok") {
      ++failed;
      err << r.directory << ": " << r.status << ": " << r.message << "\n";
    }
  }
  out << results.size() << " runs written to " << dir.string() << " (" << failed << " failed)\n";
  return failed == 0 ? kOk : kSolverFailure;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  opts.perturb_weights = a.perturb_weights;
  opts.seed = a.seed;
  const auto results = run_verification(opts);
  out << format_report(results);
  return all_passed(results) ? kOk : kVerificationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional-continuum elasto-plastic bar: runs, sweeps and self-checks", "fracplast"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Solve one configuration and write CSV output");
  run->add_option("--config", run_args.config_file, "JSON configuration file")->required();
  run->add_option("--out", run_args.out, "Output directory");
  run->add_option("--set", run_args.overrides, "Override a configuration key (KEY=VALUE)");
  run->add_option("--alpha", run_args.alpha, "Fractional order");
  run->add_option("--ell-fraction", run_args.ell_fraction, "Length scale as a fraction of l");
  run->add_option("--m", run_args.m, "Quadrature intervals per half horizon");
  run->add_option("--n-steps", run_args.n_steps, "Load steps");
  run->add_flag("--classical", run_args.classical, "Use the local reference solver");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write summary.csv");
  auto* preset = sweep->add_option("--preset", sweep_args.preset, "Named sweep")
                     ->check(CLI::IsMember(SweepSpec::preset_names()));
  auto* alphas = sweep->add_option("--alphas", sweep_args.alphas, "Fractional orders")->delimiter(',');
  auto* ells = sweep->add_option("--ells", sweep_args.ells, "Length scales (fractions of l)")->delimiter(',');
  auto* ms = sweep->add_option("--ms", sweep_args.ms, "Quadrature intervals")->delimiter(',');
  preset->excludes(alphas)->excludes(ells)->excludes(ms);
  sweep->add_option("--config", sweep_args.config_file, "Base configuration file");
  sweep->add_option("--set", sweep_args.overrides, "Override a base configuration key (KEY=VALUE)");
  sweep->add_option("--out", sweep_args.out, "Output root for the sweep");
  sweep->add_option("--jobs", sweep_args.jobs, "Worker threads (0 = all cores)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the self-check battery");
  verify->add_option("--perturb-weights", verify_args.perturb_weights,
                     "Scale every quadrature weight by (1 + X)");
  verify->add_option("--seed", verify_args.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return do_run(run_args, out);
    if (*sweep) return do_sweep(sweep_args, out, err);
    return do_verify(verify_args, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << "\n";
    return kSolverFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"fracplast"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fracplast::cli
