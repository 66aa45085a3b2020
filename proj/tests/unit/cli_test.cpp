#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "cli_app.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using fracplast::cli::run_cli;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fracplast_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const auto p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("run writes output and exits 0") {
  TempDir t;
  const auto cfg = write_config(t.path, R"({"alpha": 0.5, "ell_fraction": 0.1, "m": 2})");
  const auto r = cli({"run", "--config", cfg.string(), "--out", (t.path / "o").string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(t.path / "o" / "profile_final.csv"));
  CHECK(r.out.find("\"l\": 1.0") != std::string::npos);
}

TEST_CASE("flag overrides win over the file") {
  TempDir t;
  const auto cfg = write_config(t.path, R"({"alpha": 0.5, "ell_fraction": 0.1, "m": 2})");
  const auto r = cli({"run", "--config", cfg.string(), "--out", (t.path / "o").string(), "--m", "4",
                      "--set", "n_steps=5"});
  CHECK(r.code == 0);
  std::ifstream in(t.path / "o" / "run.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"m\": 4") != std::string::npos);
  CHECK(ss.str().find("\"n_steps\": 5") != std::string::npos);
}

TEST_CASE("configuration errors exit 1") {
  TempDir t;
  CHECK(cli({"run", "--config", (t.path / "missing.json").string()}).code == 1);
  const auto bad = write_config(t.path, R"({"alpha": 1.2, "ell_fraction": 0.1, "m": 2})");
  const auto r = cli({"run", "--config", bad.string(), "--out", (t.path / "o").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("alpha must lie in (0,1]") != std::string::npos);
  CHECK(cli({"run", "--config", bad.string(), "--set", "bogus"}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"sweep", "--alphas", "0.5", "--ms", "2", "--out", t.path.string()}).code == 1);
}

TEST_CASE("sweep with a preset writes summary.csv under the output root") {
  TempDir t;
  ::setenv(fracplast::cli::kOutputRootEnv, t.path.string().c_str(), 1);
  const auto r = cli({"sweep", "--preset", "fig-r5", "--jobs", "2"});
  ::unsetenv(fracplast::cli::kOutputRootEnv);
  CHECK(r.code == 0);
  CHECK(fs::exists(t.path / "fig-r5" / "summary.csv"));
  CHECK(r.out.find("9 runs") != std::string::npos);
}

TEST_CASE("sweep with a failing point exits 2") {
  TempDir t;
  const auto r = cli({"sweep", "--alphas", "0.5", "--ells", "0.1,0.3", "--ms", "2", "--out",
                      t.path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("config_error") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  const auto ok = cli({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const auto bad = cli({"verify", "--perturb-weights", "1e-3"});
  CHECK(bad.code == 3);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("help exits 0") { CHECK(cli({"--help"}).code == 0); }
