#include <benchmark/benchmark.h>

#include <vector>

#include "fracplast/bvp_solver.hpp"
#include "fracplast/config.hpp"
#include "fracplast/frac_kernel.hpp"

namespace {

using namespace fracplast;

void BM_CaputoWeights(benchmark::State& state) {
  const FractionalOperatorSpec spec(0.5, 0.1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(caputo_left_weights(spec));
    benchmark::DoNotOptimize(caputo_right_weights(spec));
  }
}
BENCHMARK(BM_CaputoWeights)->Arg(2)->Arg(10)->Arg(100)->Arg(1000);

void BM_EquilibriumStencil(benchmark::State& state) {
  const FractionalOperatorSpec spec(0.5, 0.1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equilibrium_stencil(spec));
}
BENCHMARK(BM_EquilibriumStencil)->Arg(2)->Arg(10)->Arg(100);

void BM_SampledDerivative(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const RieszCaputoOperator op(FractionalOperatorSpec(0.5, 0.1, m));
  std::vector<double> f(static_cast<std::size_t>(2 * m + 3));
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = 0.01 * static_cast<double>(k * k);
  for (auto _ : state) benchmark::DoNotOptimize(op.derivative_from_samples(f, InnerScheme::central));
}
BENCHMARK(BM_SampledDerivative)->Arg(2)->Arg(10)->Arg(100);

// Full 100-step run; argument is m with ell = 0.02 l, so n = 50 m.
void BM_Run(benchmark::State& state) {
  const Problem p = baseline_config(0.95, 0.02, static_cast<int>(state.range(0))).problem();
  for (auto _ : state) benchmark::DoNotOptimize(run(p));
}
BENCHMARK(BM_Run)->Arg(2)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
