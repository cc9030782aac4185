#include <benchmark/benchmark.h>

#include "avlm/stopping.hpp"

namespace {

void BM_SimulateNonlinear(benchmark::State& state) {
  avlm::SimulateOptions opts;
  opts.alpha = 0.05;
  opts.mixture_param = 1.0;
  opts.n_max = 2000;
  opts.replications = 20;
  opts.base_seed = 3;
  opts.threads = static_cast<int>(state.range(0));
  const avlm::DgpSpec dgp = avlm::NonlinearModelDgp{0.0, 0.5};
  for (auto _ : state) {
    const auto samples =
        avlm::simulate_stopping_times(dgp, avlm::Method::AnytimeExact, opts);
    benchmark::DoNotOptimize(samples.size());
  }
  state.SetItemsProcessed(state.iterations() * opts.replications *
                          opts.n_max);
}

}  // namespace

BENCHMARK(BM_SimulateNonlinear)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
