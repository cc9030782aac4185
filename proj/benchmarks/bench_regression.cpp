#include <benchmark/benchmark.h>

#include "avlm/regression.hpp"
#include "avlm/rng.hpp"

namespace {

void BM_UpdateSnapshot(benchmark::State& state) {
  const auto p = static_cast<Eigen::Index>(state.range(0));
  avlm::Rng rng(1);
  avlm::SufficientStats stats(p, 1);
  avlm::DesignPoint pt;
  pt.x = Eigen::VectorXd::Ones(p);
  pt.z = Eigen::VectorXd::Zero(1);
  // prime past the identifiability threshold
  for (int i = 0; i < 2 * (p + 1) + 2; ++i) {
    for (Eigen::Index j = 1; j < p; ++j) pt.x(j) = rng.normal();
    pt.z(0) = rng.bernoulli(0.5) ? 0.5 : -0.5;
    pt.y = rng.normal();
    stats.update(pt);
  }
  for (auto _ : state) {
    for (Eigen::Index j = 1; j < p; ++j) pt.x(j) = rng.normal();
    pt.z(0) = rng.bernoulli(0.5) ? 0.5 : -0.5;
    pt.y = rng.normal();
    stats.update(pt);
    benchmark::DoNotOptimize(avlm::snapshot(stats).f_stat);
  }
  state.SetItemsProcessed(state.iterations());
}

}  // namespace

BENCHMARK(BM_UpdateSnapshot)->Arg(1)->Arg(4)->Arg(16);
