#include <benchmark/benchmark.h>

#include "avlm/distributions.hpp"
#include "avlm/regression.hpp"
#include "avlm/rng.hpp"
#include "avlm/seq_test.hpp"

namespace {

avlm::RegressionSnapshot make_snapshot(Eigen::Index d) {
  avlm::Rng rng(7);
  avlm::SufficientStats stats(1, d);
  avlm::DesignPoint pt;
  pt.x = Eigen::VectorXd::Ones(1);
  pt.z = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < 50 * static_cast<int>(d); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) pt.z(j) = rng.normal();
    pt.y = 0.5 + 0.1 * pt.z.sum() + rng.normal();
    stats.update(pt);
  }
  return avlm::snapshot(stats);
}

void BM_LogBayesFactorT(benchmark::State& state) {
  const auto snap = make_snapshot(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(avlm::log_bayes_factor_t(snap, 37.5, 0.0));
  }
}

void BM_LogBayesFactorGeneral(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  const auto snap = make_snapshot(d);
  const auto mix = avlm::MixtureSpec::isotropic(1.0, d);
  const Eigen::VectorXd delta0 = Eigen::VectorXd::Zero(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(avlm::log_bayes_factor(snap, mix, delta0));
  }
}

void BM_NcfCdf(benchmark::State& state) {
  const avlm::NoncentralF dist{1.0, static_cast<double>(state.range(0)),
                               17.84};
  double x = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(avlm::ncf_cdf(dist, x));
    x = x < 20.0 ? x + 0.001 : 3.0;
  }
}

void BM_NcfQuantile(benchmark::State& state) {
  const avlm::NoncentralF dist{1.0, 2674.0, 17.84};
  for (auto _ : state) {
    benchmark::DoNotOptimize(avlm::ncf_quantile(dist, 0.95));
  }
}

}  // namespace

BENCHMARK(BM_LogBayesFactorT);
BENCHMARK(BM_LogBayesFactorGeneral)->Arg(2)->Arg(5);
BENCHMARK(BM_NcfCdf)->Arg(100)->Arg(2674);
BENCHMARK(BM_NcfQuantile);
