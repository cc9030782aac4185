#ifndef AVLM_STOPPING_HPP
#define AVLM_STOPPING_HPP

#include <cstdint>
#include <vector>

#include "avlm/dgp.hpp"

namespace avlm {

/**
 * Test applied at every observation of a simulated stream.
 *
 *   AnytimeExact      exact mixture Bayes factor; the parameter is the
 *                     scalar mixture precision phi.
 *   AnytimeAsymptotic limiting-form statistic; the parameter is lambda.
 *                     Uses B-infinity with Omega = rho(1-rho) when the
 *                     process has a treatment probability, B^g otherwise.
 *   FixedNRepeated    the "peeking" baseline: the fixed-n test applied at
 *                     every n from the first full-rank fit.  For processes
 *                     with a treatment probability this is the fixed-n ATE
 *                     z test (chi-squared critical value); otherwise the
 *                     classical F test.
 */
enum class Method { AnytimeExact, AnytimeAsymptotic, FixedNRepeated };

const char* method_name(Method m);

struct StoppingTimeSample {
  std::uint64_t seed = 0;  // replication index within the base seed
  long tau = 0;            // first n with running-min p <= alpha (n_max if censored)
  bool censored = false;
  Method method = Method::AnytimeExact;
};

struct SimulateOptions {
  double alpha = 0.05;
  double mixture_param = 1.0;  // phi (exact) or lambda (asymptotic)
  long n_max = 10000;
  long replications = 1000;
  std::uint64_t base_seed = 0;
  int threads = 1;
};

/**
 * Monte Carlo stopping times, one independent RNG stream per replication
 * derived from (base_seed, replication).  Parallelism is over replications
 * only and results are merged by replication index, so output is identical
 * for every thread count.  When several methods are given they share each
 * replication's data path.
 */
std::vector<std::vector<StoppingTimeSample>> simulate_stopping_times(
    const DgpSpec& dgp, const std::vector<Method>& methods,
    const SimulateOptions& opts);

/// Single-method convenience wrapper.
std::vector<StoppingTimeSample> simulate_stopping_times(
    const DgpSpec& dgp, Method method, const SimulateOptions& opts);

struct EcdfRow {
  long n = 0;
  double ecdf = 0.0;
};

/// Step points of the empirical distribution of the stopping time; the
/// denominator includes censored replications, and a terminal row at the
/// censoring horizon is always present.
std::vector<EcdfRow> ecdf_summary(const std::vector<StoppingTimeSample>& samples);

/// Fraction of replications with tau <= n.
double ecdf_at(const std::vector<StoppingTimeSample>& samples, long n);

double mean_stopping_time(const std::vector<StoppingTimeSample>& samples);
double median_stopping_time(const std::vector<StoppingTimeSample>& samples);
long count_rejections(const std::vector<StoppingTimeSample>& samples);

}  // namespace avlm

#endif  // AVLM_STOPPING_HPP
