#include "avlm/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "avlm/asymptotic.hpp"
#include "avlm/distributions.hpp"
#include "avlm/seq_test.hpp"

namespace avlm {

namespace {

struct MethodEval {
  Method method;
  bool has_rho = false;
  double rho = 0.5;
  double param = 1.0;
  double log_reject = 0.0;          // log(1/alpha) for the anytime methods
  double chi2_crit = 0.0;           // fixed-n z test
  const std::vector<double>* f_crit = nullptr;  // fixed-n classical F, by nu

  bool rejects(const RegressionSnapshot& snap, long n) const {
    switch (method) {
      case Method::AnytimeExact: {
        const double lb = snap.delta_hat.size() == 1
                              ? log_bayes_factor_t(snap, param, 0.0)
                              : log_bayes_factor(
                                    snap,
                                    MixtureSpec::isotropic(
                                        param, snap.delta_hat.size()),
                                    Eigen::VectorXd::Zero(snap.delta_hat.size()));
        return lb >= log_reject;
      }
      case Method::AnytimeAsymptotic: {
        if (!(snap.s2 > 0.0)) return snap.f_stat > 0.0;
        if (has_rho) {
          const Eigen::MatrixXd omega = Eigen::MatrixXd::Constant(
              1, 1, rho * (1.0 - rho));
          const double lb = log_bf_infinity(
              n, 1, param, omega, snap.delta_hat, snap.s2,
              Eigen::VectorXd::Zero(1));
          return lb >= log_reject;
        }
        return log_bf_g(n, snap.delta_hat.size(), param, snap.f_stat) >=
               log_reject;
      }
      case Method::FixedNRepeated: {
        if (!(snap.s2 > 0.0)) return snap.f_stat > 0.0;
        if (has_rho) {
          const double dh = snap.delta_hat(0);
          const double z2 = static_cast<double>(n) * rho * (1.0 - rho);
          return dh * dh * z2 / snap.s2 > chi2_crit;
        }
        const std::size_t nu = static_cast<std::size_t>(snap.nu);
        return nu < f_crit->size() && snap.f_stat > (*f_crit)[nu];
      }
    }
    return false;
  }
};

void run_replication(const DgpSpec& dgp, const std::vector<MethodEval>& evals,
                     const SimulateOptions& opts, long rep,
                     std::vector<std::vector<StoppingTimeSample>>& out) {
  Rng rng = Rng::for_replication(opts.base_seed,
                                 static_cast<std::uint64_t>(rep));
  SufficientStats stats(dgp_p(dgp), dgp_d(dgp));
  std::vector<char> decided(evals.size(), 0);
  std::size_t remaining = evals.size();

  for (long i = 1; i <= opts.n_max && remaining > 0; ++i) {
    stats.update(dgp_draw(rng, dgp, i));
    const RegressionSnapshot snap = snapshot(stats);
    if (!snap.full_rank) continue;
    for (std::size_t m = 0; m < evals.size(); ++m) {
      if (decided[m]) continue;
      if (evals[m].rejects(snap, i)) {
        decided[m] = 1;
        --remaining;
        auto& sample = out[m][static_cast<std::size_t>(rep)];
        sample.tau = i;
        sample.censored = false;
      }
    }
  }
  for (std::size_t m = 0; m < evals.size(); ++m) {
    auto& sample = out[m][static_cast<std::size_t>(rep)];
    sample.seed = static_cast<std::uint64_t>(rep);
    sample.method = evals[m].method;
    if (!decided[m]) {
      sample.tau = opts.n_max;
      sample.censored = true;
    }
  }
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::AnytimeExact:
      return "exact";
    case Method::AnytimeAsymptotic:
      return "asymptotic";
    case Method::FixedNRepeated:
      return "fixed";
  }
  return "unknown";
}

std::vector<std::vector<StoppingTimeSample>> simulate_stopping_times(
    const DgpSpec& dgp, const std::vector<Method>& methods,
    const SimulateOptions& opts) {
  if (opts.replications < 1) {
    throw std::invalid_argument("simulate_stopping_times: replications >= 1");
  }
  if (opts.n_max < 1) {
    throw std::invalid_argument("simulate_stopping_times: n_max >= 1");
  }
  if (!(opts.alpha > 0.0) || !(opts.alpha < 1.0)) {
    throw std::invalid_argument("simulate_stopping_times: alpha in (0, 1)");
  }
  if (!(opts.mixture_param > 0.0)) {
    throw std::invalid_argument("simulate_stopping_times: mixture param > 0");
  }
  if (methods.empty()) {
    throw std::invalid_argument("simulate_stopping_times: no methods given");
  }
  if (const auto* bs = std::get_if<BootstrapDgp>(&dgp)) bs->validate();

  const auto rho = dgp_rho(dgp);

  // Critical values shared across replications: computed up front so the
  // parallel section stays lock-free.
  std::vector<double> f_crit;
  const bool needs_f_table =
      !rho.has_value() &&
      std::find(methods.begin(), methods.end(), Method::FixedNRepeated) !=
          methods.end();
  if (needs_f_table) {
    f_crit.resize(static_cast<std::size_t>(opts.n_max) + 1, 0.0);
    for (std::size_t nu = 1; nu < f_crit.size(); ++nu) {
      f_crit[nu] =
          f_quantile(1.0, static_cast<double>(nu), 1.0 - opts.alpha);
    }
  }

  std::vector<MethodEval> evals;
  evals.reserve(methods.size());
  for (Method m : methods) {
    MethodEval e;
    e.method = m;
    e.has_rho = rho.has_value();
    e.rho = rho.value_or(0.5);
    e.param = opts.mixture_param;
    e.log_reject = -std::log(opts.alpha);
    if (m == Method::FixedNRepeated) {
      e.chi2_crit = chi2_quantile(1.0, 1.0 - opts.alpha);
      e.f_crit = &f_crit;
    }
    evals.push_back(e);
  }

  std::vector<std::vector<StoppingTimeSample>> out(
      methods.size(),
      std::vector<StoppingTimeSample>(
          static_cast<std::size_t>(opts.replications)));

  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    for (long rep = 0; rep < opts.replications; ++rep) {
      run_replication(dgp, evals, opts, rep, out);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (long rep = t; rep < opts.replications; rep += threads) {
          run_replication(dgp, evals, opts, rep, out);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

std::vector<StoppingTimeSample> simulate_stopping_times(
    const DgpSpec& dgp, Method method, const SimulateOptions& opts) {
  return simulate_stopping_times(dgp, std::vector<Method>{method}, opts)
      .front();
}

std::vector<EcdfRow> ecdf_summary(
    const std::vector<StoppingTimeSample>& samples) {
  std::vector<long> taus;
  long horizon = 0;
  taus.reserve(samples.size());
  for (const auto& s : samples) {
    horizon = std::max(horizon, s.tau);
    if (!s.censored) taus.push_back(s.tau);
  }
  std::sort(taus.begin(), taus.end());
  const double denom = static_cast<double>(samples.size());
  std::vector<EcdfRow> rows;
  std::size_t i = 0;
  while (i < taus.size()) {
    std::size_t j = i;
    while (j < taus.size() && taus[j] == taus[i]) ++j;
    rows.push_back({taus[i], static_cast<double>(j) / denom});
    i = j;
  }
  if (rows.empty() || rows.back().n < horizon) {
    rows.push_back({horizon, taus.empty() ? 0.0
                                          : static_cast<double>(taus.size()) /
                                                denom});
  }
  return rows;
}

double ecdf_at(const std::vector<StoppingTimeSample>& samples, long n) {
  if (samples.empty()) return 0.0;
  long count = 0;
  for (const auto& s : samples) {
    if (!s.censored && s.tau <= n) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(samples.size());
}

double mean_stopping_time(const std::vector<StoppingTimeSample>& samples) {
  double sum = 0.0;
  long count = 0;
  for (const auto& s : samples) {
    if (!s.censored) {
      sum += static_cast<double>(s.tau);
      ++count;
    }
  }
  return count > 0 ? sum / static_cast<double>(count)
                   : std::numeric_limits<double>::quiet_NaN();
}

double median_stopping_time(const std::vector<StoppingTimeSample>& samples) {
  std::vector<long> taus;
  for (const auto& s : samples) {
    if (!s.censored) taus.push_back(s.tau);
  }
  if (taus.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(taus.begin(), taus.end());
  const std::size_t m = taus.size();
  return m % 2 == 1 ? static_cast<double>(taus[m / 2])
                    : 0.5 * static_cast<double>(taus[m / 2 - 1] + taus[m / 2]);
}

long count_rejections(const std::vector<StoppingTimeSample>& samples) {
  long count = 0;
  for (const auto& s : samples) {
    if (!s.censored) ++count;
  }
  return count;
}

}  // namespace avlm
