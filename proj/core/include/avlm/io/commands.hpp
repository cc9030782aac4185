#ifndef AVLM_IO_COMMANDS_HPP
#define AVLM_IO_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "avlm/asymptotic.hpp"
#include "avlm/io/ingest.hpp"
#include "avlm/stopping.hpp"

namespace avlm::io {

/// Exit codes shared by all commands.
enum ExitCode : int { kExitReject = 0, kExitNoReject = 1, kExitError = 2 };

/// Which statistic a monitoring stream applies at each n.
enum class MonitorMethod { Exact, Plugin, Infinity, G };

MonitorMethod parse_monitor_method(const std::string& name);

struct MonitorOptions {
  std::string data;                // input path, "-" for stdin
  std::optional<Format> format;    // default: detect from extension
  Schema schema;                   // CSV column mapping (ignored for NDJSON)
  double alpha = 0.05;
  MonitorMethod method = MonitorMethod::Exact;
  // Mixture: phi is the scalar/isotropic precision for exact/plugin;
  // lambda (with omega for Infinity) drives the asymptotic forms.
  double phi = 1.0;
  double lambda = 1.0;
  double omega = 0.0;              // required for method Infinity
  std::vector<double> delta0;      // defaults to zeros
  std::string out;                 // trajectory CSV path, empty = no file
  std::string resume;              // checkpoint to resume from
  std::string save_checkpoint;     // checkpoint to write
  long checkpoint_at = -1;         // n at which to save (-1 = at end)
};

/// Streams data through the selected sequential test, writing one
/// TrajectoryRow per observation once full rank.  Returns kExitReject iff
/// the running-minimum p-value reached alpha.
int run_monitor(const MonitorOptions& opts, std::ostream& log);

struct AteOptions {
  std::string data;
  std::string y_column = "y";
  std::string treatment_column = "treatment";
  std::vector<std::string> covariates;
  AteConfig config;
  bool sigma_override = false;     // caller fixed the estimator choice
  double alpha = 0.05;
  std::string out;
};

/// Streams (y, T, m) rows through the regression-adjusted ATE confidence
/// sequence tau_hat +- r_n.
int run_ate(const AteOptions& opts, std::ostream& log);

struct RegionOptions {
  std::string data;
  std::optional<Format> format;
  Schema schema;
  double alpha = 0.05;
  double phi = 1.0;     // scalar (d = 1) or isotropic scale (d > 1)
  std::string out;      // JSON path, empty = log stream
};

/// Emits the exact elliptical confidence-sequence parameters at the final n.
int run_region(const RegionOptions& opts, std::ostream& log);

struct PowerOptions {
  double alpha = 0.01;
  double power_target = 0.95;
  double xi_mde = 0.0;
  double xi_true = -1.0;     // defaults to xi_mde
  long at_n = 0;             // also report the rejection bound at this n
  std::string curve_out;     // optional CSV of the lower-bound curve
  long curve_max_n = 0;
  long curve_step = 50;
};

int run_power(const PowerOptions& opts, std::ostream& log);

struct SimulateCliOptions {
  std::string dgp = "nonlinear";  // alternating | nonlinear | bootstrap
  std::vector<Method> methods{Method::AnytimeExact, Method::FixedNRepeated};
  double alpha = 0.05;
  double mixture_param = 1.0;
  long n_max = 10000;
  long replications = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;  // summary CSV (n, ecdf, method, dgp)
  // alternating design
  double beta = 1.0;
  double delta = 0.2;
  double sigma2 = 1.5;
  // nonlinear / bootstrap
  double rho = 0.5;
  double nonlinear_delta = 0.0;
  std::string control_file;    // CSV with column y (and optionally pre)
  std::string treatment_file;
  bool aa_mode = false;
  bool use_pre = false;
};

int run_simulate(const SimulateCliOptions& opts, std::ostream& log);

/// Prints a human summary of a checkpoint and verifies it round-trips.
int run_checkpoint_inspect(const std::string& path, std::ostream& log);

}  // namespace avlm::io

#endif  // AVLM_IO_COMMANDS_HPP
