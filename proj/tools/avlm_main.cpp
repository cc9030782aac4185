// avlm: streaming anytime-valid inference for linear models.
//
// Subcommands: monitor, ate, region, power, simulate, checkpoint.
// Every subcommand accepts --config <file> with flat key=value lines;
// command line flags override the file.  AVLM_SEED sets the default
// simulation seed.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "avlm/io/commands.hpp"

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> split_doubles(const std::string& csv) {
  std::vector<double> out;
  for (const auto& item : split_list(csv)) out.push_back(std::stod(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anytime-valid sequential inference for linear models"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  // ---- monitor ----------------------------------------------------------
  auto* monitor = app.add_subcommand(
      "monitor", "stream a data file through a sequential test");
  avlm::io::MonitorOptions mon;
  std::string mon_method = "exact";
  std::string mon_format = "auto";
  std::string mon_x_cols, mon_z_cols = "z", mon_null;
  monitor->add_option("--data", mon.data, "input file (csv or ndjson), - for stdin")
      ->required();
  monitor->add_option("--format", mon_format, "csv | ndjson | auto");
  monitor->add_option("--y-col", mon.schema.y, "outcome column")->default_val("y");
  monitor->add_option("--x-cols", mon_x_cols,
                      "comma separated nuisance columns (include an intercept "
                      "column explicitly if wanted)");
  monitor->add_option("--z-cols", mon_z_cols, "comma separated effect columns");
  monitor->add_option("--alpha", mon.alpha, "level of the sequential test");
  monitor->add_option("--method", mon_method, "exact | plugin | infinity | g");
  monitor->add_option("--phi", mon.phi,
                      "mixture precision (scalar for d=1, isotropic scale "
                      "otherwise)");
  monitor->add_option("--lambda", mon.lambda, "mixture scale for infinity/g");
  monitor->add_option("--omega", mon.omega,
                      "known limiting Gram of the centered effect column "
                      "(method infinity)");
  monitor->add_option("--null", mon_null, "null value(s) of delta, comma separated");
  monitor->add_option("--out", mon.out, "trajectory CSV path");
  monitor->add_option("--resume", mon.resume, "checkpoint to resume from");
  monitor->add_option("--save-checkpoint", mon.save_checkpoint,
                      "checkpoint file to write");
  monitor->add_option("--checkpoint-at", mon.checkpoint_at,
                      "n at which to snapshot state (default: at end)");

  // ---- ate ---------------------------------------------------------------
  auto* ate = app.add_subcommand(
      "ate", "regression-adjusted treatment-effect confidence sequence");
  avlm::io::AteOptions ate_opts;
  std::string ate_covs, ate_mu, ate_sigma = "auto";
  double ate_tau_mde = 0.0, ate_sigma_pre = 0.0;
  bool ate_interactions = false;
  ate->add_option("--data", ate_opts.data, "input CSV")->required();
  ate->add_option("--y-col", ate_opts.y_column, "outcome column");
  ate->add_option("--treatment-col", ate_opts.treatment_column,
                  "0/1 treatment column");
  ate->add_option("--covariates", ate_covs,
                  "comma separated pre-treatment covariate columns");
  ate->add_option("--rho", ate_opts.config.rho, "treatment probability");
  ate->add_option("--lambda", ate_opts.config.lambda, "mixture scale");
  ate->add_option("--tau-mde", ate_tau_mde,
                  "absolute minimum detectable effect (sets lambda together "
                  "with --sigma-pre)");
  ate->add_option("--sigma-pre", ate_sigma_pre,
                  "pre-experiment outcome standard deviation for --tau-mde");
  ate->add_option("--sigma-estimator", ate_sigma, "auto | model | hc0");
  ate->add_flag("--interactions", ate_interactions,
                "include centered treatment-covariate interactions");
  ate->add_option("--mu-m", ate_mu,
                  "comma separated covariate means (required with "
                  "--interactions)");
  ate->add_option("--alpha", ate_opts.alpha, "level");
  ate->add_option("--out", ate_opts.out, "trajectory CSV path");

  // ---- region ------------------------------------------------------------
  auto* region = app.add_subcommand(
      "region", "confidence ellipsoid parameters at the final n");
  avlm::io::RegionOptions reg;
  std::string reg_format = "auto", reg_x_cols, reg_z_cols = "z";
  region->add_option("--data", reg.data, "input file")->required();
  region->add_option("--format", reg_format, "csv | ndjson | auto");
  region->add_option("--y-col", reg.schema.y, "outcome column")->default_val("y");
  region->add_option("--x-cols", reg_x_cols, "nuisance columns");
  region->add_option("--z-cols", reg_z_cols, "effect columns");
  region->add_option("--alpha", reg.alpha, "level");
  region->add_option("--phi", reg.phi, "mixture precision");
  region->add_option("--out", reg.out, "JSON output path (default stdout)");

  // ---- power -------------------------------------------------------------
  auto* power = app.add_subcommand(
      "power", "fixed-n sample size and sequential rejection bound");
  avlm::io::PowerOptions pow_opts;
  power->add_option("--alpha", pow_opts.alpha, "test level");
  power->add_option("--power", pow_opts.power_target, "target power");
  power->add_option("--xi", pow_opts.xi_mde, "standardized minimum detectable effect")
      ->required();
  power->add_option("--xi-true", pow_opts.xi_true,
                    "true standardized effect for the rejection bound");
  power->add_option("--at-n", pow_opts.at_n,
                    "also print the rejection-probability lower bound at n");
  power->add_option("--curve-out", pow_opts.curve_out,
                    "CSV of the lower-bound curve");
  power->add_option("--curve-max-n", pow_opts.curve_max_n, "curve grid end");
  power->add_option("--curve-step", pow_opts.curve_step, "curve grid step");

  // ---- simulate ----------------------------------------------------------
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo stopping-time harness");
  avlm::io::SimulateCliOptions sim;
  std::string sim_methods = "exact,fixed";
  double sim_phi = 0.0, sim_lambda = 0.0;
  simulate->add_option("--dgp", sim.dgp, "alternating | nonlinear | bootstrap");
  simulate->add_option("--methods", sim_methods,
                       "comma separated: exact | asymptotic | fixed");
  simulate->add_option("--alpha", sim.alpha, "level");
  simulate->add_option("--phi", sim_phi, "mixture precision for method exact");
  simulate->add_option("--lambda", sim_lambda,
                       "mixture scale for method asymptotic (alias of --phi "
                       "for exact)");
  simulate->add_option("--nmax", sim.n_max, "censoring horizon");
  simulate->add_option("--reps", sim.replications, "replications");
  simulate->add_option("--seed", sim.seed, "base seed")
      ->envname("AVLM_SEED");
  simulate->add_option("--threads", sim.threads, "worker threads");
  simulate->add_option("--out", sim.out, "summary CSV (n, ecdf, method, dgp)");
  simulate->add_option("--beta", sim.beta, "alternating design: intercept");
  simulate->add_option("--delta", sim.delta, "alternating design: effect");
  simulate->add_option("--sigma2", sim.sigma2, "alternating design: variance");
  simulate->add_option("--rho", sim.rho, "treatment probability");
  simulate->add_option("--nonlinear-delta", sim.nonlinear_delta,
                       "nonlinear model: treatment effect");
  simulate->add_option("--control", sim.control_file,
                       "bootstrap: control arm CSV (column y, optional pre)");
  simulate->add_option("--treatment", sim.treatment_file,
                       "bootstrap: treatment arm CSV");
  simulate->add_flag("--aa", sim.aa_mode,
                     "bootstrap: draw both arms from the control sample");
  simulate->add_flag("--use-pre", sim.use_pre,
                     "bootstrap: adjust for the pre-treatment outcome");

  // ---- checkpoint --------------------------------------------------------
  auto* checkpoint = app.add_subcommand("checkpoint", "checkpoint utilities");
  auto* inspect = checkpoint->add_subcommand(
      "inspect", "print checkpoint contents and verify the round trip");
  std::string ckpt_path;
  inspect->add_option("file", ckpt_path, "checkpoint JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*monitor) {
      mon.method = avlm::io::parse_monitor_method(mon_method);
      if (mon_format != "auto") {
        mon.format = mon_format == "ndjson" ? avlm::io::Format::Ndjson
                                            : avlm::io::Format::Csv;
      }
      mon.schema.x = split_list(mon_x_cols);
      mon.schema.z = split_list(mon_z_cols);
      if (!mon_null.empty()) mon.delta0 = split_doubles(mon_null);
      return avlm::io::run_monitor(mon, std::cout);
    }
    if (*ate) {
      ate_opts.covariates = split_list(ate_covs);
      if (!ate_mu.empty()) {
        const auto mu = split_doubles(ate_mu);
        Eigen::VectorXd v(static_cast<Eigen::Index>(mu.size()));
        for (std::size_t i = 0; i < mu.size(); ++i) {
          v(static_cast<Eigen::Index>(i)) = mu[i];
        }
        ate_opts.config.mu_m = v;
      }
      ate_opts.config.include_interactions = ate_interactions;
      if (ate_tau_mde > 0.0) {
        if (!(ate_sigma_pre > 0.0)) {
          std::cout << "error: --tau-mde requires --sigma-pre\n";
          return avlm::io::kExitError;
        }
        ate_opts.config.lambda = avlm::lambda_recommend(
            ate_sigma_pre, ate_tau_mde, ate_opts.config.rho);
      }
      if (ate_sigma != "auto") {
        ate_opts.sigma_override = true;
        if (ate_sigma == "model") {
          ate_opts.config.sigma_estimator = avlm::AteConfig::Sigma::ModelS2;
        } else if (ate_sigma == "hc0") {
          ate_opts.config.sigma_estimator =
              avlm::AteConfig::Sigma::SandwichHC0;
        } else {
          std::cout << "error: unknown --sigma-estimator '" << ate_sigma
                    << "'\n";
          return avlm::io::kExitError;
        }
      }
      return avlm::io::run_ate(ate_opts, std::cout);
    }
    if (*region) {
      if (reg_format != "auto") {
        reg.format = reg_format == "ndjson" ? avlm::io::Format::Ndjson
                                            : avlm::io::Format::Csv;
      }
      reg.schema.x = split_list(reg_x_cols);
      reg.schema.z = split_list(reg_z_cols);
      return avlm::io::run_region(reg, std::cout);
    }
    if (*power) {
      return avlm::io::run_power(pow_opts, std::cout);
    }
    if (*simulate) {
      sim.methods.clear();
      for (const auto& name : split_list(sim_methods)) {
        if (name == "exact") {
          sim.methods.push_back(avlm::Method::AnytimeExact);
        } else if (name == "asymptotic") {
          sim.methods.push_back(avlm::Method::AnytimeAsymptotic);
        } else if (name == "fixed") {
          sim.methods.push_back(avlm::Method::FixedNRepeated);
        } else {
          std::cout << "error: unknown method '" << name << "'\n";
          return avlm::io::kExitError;
        }
      }
      if (sim_phi > 0.0 && sim_lambda > 0.0 && sim_phi != sim_lambda) {
        std::cout << "error: give either --phi or --lambda, not both\n";
        return avlm::io::kExitError;
      }
      sim.mixture_param = sim_phi > 0.0 ? sim_phi
                          : sim_lambda > 0.0 ? sim_lambda
                                             : 1.0;
      return avlm::io::run_simulate(sim, std::cout);
    }
    if (*inspect) {
      return avlm::io::run_checkpoint_inspect(ckpt_path, std::cout);
    }
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << '\n';
    return avlm::io::kExitError;
  }
  return avlm::io::kExitError;
}
