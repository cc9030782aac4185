#include "avlm/io/commands.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>

#include "avlm/io/checkpoint.hpp"
#include "avlm/io/trajectory.hpp"
#include "avlm/power.hpp"
#include "avlm/seq_test.hpp"

namespace avlm::io {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

MixtureSpec scalar_or_isotropic(double phi, Eigen::Index d) {
  return d == 1 ? MixtureSpec::scalar(phi) : MixtureSpec::isotropic(phi, d);
}

/// Coordinate-wise bounding box of a confidence region.
void region_box(const ConfidenceRegion& region, Eigen::Index d,
                Eigen::VectorXd& lo, Eigen::VectorXd& hi) {
  lo = Eigen::VectorXd::Constant(d, -kInf);
  hi = Eigen::VectorXd::Constant(d, kInf);
  switch (region.kind) {
    case ConfidenceRegion::Kind::Unbounded:
      return;
    case ConfidenceRegion::Kind::Interval:
      lo(0) = region.center(0) - region.radius;
      hi(0) = region.center(0) + region.radius;
      return;
    case ConfidenceRegion::Kind::Ellipsoid: {
      Eigen::LLT<Eigen::MatrixXd> llt(region.shape);
      for (Eigen::Index j = 0; j < d; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
        e(j) = 1.0;
        const double inv_jj = e.dot(llt.solve(e));
        const double r = std::sqrt(std::max(0.0, region.bound * inv_jj));
        lo(j) = region.center(j) - r;
        hi(j) = region.center(j) + r;
      }
      return;
    }
  }
}

double cs_width_term(long n, double lambda, double alpha) {
  const double nn = static_cast<double>(n);
  return ((lambda + nn) / nn) *
         (std::log(lambda + nn) - std::log(lambda) - 2.0 * std::log(alpha));
}

struct StreamState {
  std::optional<SufficientStats> stats;
  std::optional<TestTracker> tracker;
  std::unique_ptr<TrajectoryWriter> writer;
  long points_this_run = 0;
  TrajectoryRow last_row;
  bool have_row = false;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  return in;
}

void stream_points(const std::string& data, std::optional<Format> format,
                   const Schema& schema,
                   const std::function<void(const DesignPoint&)>& sink) {
  const Format fmt = format.value_or(detect_format(data));
  if (data == "-") {
    if (fmt == Format::Csv) {
      ingest_csv(std::cin, schema, sink);
    } else {
      ingest_ndjson(std::cin, sink);
    }
    return;
  }
  auto in = open_input(data);
  if (fmt == Format::Csv) {
    ingest_csv(in, schema, sink);
  } else {
    ingest_ndjson(in, sink);
  }
}

}  // namespace

MonitorMethod parse_monitor_method(const std::string& name) {
  if (name == "exact") return MonitorMethod::Exact;
  if (name == "plugin") return MonitorMethod::Plugin;
  if (name == "infinity") return MonitorMethod::Infinity;
  if (name == "g") return MonitorMethod::G;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected exact|plugin|infinity|g)");
}

int run_monitor(const MonitorOptions& opts, std::ostream& log) {
  try {
    StreamState st;
    std::ofstream traj_file;
    std::optional<Checkpoint> resumed;
    if (!opts.resume.empty()) {
      resumed = checkpoint_load(opts.resume);
      st.stats = resumed->stats;
    }

    const double alpha =
        resumed ? resumed->config.alpha : opts.alpha;
    const double phi = resumed && resumed->config.mixture_form != "lambda"
                           ? resumed->config.mixture_value
                           : opts.phi;
    const double lambda = resumed && resumed->config.mixture_form == "lambda"
                              ? resumed->config.mixture_value
                              : opts.lambda;
    const double omega = resumed ? resumed->config.omega : opts.omega;
    const MonitorMethod method =
        resumed ? parse_monitor_method(resumed->config.method) : opts.method;

    st.tracker.emplace(alpha);
    if (resumed) st.tracker->restore(resumed->p_running_min);

    Eigen::VectorXd delta0;
    if (resumed) {
      delta0 = resumed->config.delta0;
    }

    if ((method == MonitorMethod::Infinity) && !(omega > 0.0)) {
      throw std::invalid_argument(
          "method 'infinity' requires a positive --omega (limiting Gram of "
          "the centered effect column)");
    }

    if (!opts.out.empty()) {
      traj_file.open(opts.out, std::ios::binary | std::ios::trunc);
      if (!traj_file) {
        throw std::runtime_error("cannot open output file: " + opts.out);
      }
    }

    const auto process = [&](const DesignPoint& pt) {
      if (!st.stats) {
        st.stats.emplace(pt.x.size(), pt.z.size());
      }
      if (!st.writer && !opts.out.empty()) {
        st.writer = std::make_unique<TrajectoryWriter>(traj_file,
                                                       st.stats->d());
      }
      if (delta0.size() == 0) {
        const Eigen::Index d = st.stats->d();
        delta0 = Eigen::VectorXd::Zero(d);
        for (Eigen::Index j = 0;
             j < d && j < static_cast<Eigen::Index>(opts.delta0.size()); ++j) {
          delta0(j) = opts.delta0[static_cast<std::size_t>(j)];
        }
      }
      st.stats->update(pt);
      ++st.points_this_run;

      if (!opts.save_checkpoint.empty() &&
          st.stats->n() == opts.checkpoint_at) {
        Checkpoint ckpt;
        ckpt.stats = *st.stats;
        ckpt.p_running_min = st.tracker->p_running_min();
        ckpt.config.alpha = alpha;
        ckpt.config.delta0 = delta0;
        ckpt.config.method =
            method == MonitorMethod::Exact     ? "exact"
            : method == MonitorMethod::Plugin  ? "plugin"
            : method == MonitorMethod::Infinity ? "infinity"
                                                : "g";
        ckpt.config.mixture_form =
            (method == MonitorMethod::Infinity || method == MonitorMethod::G)
                ? "lambda"
                : (st.stats->d() == 1 ? "scalar" : "isotropic");
        ckpt.config.mixture_value =
            (method == MonitorMethod::Infinity || method == MonitorMethod::G)
                ? lambda
                : phi;
        ckpt.config.omega = omega;
        checkpoint_save(ckpt, opts.save_checkpoint);
      }

      const RegressionSnapshot snap = snapshot(*st.stats);
      if (!snap.full_rank) return;
      const Eigen::Index d = st.stats->d();
      const long n = snap.n;

      double log_bf = 0.0;
      Eigen::VectorXd ci_lo, ci_hi;
      switch (method) {
        case MonitorMethod::Exact: {
          const MixtureSpec mix = scalar_or_isotropic(phi, d);
          log_bf = d == 1 ? log_bayes_factor_t(snap, phi, delta0(0))
                          : log_bayes_factor(snap, mix, delta0);
          const ConfidenceRegion region =
              d == 1 ? confidence_interval_t(snap, phi, alpha)
                     : confidence_region_F(snap, mix, alpha);
          region_box(region, d, ci_lo, ci_hi);
          break;
        }
        case MonitorMethod::Plugin: {
          const MixtureSpec mix = scalar_or_isotropic(phi, d);
          if (snap.s2 > 0.0) {
            log_bf = log_bf_plugin(snap, mix, delta0);
          } else {
            log_bf = snap.f_stat > 0.0 ? kInf : 0.0;
          }
          region_box(asymptotic_region(snap, mix, alpha), d, ci_lo, ci_hi);
          break;
        }
        case MonitorMethod::Infinity: {
          if (d != 1) {
            throw std::invalid_argument("method 'infinity' requires d = 1");
          }
          const Eigen::MatrixXd om = Eigen::MatrixXd::Constant(1, 1, omega);
          if (snap.s2 > 0.0) {
            log_bf = log_bf_infinity(n, 1, lambda, om, snap.delta_hat,
                                     snap.s2, delta0);
          } else {
            log_bf = (snap.delta_hat - delta0).norm() > 0.0 ? kInf : 0.0;
          }
          const double r = std::sqrt(
              snap.s2 / (static_cast<double>(n) * omega) *
              cs_width_term(n, lambda, alpha));
          ci_lo = Eigen::VectorXd::Constant(1, snap.delta_hat(0) - r);
          ci_hi = Eigen::VectorXd::Constant(1, snap.delta_hat(0) + r);
          break;
        }
        case MonitorMethod::G: {
          if (d != 1) {
            throw std::invalid_argument("method 'g' requires d = 1");
          }
          if (snap.s2 > 0.0) {
            const double dt = snap.delta_hat(0) - delta0(0);
            const double f0 =
                dt * dt * snap.ztilde_gram(0, 0) / snap.s2;
            log_bf = log_bf_g(n, 1, lambda, f0);
          } else {
            log_bf = snap.f_stat > 0.0 ? kInf : 0.0;
          }
          const double f_star = cs_width_term(n, lambda, alpha);
          const double r =
              std::sqrt(f_star * snap.s2 / snap.ztilde_gram(0, 0));
          ci_lo = Eigen::VectorXd::Constant(1, snap.delta_hat(0) - r);
          ci_hi = Eigen::VectorXd::Constant(1, snap.delta_hat(0) + r);
          break;
        }
      }

      const TestResult res = st.tracker->update(n, log_bf);
      TrajectoryRow row;
      row.n = n;
      row.delta_hat = snap.delta_hat;
      row.se = Eigen::VectorXd(d);
      Eigen::LLT<Eigen::MatrixXd> llt(snap.ztilde_gram);
      for (Eigen::Index j = 0; j < d; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
        e(j) = 1.0;
        row.se(j) = std::sqrt(snap.s2 * e.dot(llt.solve(e)));
      }
      row.log_bf = res.log_bf;
      row.p_instant = res.p_instant;
      row.p_running_min = res.p_running_min;
      row.ci_lo = ci_lo;
      row.ci_hi = ci_hi;
      if (st.writer) st.writer->write(row);
      st.last_row = row;
      st.have_row = true;
    };

    stream_points(opts.data, opts.format, opts.schema, process);

    if (st.points_this_run == 0) {
      throw std::runtime_error("empty input: no observations streamed");
    }

    if (!opts.save_checkpoint.empty() && opts.checkpoint_at < 0) {
      Checkpoint ckpt;
      ckpt.stats = *st.stats;
      ckpt.p_running_min = st.tracker->p_running_min();
      ckpt.config.alpha = alpha;
      ckpt.config.delta0 = delta0.size() > 0
                               ? delta0
                               : Eigen::VectorXd::Zero(st.stats->d());
      ckpt.config.method =
          method == MonitorMethod::Exact      ? "exact"
          : method == MonitorMethod::Plugin   ? "plugin"
          : method == MonitorMethod::Infinity ? "infinity"
                                              : "g";
      ckpt.config.mixture_form =
          (method == MonitorMethod::Infinity || method == MonitorMethod::G)
              ? "lambda"
              : (st.stats->d() == 1 ? "scalar" : "isotropic");
      ckpt.config.mixture_value =
          (method == MonitorMethod::Infinity || method == MonitorMethod::G)
              ? lambda
              : phi;
      ckpt.config.omega = omega;
      checkpoint_save(ckpt, opts.save_checkpoint);
    }

    if (st.tracker->rejected()) {
      log << "verdict: reject";
      if (st.tracker->rejected_at_n() > 0) {
        log << " (first at n=" << st.tracker->rejected_at_n() << ")";
      }
      log << ", p_running_min=" << format_g17(st.tracker->p_running_min())
          << ", n=" << st.stats->n() << '\n';
      return kExitReject;
    }
    log << "verdict: no-reject, p_running_min="
        << format_g17(st.tracker->p_running_min()) << ", n=" << st.stats->n()
        << '\n';
    return kExitNoReject;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run_ate(const AteOptions& opts, std::ostream& log) {
  try {
    AteConfig config = opts.config;
    config.validate();
    const double rho = config.rho;
    const auto m = static_cast<Eigen::Index>(opts.covariates.size());
    if (config.include_interactions) {
      if (!config.mu_m ||
          config.mu_m->size() != static_cast<Eigen::Index>(m)) {
        throw std::invalid_argument(
            "interaction centering requires one mu_m entry per covariate");
      }
    }
    if (!opts.sigma_override) {
      config.sigma_estimator =
          (rho == 0.5 || config.include_interactions)
              ? AteConfig::Sigma::ModelS2
              : AteConfig::Sigma::SandwichHC0;
    }
    if (!(opts.alpha > 0.0) || !(opts.alpha < 1.0)) {
      throw std::invalid_argument("alpha must lie in (0, 1)");
    }

    const Eigen::Index p = 1 + m + (config.include_interactions ? m : 0);
    SufficientStats stats(p, 1);
    SandwichAccumulator sandwich(p + 1, rho, p);
    TestTracker tracker(opts.alpha);

    std::ofstream traj_file;
    std::unique_ptr<TrajectoryWriter> writer;
    if (!opts.out.empty()) {
      traj_file.open(opts.out, std::ios::binary | std::ios::trunc);
      if (!traj_file) {
        throw std::runtime_error("cannot open output file: " + opts.out);
      }
      writer = std::make_unique<TrajectoryWriter>(traj_file, 1);
    }

    std::vector<std::string> columns;
    columns.push_back(opts.y_column);
    columns.push_back(opts.treatment_column);
    columns.insert(columns.end(), opts.covariates.begin(),
                   opts.covariates.end());

    long points = 0;
    const Eigen::MatrixXd omega_m =
        Eigen::MatrixXd::Constant(1, 1, rho * (1.0 - rho));
    auto in = open_input(opts.data);
    ingest_columns(in, columns, [&](const std::vector<double>& row) {
      const double y = row[0];
      const double t = row[1];
      if (t != 0.0 && t != 1.0) {
        throw std::runtime_error("treatment column must be 0/1, got " +
                                 std::to_string(t));
      }
      DesignPoint pt;
      pt.y = y;
      pt.x = Eigen::VectorXd(p);
      pt.x(0) = 1.0;
      for (Eigen::Index j = 0; j < m; ++j) pt.x(1 + j) = row[2 + j];
      if (config.include_interactions) {
        for (Eigen::Index j = 0; j < m; ++j) {
          pt.x(1 + m + j) = t * (row[2 + j] - (*config.mu_m)(j));
        }
      }
      pt.z = Eigen::VectorXd::Constant(1, t - rho);
      stats.update(pt);
      ++points;

      const RegressionSnapshot snap = snapshot(stats);
      if (!snap.full_rank) return;

      Eigen::VectorXd w(p + 1);
      w.head(p) = pt.x;
      w(p) = pt.z(0);
      const double resid =
          y - pt.x.dot(snap.beta_hat) - pt.z(0) * snap.delta_hat(0);
      sandwich.add(w, resid);

      const double sigma2 =
          config.sigma_estimator == AteConfig::Sigma::ModelS2
              ? snap.s2
              : sandwich.sigma2_hat();
      const double sigma_hat = std::sqrt(std::max(0.0, sigma2));
      const long n = snap.n;
      const double tau_hat = snap.delta_hat(0);

      double log_bf;
      if (sigma2 > 0.0) {
        log_bf = log_bf_infinity(n, 1, config.lambda, omega_m,
                                 snap.delta_hat, sigma2,
                                 Eigen::VectorXd::Zero(1));
      } else {
        log_bf = tau_hat != 0.0 ? kInf : 0.0;
      }
      const TestResult res = tracker.update(n, log_bf);

      const double r =
          ate_radius(n, sigma_hat, rho, config.lambda, opts.alpha);
      TrajectoryRow out_row;
      out_row.n = n;
      out_row.delta_hat = Eigen::VectorXd::Constant(1, tau_hat);
      out_row.se = Eigen::VectorXd::Constant(
          1, sigma_hat / std::sqrt(static_cast<double>(n) * rho * (1.0 - rho)));
      out_row.log_bf = res.log_bf;
      out_row.p_instant = res.p_instant;
      out_row.p_running_min = res.p_running_min;
      out_row.ci_lo = Eigen::VectorXd::Constant(1, tau_hat - r);
      out_row.ci_hi = Eigen::VectorXd::Constant(1, tau_hat + r);
      if (writer) writer->write(out_row);
    });

    if (points == 0) {
      throw std::runtime_error("empty input: no observations streamed");
    }
    if (tracker.rejected()) {
      log << "verdict: reject (first at n=" << tracker.rejected_at_n()
          << "), p_running_min=" << format_g17(tracker.p_running_min())
          << ", n=" << stats.n() << '\n';
      return kExitReject;
    }
    log << "verdict: no-reject, p_running_min="
        << format_g17(tracker.p_running_min()) << ", n=" << stats.n() << '\n';
    return kExitNoReject;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run_region(const RegionOptions& opts, std::ostream& log) {
  try {
    std::optional<SufficientStats> stats;
    stream_points(opts.data, opts.format, opts.schema,
                  [&](const DesignPoint& pt) {
                    if (!stats) stats.emplace(pt.x.size(), pt.z.size());
                    stats->update(pt);
                  });
    if (!stats || stats->n() == 0) {
      throw std::runtime_error("empty input: no observations streamed");
    }
    const RegressionSnapshot snap = snapshot(*stats);
    const Eigen::Index d = stats->d();
    const ConfidenceRegion region =
        confidence_region_F(snap, scalar_or_isotropic(opts.phi, d),
                            opts.alpha);

    nlohmann::json doc;
    doc["n"] = snap.n;
    doc["alpha"] = format_g17(opts.alpha);
    doc["full_rank"] = snap.full_rank;
    nlohmann::json center = nlohmann::json::array();
    for (Eigen::Index j = 0; j < d; ++j) {
      center.push_back(format_g17(snap.delta_hat(j)));
    }
    doc["center"] = center;
    if (region.kind == ConfidenceRegion::Kind::Ellipsoid) {
      doc["kind"] = "ellipsoid";
      doc["bound"] = format_g17(region.bound);
      nlohmann::json shape = nlohmann::json::array();
      for (Eigen::Index i = 0; i < d; ++i) {
        nlohmann::json row_j = nlohmann::json::array();
        for (Eigen::Index j = 0; j < d; ++j) {
          row_j.push_back(format_g17(region.shape(i, j)));
        }
        shape.push_back(row_j);
      }
      doc["shape"] = shape;
    } else {
      doc["kind"] = "unbounded";
    }

    if (!opts.out.empty()) {
      std::ofstream out(opts.out, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw std::runtime_error("cannot open output file: " + opts.out);
      }
      out << doc.dump(2) << '\n';
    } else {
      log << doc.dump(2) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run_power(const PowerOptions& opts, std::ostream& log) {
  try {
    const long n =
        fixed_n_sample_size(opts.xi_mde, opts.alpha, opts.power_target);
    log << n << '\n';
    const double xi_true = opts.xi_true > 0.0 ? opts.xi_true : opts.xi_mde;
    if (opts.at_n > 0) {
      log << "rejection_prob_at_n(" << opts.at_n << ") = "
          << format_g17(rejection_prob_at_n(opts.at_n, xi_true, opts.xi_mde,
                                            opts.alpha))
          << '\n';
    }
    if (!opts.curve_out.empty()) {
      const long max_n = opts.curve_max_n > 0 ? opts.curve_max_n : 2 * n;
      std::ofstream out(opts.curve_out, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw std::runtime_error("cannot open output file: " + opts.curve_out);
      }
      out << "n,rejection_prob_lower_bound\n";
      for (long i = std::max(3L, opts.curve_step); i <= max_n;
           i += opts.curve_step) {
        out << i << ','
            << format_g17(
                   rejection_prob_at_n(i, xi_true, opts.xi_mde, opts.alpha))
            << '\n';
      }
    }
    return 0;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

namespace {

ArmSample read_arm_csv(const std::string& path) {
  auto in = open_input(path);
  std::string header_line;
  if (!std::getline(in, header_line)) {
    throw std::runtime_error("empty arm sample file: " + path);
  }
  in.seekg(0);
  const bool has_pre = header_line.find("pre") != std::string::npos;
  ArmSample arm;
  const std::vector<std::string> cols =
      has_pre ? std::vector<std::string>{"y", "pre"}
              : std::vector<std::string>{"y"};
  ingest_columns(in, cols, [&](const std::vector<double>& row) {
    arm.y.push_back(row[0]);
    if (has_pre) arm.pre.push_back(row[1]);
  });
  arm.validate();
  return arm;
}

}  // namespace

int run_simulate(const SimulateCliOptions& opts, std::ostream& log) {
  try {
    if (opts.replications < 1) {
      throw std::invalid_argument("replications must be >= 1");
    }
    DgpSpec dgp;
    if (opts.dgp == "alternating") {
      dgp = AlternatingDgp{opts.beta, opts.delta, opts.sigma2};
    } else if (opts.dgp == "nonlinear") {
      dgp = NonlinearModelDgp{opts.nonlinear_delta, opts.rho};
    } else if (opts.dgp == "bootstrap") {
      BootstrapDgp bs;
      bs.control = read_arm_csv(opts.control_file);
      if (!opts.treatment_file.empty()) {
        bs.treatment = read_arm_csv(opts.treatment_file);
      }
      bs.rho = opts.rho;
      bs.aa_mode = opts.aa_mode || opts.treatment_file.empty();
      bs.use_pre = opts.use_pre;
      dgp = std::move(bs);
    } else {
      throw std::invalid_argument("unknown dgp '" + opts.dgp +
                                  "' (expected alternating|nonlinear|bootstrap)");
    }

    SimulateOptions sim;
    sim.alpha = opts.alpha;
    sim.mixture_param = opts.mixture_param;
    sim.n_max = opts.n_max;
    sim.replications = opts.replications;
    sim.base_seed = opts.seed;
    sim.threads = opts.threads;

    const auto results = simulate_stopping_times(dgp, opts.methods, sim);

    std::ofstream out;
    if (!opts.out.empty()) {
      out.open(opts.out, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw std::runtime_error("cannot open output file: " + opts.out);
      }
      out << "n,ecdf,method,dgp\n";
    }
    const char* name = dgp_name(dgp);
    for (std::size_t m = 0; m < opts.methods.size(); ++m) {
      const auto& samples = results[m];
      const long rejected = count_rejections(samples);
      log << "method=" << method_name(opts.methods[m]) << " rejected="
          << rejected << "/" << opts.replications
          << " censored=" << (opts.replications - rejected);
      if (rejected > 0) {
        log << " mean_tau=" << format_g17(mean_stopping_time(samples))
            << " median_tau=" << format_g17(median_stopping_time(samples));
      }
      log << '\n';
      if (out.is_open()) {
        for (const auto& row : ecdf_summary(samples)) {
          out << row.n << ',' << format_g17(row.ecdf) << ','
              << method_name(opts.methods[m]) << ',' << name << '\n';
        }
      }
    }
    return 0;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run_checkpoint_inspect(const std::string& path, std::ostream& log) {
  try {
    const Checkpoint ckpt = checkpoint_load(path);
    const std::string reserialized = checkpoint_to_json(ckpt);
    const Checkpoint again = checkpoint_from_json(reserialized);
    const bool stable = checkpoint_to_json(again) == reserialized;
    log << "version: " << Checkpoint::kVersion << '\n'
        << "n: " << ckpt.stats.n() << ", p: " << ckpt.stats.p()
        << ", d: " << ckpt.stats.d() << '\n'
        << "alpha: " << format_g17(ckpt.config.alpha)
        << ", method: " << ckpt.config.method << ", mixture: "
        << ckpt.config.mixture_form << "="
        << format_g17(ckpt.config.mixture_value) << '\n'
        << "p_running_min: " << format_g17(ckpt.p_running_min) << '\n'
        << "round_trip: " << (stable ? "ok" : "UNSTABLE") << '\n';
    return stable ? 0 : kExitError;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace avlm::io
