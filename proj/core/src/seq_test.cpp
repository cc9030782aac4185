#include "avlm/seq_test.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace avlm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
}

double log_det_llt(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  return 2.0 * Eigen::MatrixXd(llt.matrixL()).diagonal().array().log().sum();
}

}  // namespace

double log_bayes_factor(const RegressionSnapshot& snap, const MixtureSpec& mix,
                        const Eigen::VectorXd& delta0) {
  if (!snap.full_rank) return 0.0;
  const Eigen::Index d = snap.delta_hat.size();
  if (delta0.size() != d) {
    throw std::invalid_argument("log_bayes_factor: delta0 dimension mismatch");
  }

  const Eigen::MatrixXd phi = mix.matrix(d);
  const Eigen::MatrixXd m = phi + snap.ztilde_gram;
  Eigen::LLT<Eigen::MatrixXd> llt_m(m);
  if (llt_m.info() != Eigen::Success) {
    throw std::invalid_argument("log_bayes_factor: Phi + Z~'Z~ not PD");
  }
  const double log_det_phi = mix.log_det(d);
  const double log_det_m = log_det_llt(llt_m);
  const double det_term = 0.5 * (log_det_phi - log_det_m);

  const Eigen::VectorXd dt = snap.delta_hat - delta0;
  const Eigen::VectorXd g = snap.ztilde_gram * dt;
  const double q_full = dt.dot(g);
  double q_shrunk = q_full - g.dot(llt_m.solve(g));
  if (q_shrunk < 0.0) q_shrunk = 0.0;

  if (snap.s2 <= 0.0) {
    return q_full > 0.0 ? kInf : det_term;
  }
  const double den = static_cast<double>(snap.nu) * snap.s2;
  const double half_power = 0.5 * static_cast<double>(snap.nu + d);
  return det_term -
         half_power * (std::log1p(q_shrunk / den) - std::log1p(q_full / den));
}

double log_bayes_factor_t(const RegressionSnapshot& snap, double phi,
                          double delta0) {
  if (!(phi > 0.0)) {
    throw std::invalid_argument("log_bayes_factor_t: phi must be positive");
  }
  if (!snap.full_rank) return 0.0;
  if (snap.delta_hat.size() != 1) {
    throw std::invalid_argument("log_bayes_factor_t: requires d = 1");
  }
  const double z2 = snap.ztilde_gram(0, 0);
  const double r = phi / (phi + z2);
  const double dt = snap.delta_hat(0) - delta0;
  if (snap.s2 <= 0.0) {
    return dt != 0.0 ? kInf : 0.5 * std::log(r);
  }
  const double nu = static_cast<double>(snap.nu);
  const double t2 = dt * dt * z2 / snap.s2;
  return 0.5 * std::log(r) -
         0.5 * (nu + 1.0) * (std::log1p(r * t2 / nu) - std::log1p(t2 / nu));
}

double sequential_p(double log_bf) {
  if (log_bf <= 0.0) return 1.0;
  return std::exp(-log_bf);
}

TestTracker::TestTracker(double alpha) : alpha_(alpha) { require_alpha(alpha); }

TestResult TestTracker::update(long n, double log_bf) {
  TestResult res;
  res.n = n;
  res.log_bf = log_bf;
  res.p_instant = sequential_p(log_bf);
  if (res.p_instant < p_running_min_) p_running_min_ = res.p_instant;
  res.p_running_min = p_running_min_;
  if (!rejected_ && p_running_min_ <= alpha_) {
    rejected_ = true;
    rejected_at_n_ = n;
  }
  res.rejected_at_alpha = rejected_;
  return res;
}

void TestTracker::restore(double p_running_min) {
  if (!(p_running_min >= 0.0) || !(p_running_min <= 1.0)) {
    throw std::invalid_argument("TestTracker::restore: bad p_running_min");
  }
  p_running_min_ = p_running_min;
  if (p_running_min_ <= alpha_) rejected_ = true;
}

ConfidenceRegion confidence_region_F(const RegressionSnapshot& snap,
                                     const MixtureSpec& mix, double alpha) {
  require_alpha(alpha);
  ConfidenceRegion region;
  region.center = snap.delta_hat;
  if (!snap.full_rank) return region;  // all of R^d pre-identifiability

  const Eigen::Index d = snap.delta_hat.size();
  const Eigen::MatrixXd phi = mix.matrix(d);
  const Eigen::MatrixXd m = phi + snap.ztilde_gram;
  Eigen::LLT<Eigen::MatrixXd> llt_m(m);
  if (llt_m.info() != Eigen::Success) {
    throw std::invalid_argument("confidence_region_F: Phi + Z~'Z~ not PD");
  }
  const double log_k = (2.0 * std::log(alpha) + mix.log_det(d) -
                        log_det_llt(llt_m)) /
                       static_cast<double>(snap.nu + d);
  const double k = std::exp(log_k);

  Eigen::MatrixXd a = (k - 1.0) * snap.ztilde_gram +
                      snap.ztilde_gram * llt_m.solve(snap.ztilde_gram);
  a = 0.5 * (a + a.transpose().eval());

  Eigen::LDLT<Eigen::MatrixXd> ldlt_a(a);
  if (ldlt_a.info() != Eigen::Success || ldlt_a.vectorD().minCoeff() <= 0.0) {
    return region;  // sublevel set unbounded in some direction
  }
  region.kind = ConfidenceRegion::Kind::Ellipsoid;
  region.shape = std::move(a);
  region.bound = static_cast<double>(snap.nu) * snap.s2 * (1.0 - k);
  return region;
}

ConfidenceRegion confidence_interval_t(const RegressionSnapshot& snap,
                                       double phi, double alpha) {
  require_alpha(alpha);
  if (!(phi > 0.0)) {
    throw std::invalid_argument("confidence_interval_t: phi must be positive");
  }
  ConfidenceRegion region;
  region.kind = ConfidenceRegion::Kind::Interval;
  region.center = snap.delta_hat;
  if (!snap.full_rank) return region;  // infinite radius
  if (snap.delta_hat.size() != 1) {
    throw std::invalid_argument("confidence_interval_t: requires d = 1");
  }
  const double z2 = snap.ztilde_gram(0, 0);
  const double r = phi / (phi + z2);
  const double nu = static_cast<double>(snap.nu);
  const double k = std::exp((std::log(r) + 2.0 * std::log(alpha)) / (nu + 1.0));
  const double den = k - r;
  if (den <= 0.0) return region;  // clamp boundary: radius stays +inf
  const double a_n = nu * (1.0 - k) / den;
  region.radius = std::sqrt(snap.s2 / z2) * std::sqrt(a_n);
  return region;
}

double phi_freq_optimal(double xi_mde) {
  if (!(xi_mde > 0.0)) {
    throw std::invalid_argument("phi_freq_optimal: xi_mde must be positive");
  }
  return 1.0 / (xi_mde * xi_mde);
}

double phi_bayes_optimal(double zeta) {
  if (!(zeta > 0.0)) {
    throw std::invalid_argument("phi_bayes_optimal: zeta must be positive");
  }
  return zeta;
}

}  // namespace avlm
