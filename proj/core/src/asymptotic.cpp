#include "avlm/asymptotic.hpp"

#include <cmath>
#include <stdexcept>

#include "avlm/distributions.hpp"

namespace avlm {

namespace {

double log_det_llt(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  return 2.0 * Eigen::MatrixXd(llt.matrixL()).diagonal().array().log().sum();
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
}

void require_rho(double rho) {
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw std::invalid_argument("rho must lie in (0, 1)");
  }
}

}  // namespace

double log_bf_plugin(const RegressionSnapshot& snap, const MixtureSpec& mix,
                     const Eigen::VectorXd& delta0) {
  if (!snap.full_rank || !(snap.s2 > 0.0)) {
    throw std::logic_error("log_bf_plugin: requires full rank and s2 > 0");
  }
  const Eigen::Index d = snap.delta_hat.size();
  if (delta0.size() != d) {
    throw std::invalid_argument("log_bf_plugin: delta0 dimension mismatch");
  }
  const Eigen::MatrixXd m = mix.matrix(d) + snap.ztilde_gram;
  Eigen::LLT<Eigen::MatrixXd> llt_m(m);
  if (llt_m.info() != Eigen::Success) {
    throw std::invalid_argument("log_bf_plugin: Phi + Z~'Z~ not PD");
  }
  const Eigen::VectorXd dt = snap.delta_hat - delta0;
  const Eigen::VectorXd g = snap.ztilde_gram * dt;
  const double quad = g.dot(llt_m.solve(g)) / snap.s2;
  return 0.5 * (mix.log_det(d) - log_det_llt(llt_m)) + 0.5 * quad;
}

ConfidenceRegion asymptotic_region(const RegressionSnapshot& snap,
                                   const MixtureSpec& mix, double alpha) {
  require_alpha(alpha);
  ConfidenceRegion region;
  region.center = snap.delta_hat;
  if (!snap.full_rank) return region;

  const Eigen::Index d = snap.delta_hat.size();
  const Eigen::MatrixXd m = mix.matrix(d) + snap.ztilde_gram;
  Eigen::LLT<Eigen::MatrixXd> llt_m(m);
  if (llt_m.info() != Eigen::Success) {
    throw std::invalid_argument("asymptotic_region: Phi + Z~'Z~ not PD");
  }
  Eigen::MatrixXd dn = snap.ztilde_gram * llt_m.solve(snap.ztilde_gram);
  dn = 0.5 * (dn + dn.transpose().eval());
  region.kind = ConfidenceRegion::Kind::Ellipsoid;
  region.shape = std::move(dn);
  region.bound = snap.s2 * (log_det_llt(llt_m) - mix.log_det(d) -
                            2.0 * std::log(alpha));
  return region;
}

double log_bf_infinity(long n, Eigen::Index d, double lambda,
                       const Eigen::MatrixXd& omega_ztilde,
                       const Eigen::VectorXd& delta_hat, double s2,
                       const Eigen::VectorXd& delta0) {
  if (n < 1 || !(lambda > 0.0)) {
    throw std::invalid_argument("log_bf_infinity: need n >= 1, lambda > 0");
  }
  if (!(s2 > 0.0)) {
    throw std::invalid_argument("log_bf_infinity: requires s2 > 0");
  }
  if (omega_ztilde.rows() != d || omega_ztilde.cols() != d ||
      delta_hat.size() != d || delta0.size() != d) {
    throw std::invalid_argument("log_bf_infinity: dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(omega_ztilde);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("log_bf_infinity: Omega_ztilde not PD");
  }
  const double nn = static_cast<double>(n);
  const Eigen::VectorXd dt = delta_hat - delta0;
  const double quad = dt.dot(omega_ztilde * dt);
  return 0.5 * static_cast<double>(d) * std::log(lambda / (lambda + nn)) +
         0.5 * (nn * nn / (nn + lambda)) * quad / s2;
}

double log_bf_g(long n, Eigen::Index d, double lambda, double f_stat) {
  if (n < 1 || !(lambda > 0.0) || d < 1) {
    throw std::invalid_argument("log_bf_g: need n >= 1, d >= 1, lambda > 0");
  }
  const double nn = static_cast<double>(n);
  const double half_d = 0.5 * static_cast<double>(d);
  return half_d * std::log(lambda / (lambda + nn)) +
         half_d * (nn / (nn + lambda)) * f_stat;
}

double ate_radius(long n, double sigma_hat, double rho, double lambda,
                  double alpha) {
  require_alpha(alpha);
  require_rho(rho);
  if (n < 1 || !(sigma_hat >= 0.0) || !(lambda > 0.0)) {
    throw std::invalid_argument("ate_radius: bad arguments");
  }
  const double nn = static_cast<double>(n);
  const double width = ((lambda + nn) / nn) *
                       (std::log(lambda + nn) - std::log(lambda) -
                        2.0 * std::log(alpha));
  return sigma_hat / std::sqrt(nn * rho * (1.0 - rho)) * std::sqrt(width);
}

double lambda_recommend(double sigma_hat_pre, double tau_mde, double rho) {
  require_rho(rho);
  if (!(sigma_hat_pre > 0.0) || !(tau_mde > 0.0)) {
    throw std::invalid_argument("lambda_recommend: bad arguments");
  }
  return sigma_hat_pre * sigma_hat_pre /
         (tau_mde * tau_mde * rho * (1.0 - rho));
}

double relative_width(long n, double lambda, double alpha) {
  require_alpha(alpha);
  if (n < 1 || !(lambda > 0.0)) {
    throw std::invalid_argument("relative_width: bad arguments");
  }
  const double nn = static_cast<double>(n);
  const double cs = std::sqrt(((lambda + nn) / nn) *
                              (std::log(lambda + nn) - std::log(lambda) -
                               2.0 * std::log(alpha)));
  return cs / std::sqrt(chi2_quantile(1.0, 1.0 - alpha));
}

SandwichAccumulator::SandwichAccumulator(Eigen::Index dim, double rho,
                                         Eigen::Index tau_index)
    : dim_(dim), rho_(rho), tau_index_(tau_index) {
  require_rho(rho);
  if (dim < 1 || tau_index < 0 || tau_index >= dim) {
    throw std::invalid_argument("SandwichAccumulator: bad dimensions");
  }
  omega_sum_ = Eigen::MatrixXd::Zero(dim, dim);
  delta_sum_ = Eigen::MatrixXd::Zero(dim, dim);
}

void SandwichAccumulator::add(const Eigen::VectorXd& w, double residual) {
  if (w.size() != dim_) {
    throw std::invalid_argument("SandwichAccumulator::add: dimension mismatch");
  }
  omega_sum_.selfadjointView<Eigen::Lower>().rankUpdate(w, 1.0);
  delta_sum_.selfadjointView<Eigen::Lower>().rankUpdate(w, residual * residual);
  ++n_;
}

double SandwichAccumulator::sigma2_hat() const {
  if (n_ == 0) return 0.0;
  const double nn = static_cast<double>(n_);
  const Eigen::MatrixXd omega =
      Eigen::MatrixXd(omega_sum_.selfadjointView<Eigen::Lower>()) / nn;
  const Eigen::MatrixXd delta =
      Eigen::MatrixXd(delta_sum_.selfadjointView<Eigen::Lower>()) / nn;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(omega);
  if (ldlt.info() != Eigen::Success ||
      ldlt.vectorD().minCoeff() <= 1e-12 * omega.diagonal().maxCoeff()) {
    throw std::logic_error("SandwichAccumulator: design not full rank");
  }
  const Eigen::MatrixXd half = ldlt.solve(delta);              // Omega^-1 Delta
  const Eigen::MatrixXd sandwich = ldlt.solve(half.transpose());  // ... Omega^-T
  const double v = sandwich(tau_index_, tau_index_);
  return rho_ * (1.0 - rho_) * (v > 0.0 ? v : 0.0);
}

double SandwichAccumulator::sigma_hat() const { return std::sqrt(sigma2_hat()); }

void AteConfig::validate() const {
  require_rho(rho);
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("AteConfig: lambda must be positive");
  }
  if (include_interactions && !mu_m.has_value()) {
    throw std::invalid_argument(
        "AteConfig: interaction centering requires covariate means mu_m");
  }
}

}  // namespace avlm
