#ifndef AVLM_ASYMPTOTIC_HPP
#define AVLM_ASYMPTOTIC_HPP

#include <Eigen/Dense>
#include <optional>

#include "avlm/mixture.hpp"
#include "avlm/regression.hpp"
#include "avlm/seq_test.hpp"

namespace avlm {

/**
 * Plug-in log Bayes factor (scale treated as known and replaced by s_n):
 *   log B~ = 1/2 logdet(Phi / (Phi + Z~'Z~)) + 1/2 t' Z~ (Phi + Z~'Z~)^{-1} Z~' t.
 * Converges to the exact log B almost surely on null paths; not anytime-valid
 * on its own, and the two diverge under the alternative.
 */
double log_bf_plugin(const RegressionSnapshot& snap, const MixtureSpec& mix,
                     const Eigen::VectorXd& delta0);

/**
 * Asymptotic confidence sequence from inverting B~:
 *   ||delta - delta_hat||^2_{D_n} <= s^2 log(det(Phi + Z~'Z~) / (alpha^2 det Phi)),
 *   D_n = Z~'Z~ (Z~'Z~ + Phi)^{-1} Z~'Z~  (always PD at full rank).
 */
ConfidenceRegion asymptotic_region(const RegressionSnapshot& snap,
                                   const MixtureSpec& mix, double alpha);

/**
 * Limiting form under Phi = lambda * Omega_ztilde with the true limiting
 * Gram Omega_ztilde:
 *   log Binf = (d/2) log(lambda / (lambda + n))
 *            + 1/2 n^2/(n + lambda) (dh - d0)' Omega (dh - d0) / s^2.
 */
double log_bf_infinity(long n, Eigen::Index d, double lambda,
                       const Eigen::MatrixXd& omega_ztilde,
                       const Eigen::VectorXd& delta_hat, double s2,
                       const Eigen::VectorXd& delta0);

/// Omega_ztilde estimated by Z~'Z~ / n; needs only the classical F statistic:
///   log Bg = (d/2) log(lambda / (lambda + n)) + (d/2) (n / (n + lambda)) f.
double log_bf_g(long n, Eigen::Index d, double lambda, double f_stat);

/**
 * Radius of the nonparametric ATE confidence sequence
 *   r_n = sigma_hat / sqrt(n rho (1-rho)) *
 *         sqrt(((lambda + n)/n) log((lambda + n)/(lambda alpha^2))).
 * The reported interval keeps only this leading term; the o(n^-1/2)
 * remainder of the theory is not computable.
 */
double ate_radius(long n, double sigma_hat, double rho, double lambda,
                  double alpha);

/// Recommended mixture scale lambda = sigma_hat^2 / (tau_mde^2 rho (1-rho)).
double lambda_recommend(double sigma_hat_pre, double tau_mde, double rho);

/// Width of the ATE confidence sequence relative to the fixed-n interval:
/// sqrt(((lambda+n)/n) log((lambda+n)/(lambda alpha^2))) / sqrt(chi2_{1-alpha,1}).
double relative_width(long n, double lambda, double alpha);

/**
 * Streaming HC0 sandwich variance of the tau coordinate.  Feed (w, residual)
 * pairs; sigma_hat() returns sqrt(rho(1-rho) * [Omega^-1 Delta Omega^-T]_tt)
 * with Omega = (1/n) sum w w' and Delta = (1/n) sum resid^2 w w', which under
 * homoskedasticity estimates the same sigma^2 as the model-based s^2.
 */
class SandwichAccumulator {
 public:
  SandwichAccumulator(Eigen::Index dim, double rho, Eigen::Index tau_index);

  void add(const Eigen::VectorXd& w, double residual);

  long n() const { return n_; }
  double sigma_hat() const;
  double sigma2_hat() const;

 private:
  Eigen::Index dim_;
  double rho_;
  Eigen::Index tau_index_;
  long n_ = 0;
  Eigen::MatrixXd omega_sum_;
  Eigen::MatrixXd delta_sum_;
};

/// Configuration of the ATE confidence-sequence pipeline.
struct AteConfig {
  double rho = 0.5;                 // treatment probability, in (0, 1)
  double lambda = 1.0;              // mixture scale, > 0
  enum class Sigma { ModelS2, SandwichHC0 };
  Sigma sigma_estimator = Sigma::ModelS2;
  std::optional<Eigen::VectorXd> mu_m;  // covariate means, required for interactions
  bool include_interactions = false;

  void validate() const;
};

}  // namespace avlm

#endif  // AVLM_ASYMPTOTIC_HPP
