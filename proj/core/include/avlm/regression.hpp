#ifndef AVLM_REGRESSION_HPP
#define AVLM_REGRESSION_HPP

#include <Eigen/Dense>
#include <optional>

namespace avlm {

/**
 * One observation of the partitioned linear model y = x'beta + z'delta + eps.
 *
 * `x` holds the nuisance covariates (including an explicit intercept column
 * if the caller wants one; the engine never injects one), `z` the
 * coefficients of interest.  p >= 0, d >= 1, all entries finite.
 */
struct DesignPoint {
  Eigen::VectorXd x;
  Eigen::VectorXd z;
  double y = 0.0;
};

/**
 * Streaming sufficient statistics (n, W'W, W'y, y'y) for the partitioned
 * design W = [X, Z].  The single mutable object in a stream: single writer,
 * no internal locking; snapshots are immutable and freely shareable.
 *
 * y'y and the Gram diagonal are accumulated with compensated (Kahan)
 * summation so that long streams (n ~ 1e5) retain the digits the batch
 * oracle tests check.  The carry terms are part of the resumable state.
 */
class SufficientStats {
 public:
  SufficientStats(Eigen::Index p, Eigen::Index d);

  /// Absorb one observation.  Throws std::invalid_argument on dimension
  /// mismatch or non-finite input; the statistics are unchanged on throw.
  void update(const DesignPoint& pt);

  long n() const { return n_; }
  Eigen::Index p() const { return p_; }
  Eigen::Index d() const { return d_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const Eigen::VectorXd& cross() const { return cross_; }
  double yty() const { return yty_; }

  const Eigen::VectorXd& gram_diag_comp() const { return gram_diag_comp_; }
  double yty_comp() const { return yty_comp_; }

  /// Rebuild from persisted state (checkpoint restore).
  static SufficientStats restore(Eigen::Index p, Eigen::Index d, long n,
                                 Eigen::MatrixXd gram, Eigen::VectorXd cross,
                                 double yty, Eigen::VectorXd gram_diag_comp,
                                 double yty_comp);

 private:
  Eigen::Index p_;
  Eigen::Index d_;
  long n_ = 0;
  Eigen::MatrixXd gram_;
  Eigen::VectorXd cross_;
  double yty_ = 0.0;
  Eigen::VectorXd gram_diag_comp_;
  double yty_comp_ = 0.0;
  Eigen::VectorXd w_;  // scratch for [x; z]
};

/**
 * Immutable per-n derived state: OLS estimates, residual variance, the
 * nuisance-projected Gram Z~'Z~, the maximal-invariant t vector and the F
 * statistic.  `full_rank` is false until the Gram factorization has all
 * pivots > 1e-10 * max(diagonal) and n > p + d; rank deficiency is a state,
 * not an error, and downstream tests treat it as "no evidence yet".
 */
struct RegressionSnapshot {
  long n = 0;
  long nu = 0;  // n - p - d
  bool full_rank = false;
  Eigen::VectorXd beta_hat;
  Eigen::VectorXd delta_hat;
  double s2 = 0.0;
  bool s2_clamped = false;  // negative-by-cancellation values clamped to 0
  Eigen::MatrixXd ztilde_gram;  // d x d, PD when full_rank
  std::optional<Eigen::VectorXd> t_vec;  // absent when s2 == 0
  double f_stat = 0.0;  // +inf marks infinite evidence (s2 == 0, delta_hat != 0)
};

RegressionSnapshot snapshot(const SufficientStats& stats);

/// Classical F statistic delta'Z~'Z~delta / (d s^2).  Requires a full-rank
/// snapshot; s2 == 0 with a nonzero estimate yields +infinity, not NaN.
double classical_f(const RegressionSnapshot& snap);

}  // namespace avlm

#endif  // AVLM_REGRESSION_HPP
