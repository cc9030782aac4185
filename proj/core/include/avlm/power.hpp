#ifndef AVLM_POWER_HPP
#define AVLM_POWER_HPP

namespace avlm {

/**
 * The deterministic benchmark design: w_i = [1, 1] for even i, [1, 0] for
 * odd i (p = 1 intercept, d = 1 effect delta), residual variance sigma2.
 * Its projected Gram is closed form: ||Z~_n||^2 = n/4 for even n and
 * (n^2 - 1)/(4n) for odd n.  The power calculations below are specific to
 * this design; stochastic designs have no comparable finite-n bound.
 */
struct AlternatingDesign {
  double beta = 1.0;
  double delta = 0.2;
  double sigma2 = 1.5;

  double xi() const;  // standardized effect delta / sigma
  static double ztilde_sq(long n);
};

/**
 * Smallest n for which the fixed-n F test at level alpha has power at least
 * power_target against every standardized effect of magnitude >= xi_mde,
 * i.e. P[F(1, n-2, ||Z~_n||^2 xi_mde^2) > f_{1-alpha}(1, n-2)] >= target.
 * Throws when the target is unattainable.  The floor is n = 4, the minimal
 * identifiable design.
 */
long fixed_n_sample_size(double xi_mde, double alpha, double power_target,
                         const AlternatingDesign& design = {});

/**
 * Lower bound on the probability the sequential test has rejected by time n:
 * P[f_n > a_n(alpha, ||Z~_n||^2, xi_mde^-2)] under f_n ~
 * F(1, n-2, ||Z~_n||^2 xi_true^2), with a_n the interval threshold of the
 * exact d = 1 confidence sequence evaluated at phi = xi_mde^-2.
 */
double rejection_prob_at_n(long n, double xi_true, double xi_mde, double alpha,
                           const AlternatingDesign& design = {});

}  // namespace avlm

#endif  // AVLM_POWER_HPP
