#ifndef AVLM_DISTRIBUTIONS_HPP
#define AVLM_DISTRIBUTIONS_HPP

namespace avlm {

/**
 * Noncentral F distribution F(d1, d2, lambda_nc).  The CDF is the Poisson
 * mixture of regularized incomplete beta functions, truncated when the
 * unexplored Poisson tail mass drops below 1e-14; absolute accuracy target
 * 1e-10 for lambda_nc <= 500.
 */
struct NoncentralF {
  double d1 = 1.0;
  double d2 = 1.0;
  double lambda_nc = 0.0;
};

double ncf_cdf(const NoncentralF& dist, double x);

/// Quantile by bracketing + bisection on ncf_cdf, to 1e-10 relative.
double ncf_quantile(const NoncentralF& dist, double q);

/// Central chi-squared CDF and quantile.
double chi2_cdf(double dof, double x);
double chi2_quantile(double dof, double q);

/// Central F helpers for fixed-n comparators.
double f_cdf(double d1, double d2, double x);
double f_sf(double d1, double d2, double x);
double f_quantile(double d1, double d2, double q);

}  // namespace avlm

#endif  // AVLM_DISTRIBUTIONS_HPP
