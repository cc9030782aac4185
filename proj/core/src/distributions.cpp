#include "avlm/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace avlm {

namespace {

constexpr double kPoissonTailTol = 1e-14;
constexpr double kQuantileRelTol = 1e-10;

void require_prob(double q) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw std::invalid_argument("quantile level must lie in (0, 1)");
  }
}

/// Smallest x with cdf(x) >= q, by geometric bracketing then bisection.
double invert_cdf(const std::function<double(double)>& cdf, double q,
                  double hint) {
  double hi = hint > 0.0 ? hint : 1.0;
  int guard = 0;
  while (cdf(hi) < q) {
    hi *= 2.0;
    if (++guard > 400) {
      throw std::runtime_error("invert_cdf: bracketing failed");
    }
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) >= q) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= kQuantileRelTol * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double ncf_cdf(const NoncentralF& dist, double x) {
  if (!(dist.d1 > 0.0) || !(dist.d2 > 0.0) || dist.lambda_nc < 0.0) {
    throw std::invalid_argument("ncf_cdf: bad distribution parameters");
  }
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;

  const double y = dist.d1 * x / (dist.d1 * x + dist.d2);
  const double half = 0.5 * dist.lambda_nc;
  const double b = 0.5 * dist.d2;
  if (half == 0.0) {
    return boost::math::ibeta(0.5 * dist.d1, b, y);
  }

  // Poisson(half) mixture of I_y(d1/2 + k, d2/2), expanded outward from the
  // modal index so large noncentralities need only O(sqrt(lambda)) terms.
  const auto log_pois = [half](long k) {
    return -half + static_cast<double>(k) * std::log(half) -
           std::lgamma(static_cast<double>(k) + 1.0);
  };
  const long k0 = static_cast<long>(half);
  double total = 0.0;
  double mass = 0.0;

  double w_up = std::exp(log_pois(k0));
  double w_down = w_up;
  // The beta terms decrease in k, so once the explored mass exceeds
  // 1 - tol the unexplored contribution is below tol on both sides.
  for (long k = k0; mass < 1.0 - kPoissonTailTol; ++k) {
    const double term = boost::math::ibeta(0.5 * dist.d1 + k, b, y);
    total += w_up * term;
    mass += w_up;
    if (w_up * term < kPoissonTailTol * (total + 1e-300) && k > k0 + 4) break;
    w_up *= half / static_cast<double>(k + 1);
  }
  for (long k = k0 - 1; k >= 0 && mass < 1.0 - kPoissonTailTol; --k) {
    w_down *= static_cast<double>(k + 1) / half;
    const double term = boost::math::ibeta(0.5 * dist.d1 + k, b, y);
    total += w_down * term;
    mass += w_down;
  }
  return total > 1.0 ? 1.0 : total;
}

double ncf_quantile(const NoncentralF& dist, double q) {
  require_prob(q);
  // Rough location hint from the distribution mean when it exists.
  double hint = 1.0;
  if (dist.d2 > 2.0) {
    hint = dist.d2 * (dist.d1 + dist.lambda_nc) /
           (dist.d1 * (dist.d2 - 2.0));
  }
  return invert_cdf([&dist](double x) { return ncf_cdf(dist, x); }, q,
                    4.0 * hint + 1.0);
}

double chi2_cdf(double dof, double x) {
  if (!(dof > 0.0)) {
    throw std::invalid_argument("chi2_cdf: dof must be positive");
  }
  if (!(x > 0.0)) return 0.0;
  return boost::math::gamma_p(0.5 * dof, 0.5 * x);
}

double chi2_quantile(double dof, double q) {
  require_prob(q);
  return invert_cdf([dof](double x) { return chi2_cdf(dof, x); }, q,
                    dof + 8.0);
}

double f_cdf(double d1, double d2, double x) {
  if (!(x > 0.0)) return 0.0;
  return boost::math::ibeta(0.5 * d1, 0.5 * d2, d1 * x / (d1 * x + d2));
}

double f_sf(double d1, double d2, double x) {
  if (!(x > 0.0)) return 1.0;
  return boost::math::ibetac(0.5 * d1, 0.5 * d2, d1 * x / (d1 * x + d2));
}

double f_quantile(double d1, double d2, double q) {
  require_prob(q);
  double hint = d2 > 2.0 ? d2 / (d2 - 2.0) : 1.0;
  return invert_cdf([d1, d2](double x) { return f_cdf(d1, d2, x); }, q,
                    4.0 * hint + 1.0);
}

}  // namespace avlm
