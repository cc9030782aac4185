#ifndef AVLM_DGP_HPP
#define AVLM_DGP_HPP

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "avlm/power.hpp"
#include "avlm/regression.hpp"
#include "avlm/rng.hpp"

namespace avlm {

/// Empirical arm sample: outcomes plus an optional pre-treatment outcome
/// column (aligned by index) for regression adjustment.
struct ArmSample {
  std::vector<double> y;
  std::vector<double> pre;

  bool has_pre() const { return !pre.empty(); }
  void validate() const;
};

/// Alternating deterministic design (see power.hpp) with Gaussian noise.
using AlternatingDgp = AlternatingDesign;

/**
 * Deliberately misspecified nonlinear outcome model with a centered
 * randomized treatment:
 *   y = 1 - 2 x1^2 - 2 sin x2 + 3 |x3| + z delta + eps,
 * eps ~ 1.5 * t_5, x ~ N(0, S) with S_ij = 0.8^|i-j|, z = T - rho,
 * T ~ Bernoulli(rho).  The analysis regressors are X = (1, x1, x2, x3)
 * and Z = z, so the fitted linear model omits the true nonlinearities.
 */
struct NonlinearModelDgp {
  double delta = 0.0;
  double rho = 0.5;
};

/**
 * Bootstrap resampling from empirical arm samples.  Under A/A mode both
 * arms draw outcomes from the control sample (a true null); otherwise each
 * arm draws from its own sample.  When pre-treatment outcomes are present
 * and `use_pre` is set, they enter the design as a nuisance covariate.
 */
struct BootstrapDgp {
  ArmSample control;
  ArmSample treatment;
  double rho = 0.5;
  bool aa_mode = false;
  bool use_pre = true;

  void validate() const;
};

/// Caller-supplied generator; draw(rng, i) must be deterministic in (rng, i).
struct CustomDgp {
  Eigen::Index p = 1;
  Eigen::Index d = 1;
  std::function<DesignPoint(Rng&, long)> draw;
};

using DgpSpec =
    std::variant<AlternatingDgp, NonlinearModelDgp, BootstrapDgp, CustomDgp>;

DesignPoint alternating_draw(Rng& rng, const AlternatingDgp& dgp, long i);
DesignPoint nonlinear_dgp_draw(Rng& rng, const NonlinearModelDgp& dgp);
DesignPoint bootstrap_dgp_draw(Rng& rng, const BootstrapDgp& dgp);

/// Draw observation i (1-based) of the given process.
DesignPoint dgp_draw(Rng& rng, const DgpSpec& dgp, long i);

Eigen::Index dgp_p(const DgpSpec& dgp);
Eigen::Index dgp_d(const DgpSpec& dgp);

/// Treatment probability when the process has one (nonlinear, bootstrap).
std::optional<double> dgp_rho(const DgpSpec& dgp);

const char* dgp_name(const DgpSpec& dgp);

}  // namespace avlm

#endif  // AVLM_DGP_HPP
