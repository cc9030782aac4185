#include "avlm/dgp.hpp"

#include <cmath>
#include <stdexcept>

namespace avlm {

namespace {

// Cholesky factor of the AR-like covariance S_ij = 0.8^|i-j|, 3x3.
const Eigen::Matrix3d& nonlinear_cov_chol() {
  static const Eigen::Matrix3d l = [] {
    Eigen::Matrix3d s;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) s(i, j) = std::pow(0.8, std::abs(i - j));
    }
    return Eigen::Matrix3d(Eigen::LLT<Eigen::Matrix3d>(s).matrixL());
  }();
  return l;
}

}  // namespace

void ArmSample::validate() const {
  if (y.empty()) {
    throw std::invalid_argument("ArmSample: outcome sample must be nonempty");
  }
  if (!pre.empty() && pre.size() != y.size()) {
    throw std::invalid_argument(
        "ArmSample: pre-treatment column must align with outcomes");
  }
}

void BootstrapDgp::validate() const {
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw std::invalid_argument("BootstrapDgp: rho must lie in (0, 1)");
  }
  control.validate();
  if (!aa_mode) treatment.validate();
  if (use_pre && !control.has_pre()) {
    throw std::invalid_argument(
        "BootstrapDgp: use_pre requires pre-treatment outcomes");
  }
  if (use_pre && !aa_mode && !treatment.has_pre()) {
    throw std::invalid_argument(
        "BootstrapDgp: use_pre requires pre-treatment outcomes in both arms");
  }
}

DesignPoint alternating_draw(Rng& rng, const AlternatingDgp& dgp, long i) {
  DesignPoint pt;
  pt.x = Eigen::VectorXd::Ones(1);
  pt.z = Eigen::VectorXd::Zero(1);
  pt.z(0) = (i % 2 == 0) ? 1.0 : 0.0;
  pt.y = dgp.beta + dgp.delta * pt.z(0) +
         std::sqrt(dgp.sigma2) * rng.normal();
  return pt;
}

DesignPoint nonlinear_dgp_draw(Rng& rng, const NonlinearModelDgp& dgp) {
  Eigen::Vector3d g(rng.normal(), rng.normal(), rng.normal());
  const Eigen::Vector3d x = nonlinear_cov_chol() * g;
  const double z = (rng.bernoulli(dgp.rho) ? 1.0 : 0.0) - dgp.rho;
  const double eps = 1.5 * rng.student_t(5);
  DesignPoint pt;
  pt.x = Eigen::VectorXd(4);
  pt.x << 1.0, x(0), x(1), x(2);
  pt.z = Eigen::VectorXd::Constant(1, z);
  pt.y = 1.0 - 2.0 * x(0) * x(0) - 2.0 * std::sin(x(1)) +
         3.0 * std::abs(x(2)) + z * dgp.delta + eps;
  return pt;
}

DesignPoint bootstrap_dgp_draw(Rng& rng, const BootstrapDgp& dgp) {
  dgp.validate();
  const bool treated = rng.bernoulli(dgp.rho);
  const ArmSample& arm =
      (treated && !dgp.aa_mode) ? dgp.treatment : dgp.control;
  const std::size_t idx = rng.uniform_index(arm.y.size());
  DesignPoint pt;
  if (dgp.use_pre && arm.has_pre()) {
    pt.x = Eigen::VectorXd(2);
    pt.x << 1.0, arm.pre[idx];
  } else {
    pt.x = Eigen::VectorXd::Ones(1);
  }
  pt.z = Eigen::VectorXd::Constant(1, (treated ? 1.0 : 0.0) - dgp.rho);
  pt.y = arm.y[idx];
  return pt;
}

DesignPoint dgp_draw(Rng& rng, const DgpSpec& dgp, long i) {
  return std::visit(
      [&rng, i](const auto& spec) -> DesignPoint {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, AlternatingDgp>) {
          return alternating_draw(rng, spec, i);
        } else if constexpr (std::is_same_v<T, NonlinearModelDgp>) {
          return nonlinear_dgp_draw(rng, spec);
        } else if constexpr (std::is_same_v<T, BootstrapDgp>) {
          return bootstrap_dgp_draw(rng, spec);
        } else {
          return spec.draw(rng, i);
        }
      },
      dgp);
}

Eigen::Index dgp_p(const DgpSpec& dgp) {
  return std::visit(
      [](const auto& spec) -> Eigen::Index {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, AlternatingDgp>) {
          return 1;
        } else if constexpr (std::is_same_v<T, NonlinearModelDgp>) {
          return 4;
        } else if constexpr (std::is_same_v<T, BootstrapDgp>) {
          return spec.use_pre && spec.control.has_pre() ? 2 : 1;
        } else {
          return spec.p;
        }
      },
      dgp);
}

Eigen::Index dgp_d(const DgpSpec& dgp) {
  if (const auto* custom = std::get_if<CustomDgp>(&dgp)) return custom->d;
  return 1;
}

std::optional<double> dgp_rho(const DgpSpec& dgp) {
  if (const auto* nl = std::get_if<NonlinearModelDgp>(&dgp)) return nl->rho;
  if (const auto* bs = std::get_if<BootstrapDgp>(&dgp)) return bs->rho;
  return std::nullopt;
}

const char* dgp_name(const DgpSpec& dgp) {
  return std::visit(
      [](const auto& spec) -> const char* {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, AlternatingDgp>) {
          return "alternating";
        } else if constexpr (std::is_same_v<T, NonlinearModelDgp>) {
          return "nonlinear";
        } else if constexpr (std::is_same_v<T, BootstrapDgp>) {
          return "bootstrap";
        } else {
          return "custom";
        }
      },
      dgp);
}

}  // namespace avlm
