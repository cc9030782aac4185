#include "avlm/mixture.hpp"

#include <cmath>
#include <stdexcept>

namespace avlm {

namespace {

void require_spd(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  if (!m.isApprox(m.transpose(), 1e-12)) {
    throw std::invalid_argument(std::string(what) + ": matrix must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(std::string(what) +
                                ": matrix must be positive definite");
  }
}

}  // namespace

MixtureSpec MixtureSpec::scalar(double phi, Provenance prov) {
  if (!(phi > 0.0) || !std::isfinite(phi)) {
    throw std::invalid_argument("MixtureSpec::scalar: phi must be positive");
  }
  MixtureSpec m;
  m.form_ = Form::Scalar;
  m.prov_ = prov;
  m.phi_ = phi;
  return m;
}

MixtureSpec MixtureSpec::general(Eigen::MatrixXd phi, Provenance prov) {
  require_spd(phi, "MixtureSpec::general");
  MixtureSpec m;
  m.form_ = Form::GeneralSPD;
  m.prov_ = prov;
  m.mat_ = std::move(phi);
  return m;
}

MixtureSpec MixtureSpec::scaled_omega(double lambda, Eigen::MatrixXd omega,
                                      Provenance prov) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument(
        "MixtureSpec::scaled_omega: lambda must be positive");
  }
  require_spd(omega, "MixtureSpec::scaled_omega");
  MixtureSpec m;
  m.form_ = Form::ScaledOmega;
  m.prov_ = prov;
  m.lambda_ = lambda;
  m.mat_ = std::move(omega);
  return m;
}

MixtureSpec MixtureSpec::isotropic(double scale, Eigen::Index d,
                                   Provenance prov) {
  if (!(scale > 0.0) || !std::isfinite(scale) || d < 1) {
    throw std::invalid_argument("MixtureSpec::isotropic: bad arguments");
  }
  return general(scale * Eigen::MatrixXd::Identity(d, d), prov);
}

Eigen::MatrixXd MixtureSpec::matrix(Eigen::Index d) const {
  switch (form_) {
    case Form::Scalar:
      if (d != 1) {
        throw std::invalid_argument("MixtureSpec: scalar form requires d = 1");
      }
      return Eigen::MatrixXd::Constant(1, 1, phi_);
    case Form::GeneralSPD:
      if (mat_.rows() != d) {
        throw std::invalid_argument("MixtureSpec: dimension mismatch");
      }
      return mat_;
    case Form::ScaledOmega:
      if (mat_.rows() != d) {
        throw std::invalid_argument("MixtureSpec: dimension mismatch");
      }
      return lambda_ * mat_;
  }
  throw std::logic_error("MixtureSpec: unreachable");
}

double MixtureSpec::log_det(Eigen::Index d) const {
  if (form_ == Form::Scalar) {
    if (d != 1) {
      throw std::invalid_argument("MixtureSpec: scalar form requires d = 1");
    }
    return std::log(phi_);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(matrix(d));
  return 2.0 * Eigen::MatrixXd(llt.matrixL()).diagonal().array().log().sum();
}

double MixtureSpec::scalar_phi() const {
  if (form_ == Form::Scalar) return phi_;
  if (mat_.rows() == 1) {
    return form_ == Form::ScaledOmega ? lambda_ * mat_(0, 0) : mat_(0, 0);
  }
  throw std::logic_error("MixtureSpec::scalar_phi: not one-dimensional");
}

double MixtureSpec::lambda() const {
  if (form_ != Form::ScaledOmega) {
    throw std::logic_error("MixtureSpec::lambda: not ScaledOmega form");
  }
  return lambda_;
}

}  // namespace avlm
