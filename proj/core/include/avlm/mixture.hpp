#ifndef AVLM_MIXTURE_HPP
#define AVLM_MIXTURE_HPP

#include <Eigen/Dense>

namespace avlm {

/**
 * The mixture (prior) precision Phi of the sequential test, with provenance
 * of how it was chosen.  Three parameterizations:
 *
 *   - Scalar(phi):           d = 1 only.
 *   - GeneralSPD(Phi):       any d; symmetric positive definite, checked by
 *                            Cholesky at construction.
 *   - ScaledOmega(lambda, Omega_ztilde): Phi = lambda * Omega, the
 *                            parameterization used by the asymptotic tests.
 *
 * The tuned one-dimensional choices are phi = xi_mde^-2 (frequentist) and
 * phi = zeta (Bayes).  For d > 1 the isotropic extension Phi = c * I via
 * `isotropic` is a convention, not a derived optimum.
 */
class MixtureSpec {
 public:
  enum class Form { Scalar, GeneralSPD, ScaledOmega };
  enum class Provenance { UserSupplied, FreqMde, BayesPrecision };

  static MixtureSpec scalar(double phi,
                            Provenance prov = Provenance::UserSupplied);
  static MixtureSpec general(Eigen::MatrixXd phi,
                             Provenance prov = Provenance::UserSupplied);
  static MixtureSpec scaled_omega(double lambda, Eigen::MatrixXd omega,
                                  Provenance prov = Provenance::UserSupplied);
  static MixtureSpec isotropic(double scale, Eigen::Index d,
                               Provenance prov = Provenance::UserSupplied);

  Form form() const { return form_; }
  Provenance provenance() const { return prov_; }

  /// Resolve to a dense d x d precision matrix.
  Eigen::MatrixXd matrix(Eigen::Index d) const;

  /// log det Phi for the given dimension.
  double log_det(Eigen::Index d) const;

  /// Scalar value (Scalar form, or 1x1 matrix forms).
  double scalar_phi() const;

  double lambda() const;

 private:
  MixtureSpec() = default;
  Form form_ = Form::Scalar;
  Provenance prov_ = Provenance::UserSupplied;
  double phi_ = 1.0;
  double lambda_ = 1.0;
  Eigen::MatrixXd mat_;
};

}  // namespace avlm

#endif  // AVLM_MIXTURE_HPP
