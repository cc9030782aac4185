#include "avlm/regression.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace avlm {

namespace {

constexpr double kPivotTol = 1e-10;

inline void kahan_add(double& sum, double& comp, double value) {
  const double y = value - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace

SufficientStats::SufficientStats(Eigen::Index p, Eigen::Index d)
    : p_(p), d_(d) {
  if (p < 0 || d < 1) {
    throw std::invalid_argument("SufficientStats: require p >= 0 and d >= 1");
  }
  const Eigen::Index k = p + d;
  gram_ = Eigen::MatrixXd::Zero(k, k);
  cross_ = Eigen::VectorXd::Zero(k);
  gram_diag_comp_ = Eigen::VectorXd::Zero(k);
  w_ = Eigen::VectorXd::Zero(k);
}

void SufficientStats::update(const DesignPoint& pt) {
  if (pt.x.size() != p_ || pt.z.size() != d_) {
    throw std::invalid_argument(
        "SufficientStats::update: dimension mismatch, expected p=" +
        std::to_string(p_) + " d=" + std::to_string(d_) + ", got p=" +
        std::to_string(pt.x.size()) + " d=" + std::to_string(pt.z.size()));
  }
  if (!pt.x.allFinite() || !pt.z.allFinite() || !std::isfinite(pt.y)) {
    throw std::invalid_argument("SufficientStats::update: non-finite input");
  }
  w_.head(p_) = pt.x;
  w_.tail(d_) = pt.z;
  const Eigen::Index k = p_ + d_;
  for (Eigen::Index j = 0; j < k; ++j) {
    kahan_add(gram_(j, j), gram_diag_comp_(j), w_(j) * w_(j));
    for (Eigen::Index i = j + 1; i < k; ++i) {
      gram_(i, j) += w_(i) * w_(j);
      gram_(j, i) = gram_(i, j);
    }
    cross_(j) += w_(j) * pt.y;
  }
  kahan_add(yty_, yty_comp_, pt.y * pt.y);
  ++n_;
}

SufficientStats SufficientStats::restore(Eigen::Index p, Eigen::Index d,
                                         long n, Eigen::MatrixXd gram,
                                         Eigen::VectorXd cross, double yty,
                                         Eigen::VectorXd gram_diag_comp,
                                         double yty_comp) {
  SufficientStats s(p, d);
  const Eigen::Index k = p + d;
  if (gram.rows() != k || gram.cols() != k || cross.size() != k ||
      gram_diag_comp.size() != k || n < 0) {
    throw std::invalid_argument("SufficientStats::restore: inconsistent state");
  }
  s.n_ = n;
  s.gram_ = std::move(gram);
  s.cross_ = std::move(cross);
  s.yty_ = yty;
  s.gram_diag_comp_ = std::move(gram_diag_comp);
  s.yty_comp_ = yty_comp;
  return s;
}

RegressionSnapshot snapshot(const SufficientStats& stats) {
  const Eigen::Index p = stats.p();
  const Eigen::Index d = stats.d();
  const Eigen::Index k = p + d;

  RegressionSnapshot snap;
  snap.n = stats.n();
  snap.nu = stats.n() - static_cast<long>(k);
  snap.beta_hat = Eigen::VectorXd::Zero(p);
  snap.delta_hat = Eigen::VectorXd::Zero(d);
  snap.ztilde_gram = Eigen::MatrixXd::Zero(d, d);

  if (snap.n <= static_cast<long>(k)) {
    return snap;  // pre-identifiability: B_n = 1 downstream
  }

  Eigen::LDLT<Eigen::MatrixXd> ldlt(stats.gram());
  const double max_diag = stats.gram().diagonal().maxCoeff();
  if (ldlt.info() != Eigen::Success || max_diag <= 0.0 ||
      ldlt.vectorD().minCoeff() <= kPivotTol * max_diag) {
    return snap;
  }
  snap.full_rank = true;

  const Eigen::VectorXd gamma_hat = ldlt.solve(stats.cross());
  snap.beta_hat = gamma_hat.head(p);
  snap.delta_hat = gamma_hat.tail(d);

  double s2 = (stats.yty() - stats.cross().dot(gamma_hat)) /
              static_cast<double>(snap.nu);
  if (s2 < 0.0) {
    s2 = 0.0;
    snap.s2_clamped = true;
  }
  snap.s2 = s2;

  // Z~'Z~ = Gzz - Gzx Gxx^{-1} Gxz, the Schur complement of the X block.
  if (p == 0) {
    snap.ztilde_gram = stats.gram();
  } else {
    const auto gxx = stats.gram().topLeftCorner(p, p);
    const auto gxz = stats.gram().topRightCorner(p, d);
    const auto gzz = stats.gram().bottomRightCorner(d, d);
    Eigen::LLT<Eigen::MatrixXd> llt_xx(gxx);
    snap.ztilde_gram = gzz - gxz.transpose() * llt_xx.solve(gxz);
    snap.ztilde_gram = 0.5 * (snap.ztilde_gram + snap.ztilde_gram.transpose().eval());
  }

  const double quad = snap.delta_hat.dot(snap.ztilde_gram * snap.delta_hat);
  if (snap.s2 > 0.0) {
    Eigen::LLT<Eigen::MatrixXd> llt_zt(snap.ztilde_gram);
    Eigen::VectorXd t =
        llt_zt.matrixU() * snap.delta_hat / std::sqrt(snap.s2);
    snap.t_vec = std::move(t);
    snap.f_stat = quad / (static_cast<double>(d) * snap.s2);
  } else {
    snap.f_stat = quad > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return snap;
}

double classical_f(const RegressionSnapshot& snap) {
  if (!snap.full_rank) {
    throw std::logic_error("classical_f: snapshot is not full rank");
  }
  return snap.f_stat;
}

}  // namespace avlm
