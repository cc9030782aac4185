#ifndef AVLM_TESTS_HELPERS_HPP
#define AVLM_TESTS_HELPERS_HPP

#include <Eigen/Dense>
#include <vector>

#include "avlm/regression.hpp"
#include "avlm/rng.hpp"

namespace avlm::testing {

/// A seeded synthetic regression stream kept both as raw rows (for batch
/// oracles that avoid the sufficient-statistics path entirely) and as
/// accumulated sufficient statistics.
struct Dataset {
  std::vector<DesignPoint> points;
  Eigen::MatrixXd w;  // n x (p + d), rows [x, z]
  Eigen::MatrixXd x;  // n x p
  Eigen::VectorXd y;
  SufficientStats stats{1, 1};
};

inline Dataset make_dataset(std::uint64_t seed, long n, Eigen::Index p,
                            Eigen::Index d, const Eigen::VectorXd& beta,
                            const Eigen::VectorXd& delta, double sigma,
                            bool intercept = true) {
  Rng rng(seed);
  Dataset ds;
  ds.stats = SufficientStats(p, d);
  ds.w = Eigen::MatrixXd(n, p + d);
  ds.x = Eigen::MatrixXd(n, p);
  ds.y = Eigen::VectorXd(n);
  for (long i = 0; i < n; ++i) {
    DesignPoint pt;
    pt.x = Eigen::VectorXd(p);
    for (Eigen::Index j = 0; j < p; ++j) {
      pt.x(j) = (intercept && j == 0) ? 1.0 : rng.normal();
    }
    pt.z = Eigen::VectorXd(d);
    for (Eigen::Index j = 0; j < d; ++j) pt.z(j) = rng.normal();
    pt.y = pt.x.dot(beta) + pt.z.dot(delta) + sigma * rng.normal();
    ds.w.row(i).head(p) = pt.x.transpose();
    ds.w.row(i).tail(d) = pt.z.transpose();
    ds.x.row(i) = pt.x.transpose();
    ds.y(i) = pt.y;
    ds.stats.update(pt);
    ds.points.push_back(std::move(pt));
  }
  return ds;
}

/// Batch least squares on the raw rows via column-pivoted QR; never touches
/// the Gram accumulation path.
struct BatchFit {
  Eigen::VectorXd gamma_hat;
  double s2 = 0.0;
  Eigen::MatrixXd ztilde_gram;
};

inline BatchFit batch_ols(const Dataset& ds) {
  BatchFit fit;
  const Eigen::Index p = ds.x.cols();
  const Eigen::Index k = ds.w.cols();
  fit.gamma_hat = ds.w.colPivHouseholderQr().solve(ds.y);
  const Eigen::VectorXd resid = ds.y - ds.w * fit.gamma_hat;
  fit.s2 = resid.squaredNorm() / static_cast<double>(ds.y.size() - k);
  const Eigen::MatrixXd z = ds.w.rightCols(k - p);
  if (p == 0) {
    fit.ztilde_gram = z.transpose() * z;
  } else {
    const Eigen::MatrixXd px_z =
        ds.x * ds.x.colPivHouseholderQr().solve(z);
    fit.ztilde_gram = z.transpose() * (z - px_z);
  }
  return fit;
}

}  // namespace avlm::testing

#endif  // AVLM_TESTS_HELPERS_HPP
