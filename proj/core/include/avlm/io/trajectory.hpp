#ifndef AVLM_IO_TRAJECTORY_HPP
#define AVLM_IO_TRAJECTORY_HPP

#include <Eigen/Dense>
#include <ostream>

namespace avlm::io {

/**
 * One monitoring row per observation once the design is full rank.
 * Serialized as CSV in fixed column order
 *   n, delta_hat, se, log_bf, p_instant, p_running_min, ci_lo, ci_hi
 * (coordinate-suffixed when d > 1), floating point at 17 significant
 * digits, unbounded interval endpoints as the literal tokens -inf / inf.
 */
struct TrajectoryRow {
  long n = 0;
  Eigen::VectorXd delta_hat;
  Eigen::VectorXd se;
  double log_bf = 0.0;
  double p_instant = 1.0;
  double p_running_min = 1.0;
  Eigen::VectorXd ci_lo;
  Eigen::VectorXd ci_hi;
};

class TrajectoryWriter {
 public:
  TrajectoryWriter(std::ostream& out, Eigen::Index d);

  /// Rows must arrive strictly increasing in n.
  void write(const TrajectoryRow& row);

  long rows_written() const { return rows_; }

 private:
  std::ostream& out_;
  Eigen::Index d_;
  long rows_ = 0;
  long last_n_ = 0;
};

}  // namespace avlm::io

#endif  // AVLM_IO_TRAJECTORY_HPP
