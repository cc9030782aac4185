#include "avlm/io/trajectory.hpp"

#include <stdexcept>
#include <string>

#include "avlm/io/checkpoint.hpp"

namespace avlm::io {

namespace {

void write_header(std::ostream& out, Eigen::Index d) {
  const auto coord_names = [d, &out](const char* base) {
    if (d == 1) {
      out << ',' << base;
    } else {
      for (Eigen::Index j = 1; j <= d; ++j) out << ',' << base << '_' << j;
    }
  };
  out << 'n';
  coord_names("delta_hat");
  coord_names("se");
  out << ",log_bf,p_instant,p_running_min";
  coord_names("ci_lo");
  coord_names("ci_hi");
  out << '\n';
}

}  // namespace

TrajectoryWriter::TrajectoryWriter(std::ostream& out, Eigen::Index d)
    : out_(out), d_(d) {
  if (d < 1) throw std::invalid_argument("TrajectoryWriter: d >= 1");
  write_header(out_, d_);
}

void TrajectoryWriter::write(const TrajectoryRow& row) {
  if (rows_ > 0 && row.n <= last_n_) {
    throw std::logic_error("TrajectoryWriter: rows must be increasing in n");
  }
  if (row.delta_hat.size() != d_ || row.se.size() != d_ ||
      row.ci_lo.size() != d_ || row.ci_hi.size() != d_) {
    throw std::invalid_argument("TrajectoryWriter: row dimension mismatch");
  }
  const auto put_vec = [this](const Eigen::VectorXd& v) {
    for (Eigen::Index j = 0; j < d_; ++j) out_ << ',' << format_g17(v(j));
  };
  out_ << row.n;
  put_vec(row.delta_hat);
  put_vec(row.se);
  out_ << ',' << format_g17(row.log_bf) << ',' << format_g17(row.p_instant)
       << ',' << format_g17(row.p_running_min);
  put_vec(row.ci_lo);
  put_vec(row.ci_hi);
  out_ << '\n';
  last_n_ = row.n;
  ++rows_;
}

}  // namespace avlm::io
