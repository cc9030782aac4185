#ifndef AVLM_IO_CHECKPOINT_HPP
#define AVLM_IO_CHECKPOINT_HPP

#include <stdexcept>
#include <string>

#include "avlm/mixture.hpp"
#include "avlm/regression.hpp"

namespace avlm::io {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Test configuration persisted with the sufficient statistics so a resumed
/// stream continues the same analysis.
struct CheckpointConfig {
  double alpha = 0.05;
  Eigen::VectorXd delta0;
  std::string method = "exact";  // exact | plugin | infinity | g
  // Mixture: scalar phi, isotropic scale, or lambda for the asymptotic forms.
  std::string mixture_form = "scalar";  // scalar | isotropic | lambda
  double mixture_value = 1.0;
  double omega = 0.0;  // known limiting Gram (method "infinity"), 0 = unset
};

/**
 * Resumable stream state.  All floating-point payload is serialized as
 * decimal strings with 17 significant digits, so load(save(c)) is
 * value-identical and a resumed run reproduces an uninterrupted one bit for
 * bit.  The compensated-summation carry terms are part of the state.
 */
struct Checkpoint {
  static constexpr int kVersion = 1;
  SufficientStats stats{0, 1};
  CheckpointConfig config;
  double p_running_min = 1.0;
};

void checkpoint_save(const Checkpoint& ckpt, const std::string& path);
Checkpoint checkpoint_load(const std::string& path);

std::string checkpoint_to_json(const Checkpoint& ckpt);
Checkpoint checkpoint_from_json(const std::string& text);

/// %.17g rendering shared by the checkpoint and trajectory writers;
/// infinities serialize as the tokens "inf" / "-inf".
std::string format_g17(double v);

}  // namespace avlm::io

#endif  // AVLM_IO_CHECKPOINT_HPP
