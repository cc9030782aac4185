#ifndef AVLM_RNG_HPP
#define AVLM_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace avlm {

/**
 * Deterministic xoshiro256++ engine with splittable per-replication streams.
 *
 * Simulation replications draw from `Rng::for_replication(base_seed, rep)`;
 * the stream depends only on (base_seed, rep), never on scheduling, so
 * parallel runs reproduce single-threaded output byte for byte.  All
 * samplers are implemented here rather than via <random> distributions,
 * whose output is implementation-defined.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  static Rng for_replication(std::uint64_t base_seed, std::uint64_t replication) {
    std::uint64_t s = base_seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (0x9E3779B97F4A7C15ULL * (replication + 1));
    return Rng(splitmix64(s));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform index in [0, n).
  std::size_t uniform_index(std::size_t n) {
    auto idx = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return idx >= n ? n - 1 : idx;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller (second value cached).
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    cached_ = r * std::sin(two_pi * u2);
    has_cached_ = true;
    return r * std::cos(two_pi * u2);
  }

  /// Student t with integer degrees of freedom (chi-squared as a sum of squares).
  double student_t(int dof) {
    double chi2 = 0.0;
    for (int i = 0; i < dof; ++i) {
      const double g = normal();
      chi2 += g * g;
    }
    return normal() / std::sqrt(chi2 / static_cast<double>(dof));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::array<std::uint64_t, 4> state_{};
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace avlm

#endif  // AVLM_RNG_HPP
