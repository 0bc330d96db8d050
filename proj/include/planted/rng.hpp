#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace planted {

/// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for trial `trial_index` of sub-stream `substream` under `seed`.
/// Distinct (seed, trial_index, substream) triples give unrelated seeds, so
/// each trial can be replayed independently of execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial_index,
                          std::uint64_t substream = 0) noexcept;

/// Seeded 64-bit generator (mt19937_64) with distribution helpers whose
/// output does not depend on the standard library implementation.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [0, bound), unbiased by rejection. bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Generator for trial `trial_index` of `substream`, see derive_seed.
inline Rng stream(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t substream = 0) {
  return Rng(derive_seed(seed, trial_index, substream));
}

}  // namespace planted
