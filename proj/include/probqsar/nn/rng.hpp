#pragma once

#include <cstdint>
#include <vector>

namespace probqsar::nn {

// Deterministic 64-bit generator: xoshiro256** whose state is expanded from
// the seed with splitmix64. The stream depends only on the seed, never on
// the platform, so identical seeds reproduce identical training runs
// everywhere.
class Prng {
public:
  explicit Prng(uint64_t seed);

  uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Uniform integer in [0, n), n > 0. Uses rejection sampling, so the
  // result is exactly uniform.
  uint64_t uniform_int(uint64_t n);

  // Standard normal via Box-Muller (the spare draw is cached).
  double normal();

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T> &v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent child stream k, derived from the *original* seed, so forks
  // are stable no matter how much of the parent stream was consumed.
  Prng fork(uint64_t k) const;

  uint64_t seed() const { return seed_; }

private:
  uint64_t seed_;
  uint64_t s_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

uint64_t splitmix64(uint64_t &state);

}  // namespace probqsar::nn
