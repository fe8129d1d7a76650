#pragma once

#include <cstdint>
#include <vector>

namespace probqsar::eval {

struct SplitSpec {
  double train_fraction = 0.8;
  uint64_t seed = 1;
};

struct Split {
  std::vector<size_t> train;
  std::vector<size_t> test;
};

// Seeded Fisher-Yates shuffle of 0..n-1, then a prefix of round(f*n)
// indices becomes the training set.
Split split(size_t n, const SplitSpec &spec);

}  // namespace probqsar::eval
