#include "probqsar/eval/split.hpp"

#include <cmath>
#include <numeric>

#include "probqsar/errors.hpp"
#include "probqsar/nn/rng.hpp"

namespace probqsar::eval {

Split split(size_t n, const SplitSpec &spec) {
  if (n < 5) {
    throw TooFewSamples("split needs at least 5 samples");
  }
  if (spec.train_fraction <= 0.0 || spec.train_fraction >= 1.0) {
    throw Error("train fraction must be in (0, 1)");
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  nn::Prng rng(spec.seed);
  rng.shuffle(order);
  const size_t n_train = static_cast<size_t>(
      std::llround(spec.train_fraction * static_cast<double>(n)));
  Split out;
  out.train.assign(order.begin(), order.begin() + static_cast<ptrdiff_t>(n_train));
  out.test.assign(order.begin() + static_cast<ptrdiff_t>(n_train), order.end());
  return out;
}

}  // namespace probqsar::eval
