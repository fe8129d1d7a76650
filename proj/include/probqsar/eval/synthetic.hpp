#pragma once

#include <cstdint>
#include <vector>

#include "probqsar/nn/matrix.hpp"

namespace probqsar::eval {

// Heteroscedastic regression oracle: x ~ U[-1,1]^203,
// y = sin(2 w.x) + eps with eps ~ N(0, sigma(x)^2) and
// sigma(x) = 0.05 + 0.45 * sigmoid(v.x). The direction vectors w, v are
// seeded and rescaled so that w.x has standard deviation 0.8 and v.x has
// 2.0 over the cube. True conditional means and stds are recorded, so the
// Bayes-optimal RMSE is computable exactly.
struct SyntheticTask {
  nn::Matrix x;  // n x 203
  std::vector<double> y;
  std::vector<double> true_mean;
  std::vector<double> true_std;
};

inline constexpr size_t kSyntheticDim = 203;

SyntheticTask synthetic_heteroscedastic_task(size_t n, uint64_t seed);

// Root-mean of sigma^2 over the given rows: the irreducible error.
double bayes_rmse(const SyntheticTask &task, const std::vector<size_t> &rows);

// Synthetic analogue of the chemistry features for the ablation study:
// 20 latent factors drive the target; an 812-wide feature block mimics the
// fingerprint+embedding fusion. The first 512 columns are noisy bits
// derived from only the first 10 factors (so conditioning on them alone
// loses signal); the last 300 columns are a noisy linear read-out of all
// 20 factors padded with pure-noise columns (so the autoencoder has
// something to remove).
struct AblationTask {
  nn::Matrix features;  // n x 812
  std::vector<double> y;
};

AblationTask synthetic_ablation_task(size_t n, uint64_t seed);

}  // namespace probqsar::eval
