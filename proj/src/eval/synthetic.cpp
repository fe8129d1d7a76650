#include "probqsar/eval/synthetic.hpp"

#include <cmath>

#include "probqsar/errors.hpp"
#include "probqsar/nn/rng.hpp"

namespace probqsar::eval {

namespace {

double sigmoid(double x) {
  return 1.0 / (1.0 + std::exp(-x));
}

// Direction with a chosen projection std over U[-1,1]^dim inputs:
// Var(w.x) = |w|^2 / 3, so |w| is rescaled to target_std * sqrt(3).
std::vector<double> seeded_direction(size_t dim, double target_std,
                                     nn::Prng &rng) {
  std::vector<double> w(dim);
  double norm2 = 0.0;
  for (double &v : w) {
    v = rng.normal();
    norm2 += v * v;
  }
  const double scale = target_std * std::sqrt(3.0) / std::sqrt(norm2);
  for (double &v : w) {
    v *= scale;
  }
  return w;
}

double dot_row(const nn::Matrix &m, size_t row, const std::vector<double> &w) {
  const double *p = m.row(row);
  double s = 0.0;
  for (size_t c = 0; c < w.size(); ++c) {
    s += p[c] * w[c];
  }
  return s;
}

}  // namespace

SyntheticTask synthetic_heteroscedastic_task(size_t n, uint64_t seed) {
  if (n < 500) {
    throw InsufficientData("synthetic task needs n >= 500");
  }
  nn::Prng rng(seed);
  const std::vector<double> w = seeded_direction(kSyntheticDim, 0.8, rng);
  const std::vector<double> v = seeded_direction(kSyntheticDim, 2.0, rng);

  SyntheticTask task;
  task.x = nn::Matrix(n, kSyntheticDim);
  task.y.resize(n);
  task.true_mean.resize(n);
  task.true_std.resize(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t c = 0; c < kSyntheticDim; ++c) {
      task.x(i, c) = rng.uniform(-1.0, 1.0);
    }
    const double wx = dot_row(task.x, i, w);
    const double vx = dot_row(task.x, i, v);
    task.true_mean[i] = std::sin(2.0 * wx);
    task.true_std[i] = 0.05 + 0.45 * sigmoid(vx);
    task.y[i] = task.true_mean[i] + task.true_std[i] * rng.normal();
  }
  return task;
}

double bayes_rmse(const SyntheticTask &task, const std::vector<size_t> &rows) {
  if (rows.empty()) {
    throw EmptyBatch("bayes_rmse: no rows");
  }
  double sum = 0.0;
  for (size_t i : rows) {
    sum += task.true_std[i] * task.true_std[i];
  }
  return std::sqrt(sum / static_cast<double>(rows.size()));
}

AblationTask synthetic_ablation_task(size_t n, uint64_t seed) {
  constexpr size_t kFactors = 20;
  constexpr size_t kBitFactors = 10;    // bits see only the first 10 factors
  constexpr size_t kBits = 512;
  constexpr size_t kReadouts = 150;     // informative embedding columns
  constexpr size_t kNoiseCols = 150;    // pure-noise embedding columns

  nn::Prng rng(seed);

  // Target direction: deliberately weighted toward the factors the bit
  // block cannot see.
  std::vector<double> p(kFactors);
  double norm2 = 0.0;
  for (size_t i = 0; i < kFactors; ++i) {
    p[i] = rng.normal() * (i < kBitFactors ? 0.7 : 1.5);
    norm2 += p[i] * p[i];
  }
  const double p_scale = 0.8 * std::sqrt(3.0) / std::sqrt(norm2);
  for (double &v : p) {
    v *= p_scale;
  }
  const std::vector<double> q = seeded_direction(kFactors, 2.0, rng);

  nn::Matrix bit_proj(kBits, kBitFactors);
  for (size_t i = 0; i < bit_proj.size(); ++i) {
    bit_proj.data()[i] = rng.normal();
  }
  nn::Matrix readout(kReadouts, kFactors);
  const double readout_scale = 1.0 / std::sqrt(static_cast<double>(kFactors));
  for (size_t i = 0; i < readout.size(); ++i) {
    readout.data()[i] = rng.normal() * readout_scale;
  }

  AblationTask task;
  task.features = nn::Matrix(n, kBits + kReadouts + kNoiseCols);
  task.y.resize(n);
  std::vector<double> u(kFactors);
  for (size_t i = 0; i < n; ++i) {
    for (double &f : u) {
      f = rng.uniform(-1.0, 1.0);
    }
    double pu = 0.0, qu = 0.0;
    for (size_t k = 0; k < kFactors; ++k) {
      pu += p[k] * u[k];
      qu += q[k] * u[k];
    }
    const double sigma = 0.05 + 0.45 * sigmoid(qu);
    task.y[i] = std::sin(2.0 * pu) + sigma * rng.normal();

    double *row = task.features.row(i);
    for (size_t b = 0; b < kBits; ++b) {
      double a = 0.0;
      for (size_t k = 0; k < kBitFactors; ++k) {
        a += bit_proj(b, k) * u[k];
      }
      row[b] = (a + 0.5 * rng.normal()) > 0.0 ? 1.0 : 0.0;
    }
    for (size_t r = 0; r < kReadouts; ++r) {
      double a = 0.0;
      for (size_t k = 0; k < kFactors; ++k) {
        a += readout(r, k) * u[k];
      }
      row[kBits + r] = a + 0.3 * rng.normal();
    }
    for (size_t c = 0; c < kNoiseCols; ++c) {
      row[kBits + kReadouts + c] = rng.normal();
    }
  }
  return task;
}

}  // namespace probqsar::eval
