#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "probqsar/nn/adam.hpp"
#include "probqsar/nn/layer.hpp"
#include "probqsar/nn/rng.hpp"

namespace probqsar::gan {

enum class Divergence : uint8_t {
  PearsonChi2 = 0,
  Kl = 1,
  Js = 2,
};

enum class NoiseMode : uint8_t {
  EveryLayer = 0,  // z concatenated to the input of every hidden layer
  InputOnly = 1,   // plain cGAN wiring: z only at the first layer
};

std::string to_string(Divergence d);
Divergence divergence_from_string(const std::string &name);
std::string to_string(NoiseMode m);
NoiseMode noise_mode_from_string(const std::string &name);

struct GanConfig {
  int epochs = 300;
  size_t batch_size = 32;
  double learning_rate = 2e-4;
  double beta1 = 0.5;
  double beta2 = 0.999;
  int d_steps = 1;  // discriminator updates per generator update
  size_t noise_dim = 32;
  Divergence divergence = Divergence::PearsonChi2;
  NoiseMode noise_mode = NoiseMode::EveryLayer;
  std::vector<size_t> generator_hidden = {256, 128, 64};
  size_t disc_pathway_dim = 128;
  std::vector<size_t> disc_trunk_hidden = {128};
  int predict_samples = 100;  // K
};

// Noise-injection generator: maps (condition x, noise z) to one activity
// value. Hidden layers are leaky-relu; the output layer is identity. Under
// EveryLayer wiring, hidden layer k consumes [h_{k-1} | z].
class Generator {
public:
  Generator() = default;
  Generator(std::vector<nn::DenseLayer> layers, size_t cond_dim,
            size_t noise_dim, NoiseMode mode);

  static Generator init(size_t cond_dim, const GanConfig &cfg, nn::Prng &rng);

  size_t cond_dim() const { return cond_dim_; }
  size_t noise_dim() const { return noise_dim_; }
  NoiseMode mode() const { return mode_; }
  std::vector<nn::DenseLayer> &layers() { return layers_; }
  const std::vector<nn::DenseLayer> &layers() const { return layers_; }

  // x: batch x cond_dim, z: batch x noise_dim -> batch x 1
  nn::Matrix forward(const nn::Matrix &x, const nn::Matrix &z,
                     std::vector<nn::LayerCache> &caches) const;
  nn::Matrix forward(const nn::Matrix &x, const nn::Matrix &z) const;

  void backward(const nn::Matrix &upstream,
                const std::vector<nn::LayerCache> &caches,
                std::vector<nn::LayerGrads> &grads) const;

  std::vector<nn::Matrix *> params();
  std::vector<const nn::Matrix *> grad_ptrs(
      std::vector<nn::LayerGrads> &grads) const;

private:
  bool concat_noise_at(size_t layer_index) const;

  std::vector<nn::DenseLayer> layers_;
  size_t cond_dim_ = 0;
  size_t noise_dim_ = 0;
  NoiseMode mode_ = NoiseMode::EveryLayer;
};

// Dual-pathway critic: the condition and the activity run through separate
// leaky-relu pathways that merge into a trunk ending in one identity unit
// (the raw "T" value; construction rejects any bounded output activation).
class Discriminator {
public:
  struct Cache {
    nn::LayerCache cond, act;
    std::vector<nn::LayerCache> trunk;
  };
  struct Grads {
    nn::LayerGrads cond, act;
    std::vector<nn::LayerGrads> trunk;
  };

  Discriminator() = default;
  Discriminator(nn::DenseLayer cond_path, nn::DenseLayer act_path,
                std::vector<nn::DenseLayer> trunk, size_t cond_dim);

  static Discriminator init(size_t cond_dim, const GanConfig &cfg,
                            nn::Prng &rng);

  size_t cond_dim() const { return cond_dim_; }
  const nn::DenseLayer &cond_path() const { return cond_path_; }
  const nn::DenseLayer &act_path() const { return act_path_; }
  const std::vector<nn::DenseLayer> &trunk() const { return trunk_; }

  // x: batch x cond_dim, y: batch x 1 -> batch x 1 scalars
  nn::Matrix forward(const nn::Matrix &x, const nn::Matrix &y,
                     Cache &cache) const;
  nn::Matrix forward(const nn::Matrix &x, const nn::Matrix &y) const;

  // Returns dL/dy (needed by the generator update); fills grads.
  nn::Matrix backward(const nn::Matrix &upstream, const Cache &cache,
                      Grads &grads) const;

  std::vector<nn::Matrix *> params();
  std::vector<const nn::Matrix *> grad_ptrs(Grads &grads) const;

private:
  nn::DenseLayer cond_path_, act_path_;
  std::vector<nn::DenseLayer> trunk_;
  size_t cond_dim_ = 0;
};

// Variational f-GAN objective F = E_P[g_f(T_real)] - E_Q[f*(g_f(T_fake))].
// The discriminator maximizes F (d_loss = -F); the generator minimizes
// -E_Q[f*(g_f(T_fake))]. Output activation g_f and conjugate f* per
// divergence:
//   Pearson chi^2: g_f(v) = v,                f*(t) = t^2/4 + t
//   KL:            g_f(v) = v,                f*(t) = exp(t - 1)
//   JS:            g_f(v) = log2-softplus(-v), f*(t) = -log(2 - exp(t))
//     (composition simplifies to f*(g_f(v)) = softplus(v) - log 2)
struct FganLosses {
  double d_objective = 0.0;  // F, the value the discriminator maximizes
  double d_loss = 0.0;       // -F
  double g_loss = 0.0;
  std::vector<double> d_grad_real;  // d d_loss / d T_real_i
  std::vector<double> d_grad_fake;  // d d_loss / d T_fake_j
  std::vector<double> g_grad_fake;  // d g_loss / d T_fake_j
};

FganLosses fgan_losses(Divergence divergence,
                       const std::vector<double> &t_real,
                       const std::vector<double> &t_fake);

struct StepDiagnostics {
  double d_loss = 0.0;
  double g_loss = 0.0;
  double mean_t_real = 0.0;
  double mean_t_fake = 0.0;
};

// config.d_steps discriminator updates (fresh standard-normal z each) then
// one generator update. y must already be standardized.
StepDiagnostics train_step(Generator &g, Discriminator &d,
                           const nn::Matrix &x_batch,
                           const nn::Matrix &y_batch, const GanConfig &cfg,
                           nn::Adam &adam_g, nn::Adam &adam_d, nn::Prng &rng);

// K generated activities for one condition; mean is the point estimate and
// the (population) standard deviation the uncertainty.
class PredictiveDistribution {
public:
  explicit PredictiveDistribution(std::vector<double> samples);

  const std::vector<double> &samples() const { return samples_; }
  double mean() const;
  double stddev() const;
  double quantile(double q) const;  // linear interpolation on sorted samples

private:
  std::vector<double> samples_;
};

struct ProbCganModel {
  Generator generator;
  Discriminator discriminator;
  double y_mean = 0.0;
  double y_std = 1.0;
  GanConfig config;
  std::vector<StepDiagnostics> history;  // one entry per training batch

  std::string to_bytes() const;
  static ProbCganModel from_bytes(const std::string &bytes);
};

// Activities are standardized with the training mean/std for the GAN game
// and un-standardized in predict.
ProbCganModel train(const nn::Matrix &x, const std::vector<double> &y,
                    const GanConfig &cfg, uint64_t seed);

PredictiveDistribution predict(const ProbCganModel &model,
                               const std::vector<double> &x, int k,
                               nn::Prng &rng);

// Point predictions for a whole matrix; row i uses the deterministic child
// stream rng.fork(i), so results do not depend on evaluation order.
std::vector<double> predict_means(const ProbCganModel &model,
                                  const nn::Matrix &x, int k,
                                  const nn::Prng &rng);
std::vector<double> predict_stddevs(const ProbCganModel &model,
                                    const nn::Matrix &x, int k,
                                    const nn::Prng &rng);

nn::Matrix standard_normal(size_t rows, size_t cols, nn::Prng &rng);

}  // namespace probqsar::gan
