#include "probqsar/gan/probcgan.hpp"

#include <algorithm>
#include <cmath>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"
#include "probqsar/nn/checkpoint.hpp"
#include "probqsar/nn/training.hpp"

namespace probqsar::gan {

std::string to_string(Divergence d) {
  switch (d) {
    case Divergence::PearsonChi2:
      return "pearson_chi2";
    case Divergence::Kl:
      return "kl";
    case Divergence::Js:
      return "js";
  }
  return "?";
}

Divergence divergence_from_string(const std::string &name) {
  if (name == "pearson_chi2") {
    return Divergence::PearsonChi2;
  }
  if (name == "kl") {
    return Divergence::Kl;
  }
  if (name == "js") {
    return Divergence::Js;
  }
  throw ConfigError("unknown divergence: " + name);
}

std::string to_string(NoiseMode m) {
  return m == NoiseMode::EveryLayer ? "every_layer" : "input_only";
}

NoiseMode noise_mode_from_string(const std::string &name) {
  if (name == "every_layer") {
    return NoiseMode::EveryLayer;
  }
  if (name == "input_only") {
    return NoiseMode::InputOnly;
  }
  throw ConfigError("unknown noise mode: " + name);
}

namespace {

nn::Matrix hconcat(const nn::Matrix &a, const nn::Matrix &b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("hconcat row mismatch");
  }
  nn::Matrix out(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    double *dst = out.row(r);
    const double *pa = a.row(r);
    const double *pb = b.row(r);
    for (size_t c = 0; c < a.cols(); ++c) {
      dst[c] = pa[c];
    }
    for (size_t c = 0; c < b.cols(); ++c) {
      dst[a.cols() + c] = pb[c];
    }
  }
  return out;
}

nn::Matrix slice_cols(const nn::Matrix &m, size_t begin, size_t end) {
  nn::Matrix out(m.rows(), end - begin);
  for (size_t r = 0; r < m.rows(); ++r) {
    const double *src = m.row(r);
    double *dst = out.row(r);
    for (size_t c = begin; c < end; ++c) {
      dst[c - begin] = src[c];
    }
  }
  return out;
}

std::vector<double> column_values(const nn::Matrix &m) {
  std::vector<double> v(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    v[r] = m(r, 0);
  }
  return v;
}

nn::Matrix column_matrix(const std::vector<double> &v) {
  nn::Matrix m(v.size(), 1);
  for (size_t r = 0; r < v.size(); ++r) {
    m(r, 0) = v[r];
  }
  return m;
}

double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double sigmoid(double x) {
  return 1.0 / (1.0 + std::exp(-x));
}

double mean_of(const std::vector<double> &v) {
  double s = 0.0;
  for (double x : v) {
    s += x;
  }
  return s / static_cast<double>(v.size());
}

void accumulate(nn::LayerGrads &into, const nn::LayerGrads &from) {
  for (size_t i = 0; i < into.d_weights.size(); ++i) {
    into.d_weights.data()[i] += from.d_weights.data()[i];
  }
  for (size_t i = 0; i < into.d_bias.size(); ++i) {
    into.d_bias.data()[i] += from.d_bias.data()[i];
  }
}

}  // namespace

nn::Matrix standard_normal(size_t rows, size_t cols, nn::Prng &rng) {
  nn::Matrix m(rows, cols);
  for (size_t i = 0; i < m.size(); ++i) {
    m.data()[i] = rng.normal();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Generator

Generator::Generator(std::vector<nn::DenseLayer> layers, size_t cond_dim,
                     size_t noise_dim, NoiseMode mode)
    : layers_(std::move(layers)),
      cond_dim_(cond_dim),
      noise_dim_(noise_dim),
      mode_(mode) {}

Generator Generator::init(size_t cond_dim, const GanConfig &cfg,
                          nn::Prng &rng) {
  std::vector<nn::DenseLayer> layers;
  size_t h = cond_dim;
  for (size_t k = 0; k < cfg.generator_hidden.size(); ++k) {
    const bool concat = cfg.noise_mode == NoiseMode::EveryLayer || k == 0;
    const size_t in = h + (concat ? cfg.noise_dim : 0);
    layers.push_back(nn::DenseLayer::init(in, cfg.generator_hidden[k],
                                          nn::Activation::LeakyRelu, rng));
    h = cfg.generator_hidden[k];
  }
  layers.push_back(
      nn::DenseLayer::init(h, 1, nn::Activation::Identity, rng));
  return Generator(std::move(layers), cond_dim, cfg.noise_dim,
                   cfg.noise_mode);
}

bool Generator::concat_noise_at(size_t layer_index) const {
  if (layer_index + 1 == layers_.size()) {
    return false;  // output layer sees only the last hidden state
  }
  return mode_ == NoiseMode::EveryLayer || layer_index == 0;
}

nn::Matrix Generator::forward(const nn::Matrix &x, const nn::Matrix &z,
                              std::vector<nn::LayerCache> &caches) const {
  if (x.cols() != cond_dim_ || z.cols() != noise_dim_ ||
      x.rows() != z.rows()) {
    throw DimensionMismatch("generator input shape mismatch");
  }
  caches.resize(layers_.size());
  nn::Matrix h = x;
  for (size_t i = 0; i < layers_.size(); ++i) {
    const nn::Matrix in = concat_noise_at(i) ? hconcat(h, z) : h;
    h = layers_[i].forward(in, caches[i]);
  }
  return h;
}

nn::Matrix Generator::forward(const nn::Matrix &x, const nn::Matrix &z) const {
  std::vector<nn::LayerCache> caches;
  return forward(x, z, caches);
}

void Generator::backward(const nn::Matrix &upstream,
                         const std::vector<nn::LayerCache> &caches,
                         std::vector<nn::LayerGrads> &grads) const {
  grads.resize(layers_.size());
  nn::Matrix d = upstream;
  for (size_t i = layers_.size(); i-- > 0;) {
    grads[i] = layers_[i].backward(d, caches[i]);
    if (i == 0) {
      break;
    }
    if (concat_noise_at(i)) {
      // drop the noise columns: z is an input, not a parameter
      d = slice_cols(grads[i].d_input, 0,
                     grads[i].d_input.cols() - noise_dim_);
    } else {
      d = grads[i].d_input;
    }
  }
}

std::vector<nn::Matrix *> Generator::params() {
  std::vector<nn::Matrix *> out;
  for (auto &layer : layers_) {
    out.push_back(&layer.weights);
    out.push_back(&layer.bias);
  }
  return out;
}

std::vector<const nn::Matrix *> Generator::grad_ptrs(
    std::vector<nn::LayerGrads> &grads) const {
  std::vector<const nn::Matrix *> out;
  for (auto &g : grads) {
    out.push_back(&g.d_weights);
    out.push_back(&g.d_bias);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Discriminator

Discriminator::Discriminator(nn::DenseLayer cond_path, nn::DenseLayer act_path,
                             std::vector<nn::DenseLayer> trunk,
                             size_t cond_dim)
    : cond_path_(std::move(cond_path)),
      act_path_(std::move(act_path)),
      trunk_(std::move(trunk)),
      cond_dim_(cond_dim) {
  if (trunk_.empty() || trunk_.back().out_dim() != 1 ||
      trunk_.back().activation != nn::Activation::Identity) {
    throw Error("discriminator trunk must end in one identity unit");
  }
}

Discriminator Discriminator::init(size_t cond_dim, const GanConfig &cfg,
                                  nn::Prng &rng) {
  nn::DenseLayer cond_path = nn::DenseLayer::init(
      cond_dim, cfg.disc_pathway_dim, nn::Activation::LeakyRelu, rng);
  nn::DenseLayer act_path = nn::DenseLayer::init(
      1, cfg.disc_pathway_dim, nn::Activation::LeakyRelu, rng);
  std::vector<nn::DenseLayer> trunk;
  size_t h = 2 * cfg.disc_pathway_dim;
  for (size_t width : cfg.disc_trunk_hidden) {
    trunk.push_back(
        nn::DenseLayer::init(h, width, nn::Activation::LeakyRelu, rng));
    h = width;
  }
  trunk.push_back(nn::DenseLayer::init(h, 1, nn::Activation::Identity, rng));
  return Discriminator(std::move(cond_path), std::move(act_path),
                       std::move(trunk), cond_dim);
}

nn::Matrix Discriminator::forward(const nn::Matrix &x, const nn::Matrix &y,
                                  Cache &cache) const {
  if (x.cols() != cond_dim_ || y.cols() != 1 || x.rows() != y.rows()) {
    throw DimensionMismatch("discriminator input shape mismatch");
  }
  nn::Matrix pc = cond_path_.forward(x, cache.cond);
  nn::Matrix pa = act_path_.forward(y, cache.act);
  nn::Matrix h = hconcat(pc, pa);
  cache.trunk.resize(trunk_.size());
  for (size_t i = 0; i < trunk_.size(); ++i) {
    h = trunk_[i].forward(h, cache.trunk[i]);
  }
  return h;
}

nn::Matrix Discriminator::forward(const nn::Matrix &x,
                                  const nn::Matrix &y) const {
  Cache cache;
  return forward(x, y, cache);
}

nn::Matrix Discriminator::backward(const nn::Matrix &upstream,
                                   const Cache &cache, Grads &grads) const {
  grads.trunk.resize(trunk_.size());
  nn::Matrix d = upstream;
  for (size_t i = trunk_.size(); i-- > 0;) {
    grads.trunk[i] = trunk_[i].backward(d, cache.trunk[i]);
    d = grads.trunk[i].d_input;
  }
  const size_t p = cond_path_.out_dim();
  grads.cond = cond_path_.backward(slice_cols(d, 0, p), cache.cond);
  grads.act = act_path_.backward(slice_cols(d, p, 2 * p), cache.act);
  return grads.act.d_input;  // batch x 1, dL/dy
}

std::vector<nn::Matrix *> Discriminator::params() {
  std::vector<nn::Matrix *> out = {&cond_path_.weights, &cond_path_.bias,
                                   &act_path_.weights, &act_path_.bias};
  for (auto &layer : trunk_) {
    out.push_back(&layer.weights);
    out.push_back(&layer.bias);
  }
  return out;
}

std::vector<const nn::Matrix *> Discriminator::grad_ptrs(Grads &grads) const {
  std::vector<const nn::Matrix *> out = {
      &grads.cond.d_weights, &grads.cond.d_bias, &grads.act.d_weights,
      &grads.act.d_bias};
  for (auto &g : grads.trunk) {
    out.push_back(&g.d_weights);
    out.push_back(&g.d_bias);
  }
  return out;
}

// ---------------------------------------------------------------------------
// f-GAN objective

FganLosses fgan_losses(Divergence divergence,
                       const std::vector<double> &t_real,
                       const std::vector<double> &t_fake) {
  if (t_real.empty() || t_fake.empty()) {
    throw EmptyBatch("fgan_losses needs non-empty batches");
  }
  const double n = static_cast<double>(t_real.size());
  const double m = static_cast<double>(t_fake.size());
  FganLosses out;
  out.d_grad_real.resize(t_real.size());
  out.d_grad_fake.resize(t_fake.size());
  out.g_grad_fake.resize(t_fake.size());

  double real_term = 0.0;   // mean g_f(T_real)
  double conj_term = 0.0;   // mean f*(g_f(T_fake))
  switch (divergence) {
    case Divergence::PearsonChi2: {
      for (size_t i = 0; i < t_real.size(); ++i) {
        real_term += t_real[i];
        out.d_grad_real[i] = -1.0 / n;
      }
      real_term /= n;
      for (size_t j = 0; j < t_fake.size(); ++j) {
        conj_term += t_fake[j] * t_fake[j] / 4.0 + t_fake[j];
        const double slope = (t_fake[j] / 2.0 + 1.0) / m;
        out.d_grad_fake[j] = slope;
        out.g_grad_fake[j] = -slope;
      }
      conj_term /= m;
      break;
    }
    case Divergence::Kl: {
      for (size_t i = 0; i < t_real.size(); ++i) {
        real_term += t_real[i];
        out.d_grad_real[i] = -1.0 / n;
      }
      real_term /= n;
      for (size_t j = 0; j < t_fake.size(); ++j) {
        const double e = std::exp(t_fake[j] - 1.0);
        conj_term += e;
        out.d_grad_fake[j] = e / m;
        out.g_grad_fake[j] = -e / m;
      }
      conj_term /= m;
      break;
    }
    case Divergence::Js: {
      const double log2 = std::log(2.0);
      for (size_t i = 0; i < t_real.size(); ++i) {
        real_term += log2 - softplus(-t_real[i]);
        out.d_grad_real[i] = -sigmoid(-t_real[i]) / n;
      }
      real_term /= n;
      for (size_t j = 0; j < t_fake.size(); ++j) {
        conj_term += softplus(t_fake[j]) - log2;
        const double s = sigmoid(t_fake[j]) / m;
        out.d_grad_fake[j] = s;
        out.g_grad_fake[j] = -s;
      }
      conj_term /= m;
      break;
    }
  }

  out.d_objective = real_term - conj_term;
  out.d_loss = -out.d_objective;
  out.g_loss = -conj_term;
  if (!std::isfinite(out.d_loss) || !std::isfinite(out.g_loss)) {
    throw NonFiniteValue("f-GAN loss is non-finite");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Training

StepDiagnostics train_step(Generator &g, Discriminator &d,
                           const nn::Matrix &x_batch,
                           const nn::Matrix &y_batch, const GanConfig &cfg,
                           nn::Adam &adam_g, nn::Adam &adam_d,
                           nn::Prng &rng) {
  if (x_batch.rows() == 0) {
    throw EmptyBatch("train_step needs a non-empty batch");
  }
  const size_t b = x_batch.rows();
  StepDiagnostics diag;

  for (int step = 0; step < cfg.d_steps; ++step) {
    nn::Matrix z = standard_normal(b, cfg.noise_dim, rng);
    nn::Matrix y_fake = g.forward(x_batch, z);
    Discriminator::Cache cache_real, cache_fake;
    nn::Matrix t_real = d.forward(x_batch, y_batch, cache_real);
    nn::Matrix t_fake = d.forward(x_batch, y_fake, cache_fake);
    FganLosses losses = fgan_losses(cfg.divergence, column_values(t_real),
                                    column_values(t_fake));
    Discriminator::Grads grads_real, grads_fake;
    d.backward(column_matrix(losses.d_grad_real), cache_real, grads_real);
    d.backward(column_matrix(losses.d_grad_fake), cache_fake, grads_fake);
    accumulate(grads_real.cond, grads_fake.cond);
    accumulate(grads_real.act, grads_fake.act);
    for (size_t i = 0; i < grads_real.trunk.size(); ++i) {
      accumulate(grads_real.trunk[i], grads_fake.trunk[i]);
    }
    adam_d.step(d.params(), d.grad_ptrs(grads_real));
    diag.d_loss = losses.d_loss;
  }

  // generator update
  nn::Matrix z = standard_normal(b, cfg.noise_dim, rng);
  std::vector<nn::LayerCache> g_caches;
  nn::Matrix y_fake = g.forward(x_batch, z, g_caches);
  Discriminator::Cache cache_fake;
  nn::Matrix t_fake = d.forward(x_batch, y_fake, cache_fake);
  nn::Matrix t_real = d.forward(x_batch, y_batch);
  FganLosses losses = fgan_losses(cfg.divergence, column_values(t_real),
                                  column_values(t_fake));
  Discriminator::Grads d_scratch;
  nn::Matrix d_y =
      d.backward(column_matrix(losses.g_grad_fake), cache_fake, d_scratch);
  std::vector<nn::LayerGrads> g_grads;
  g.backward(d_y, g_caches, g_grads);
  adam_g.step(g.params(), g.grad_ptrs(g_grads));

  diag.g_loss = losses.g_loss;
  diag.mean_t_real = mean_of(column_values(t_real));
  diag.mean_t_fake = mean_of(column_values(t_fake));
  return diag;
}

ProbCganModel train(const nn::Matrix &x, const std::vector<double> &y,
                    const GanConfig &cfg, uint64_t seed) {
  if (x.rows() < 50) {
    throw InsufficientData("GAN training needs at least 50 pairs");
  }
  if (x.rows() != y.size()) {
    throw DimensionMismatch("feature/target row mismatch");
  }

  ProbCganModel model;
  model.config = cfg;
  model.y_mean = mean_of(y);
  double var = 0.0;
  for (double v : y) {
    var += (v - model.y_mean) * (v - model.y_mean);
  }
  model.y_std = std::sqrt(var / static_cast<double>(y.size()));
  if (model.y_std == 0.0) {
    model.y_std = 1.0;
  }
  nn::Matrix y_scaled(y.size(), 1);
  for (size_t i = 0; i < y.size(); ++i) {
    y_scaled(i, 0) = (y[i] - model.y_mean) / model.y_std;
  }

  nn::Prng rng(seed);
  model.generator = Generator::init(x.cols(), cfg, rng);
  model.discriminator = Discriminator::init(x.cols(), cfg, rng);
  nn::Adam adam_g({cfg.learning_rate, cfg.beta1, cfg.beta2, 1e-8});
  nn::Adam adam_d({cfg.learning_rate, cfg.beta1, cfg.beta2, 1e-8});

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    const auto batches = nn::make_batches(x.rows(), cfg.batch_size, rng);
    for (size_t b = 0; b < batches.size(); ++b) {
      nn::Matrix xb = nn::gather_rows(x, batches[b]);
      nn::Matrix yb = nn::gather_rows(y_scaled, batches[b]);
      try {
        model.history.push_back(train_step(model.generator,
                                           model.discriminator, xb, yb, cfg,
                                           adam_g, adam_d, rng));
      } catch (const NonFiniteValue &e) {
        throw NonFiniteValue("gan epoch " + std::to_string(epoch) +
                             " batch " + std::to_string(b) + ": " + e.what());
      }
    }
  }
  return model;
}

// ---------------------------------------------------------------------------
// Prediction

PredictiveDistribution::PredictiveDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw EmptyBatch("predictive distribution needs at least one sample");
  }
}

double PredictiveDistribution::mean() const {
  return mean_of(samples_);
}

double PredictiveDistribution::stddev() const {
  const double m = mean();
  double var = 0.0;
  for (double s : samples_) {
    var += (s - m) * (s - m);
  }
  return std::sqrt(var / static_cast<double>(samples_.size()));
}

double PredictiveDistribution::quantile(double q) const {
  q = std::clamp(q, 0.0, 1.0);
  std::vector<double> sorted = samples_;
  std::sort(sorted.begin(), sorted.end());
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(pos);
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

PredictiveDistribution predict(const ProbCganModel &model,
                               const std::vector<double> &x, int k,
                               nn::Prng &rng) {
  if (k < 1) {
    throw Error("predict needs K >= 1");
  }
  if (x.size() != model.generator.cond_dim()) {
    throw DimensionMismatch("predict condition width mismatch");
  }
  nn::Matrix xs(static_cast<size_t>(k), x.size());
  for (size_t r = 0; r < static_cast<size_t>(k); ++r) {
    for (size_t c = 0; c < x.size(); ++c) {
      xs(r, c) = x[c];
    }
  }
  nn::Matrix z =
      standard_normal(static_cast<size_t>(k), model.generator.noise_dim(), rng);
  nn::Matrix out = model.generator.forward(xs, z);
  std::vector<double> samples(static_cast<size_t>(k));
  for (size_t r = 0; r < samples.size(); ++r) {
    samples[r] = model.y_mean + model.y_std * out(r, 0);
  }
  return PredictiveDistribution(std::move(samples));
}

std::vector<double> predict_means(const ProbCganModel &model,
                                  const nn::Matrix &x, int k,
                                  const nn::Prng &rng) {
  std::vector<double> out(x.rows());
  for (size_t i = 0; i < x.rows(); ++i) {
    nn::Prng stream = rng.fork(i);
    std::vector<double> row(x.row(i), x.row(i) + x.cols());
    out[i] = predict(model, row, k, stream).mean();
  }
  return out;
}

std::vector<double> predict_stddevs(const ProbCganModel &model,
                                    const nn::Matrix &x, int k,
                                    const nn::Prng &rng) {
  std::vector<double> out(x.rows());
  for (size_t i = 0; i < x.rows(); ++i) {
    nn::Prng stream = rng.fork(i);
    std::vector<double> row(x.row(i), x.row(i) + x.cols());
    out[i] = predict(model, row, k, stream).stddev();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Persistence

// Model payload: "PQGA" u16 version, generator checkpoint, discriminator
// checkpoint, each length-prefixed. Generator extras_i = {cond_dim,
// noise_dim, mode, divergence, epochs, batch, d_steps, predict_samples};
// extras_f = {y_mean, y_std, lr, beta1, beta2}.
std::string ProbCganModel::to_bytes() const {
  nn::Checkpoint gen;
  gen.kind = nn::kCheckpointGenerator;
  gen.extras_i = {static_cast<int64_t>(generator.cond_dim()),
                  static_cast<int64_t>(generator.noise_dim()),
                  static_cast<int64_t>(generator.mode()),
                  static_cast<int64_t>(config.divergence),
                  config.epochs,
                  static_cast<int64_t>(config.batch_size),
                  config.d_steps,
                  config.predict_samples};
  gen.extras_f = {y_mean, y_std, config.learning_rate, config.beta1,
                  config.beta2};
  gen.layers = generator.layers();

  nn::Checkpoint disc;
  disc.kind = nn::kCheckpointDiscriminator;
  disc.extras_i = {static_cast<int64_t>(discriminator.cond_dim())};
  disc.layers = {discriminator.cond_path(), discriminator.act_path()};
  for (const auto &layer : discriminator.trunk()) {
    disc.layers.push_back(layer);
  }

  dataio::ByteWriter w;
  w.bytes("PQGA", 4);
  w.u16(1);
  w.str(nn::checkpoint_to_bytes(gen));
  w.str(nn::checkpoint_to_bytes(disc));
  return w.take();
}

ProbCganModel ProbCganModel::from_bytes(const std::string &bytes) {
  dataio::ByteReader r(bytes);
  if (r.raw(4) != std::string_view("PQGA", 4)) {
    throw CorruptFile("bad GAN model magic");
  }
  if (r.u16() != 1) {
    throw VersionMismatch("GAN model format version unsupported");
  }
  nn::Checkpoint gen = nn::checkpoint_from_bytes(r.str());
  nn::Checkpoint disc = nn::checkpoint_from_bytes(r.str());
  if (gen.kind != nn::kCheckpointGenerator ||
      disc.kind != nn::kCheckpointDiscriminator ||
      gen.extras_i.size() < 8 || gen.extras_f.size() < 5 ||
      disc.layers.size() < 3) {
    throw CorruptFile("malformed GAN checkpoint");
  }

  ProbCganModel model;
  const size_t cond_dim = static_cast<size_t>(gen.extras_i[0]);
  const size_t noise_dim = static_cast<size_t>(gen.extras_i[1]);
  const NoiseMode mode = static_cast<NoiseMode>(gen.extras_i[2]);
  model.config.divergence = static_cast<Divergence>(gen.extras_i[3]);
  model.config.epochs = static_cast<int>(gen.extras_i[4]);
  model.config.batch_size = static_cast<size_t>(gen.extras_i[5]);
  model.config.d_steps = static_cast<int>(gen.extras_i[6]);
  model.config.predict_samples = static_cast<int>(gen.extras_i[7]);
  model.config.noise_dim = noise_dim;
  model.config.noise_mode = mode;
  model.y_mean = gen.extras_f[0];
  model.y_std = gen.extras_f[1];
  model.config.learning_rate = gen.extras_f[2];
  model.config.beta1 = gen.extras_f[3];
  model.config.beta2 = gen.extras_f[4];
  model.config.generator_hidden.clear();
  for (size_t i = 0; i + 1 < gen.layers.size(); ++i) {
    model.config.generator_hidden.push_back(gen.layers[i].out_dim());
  }
  model.generator =
      Generator(std::move(gen.layers), cond_dim, noise_dim, mode);

  nn::DenseLayer cond_path = std::move(disc.layers[0]);
  nn::DenseLayer act_path = std::move(disc.layers[1]);
  std::vector<nn::DenseLayer> trunk(
      std::make_move_iterator(disc.layers.begin() + 2),
      std::make_move_iterator(disc.layers.end()));
  model.config.disc_pathway_dim = cond_path.out_dim();
  model.config.disc_trunk_hidden.clear();
  for (size_t i = 0; i + 1 < trunk.size(); ++i) {
    model.config.disc_trunk_hidden.push_back(trunk[i].out_dim());
  }
  model.discriminator =
      Discriminator(std::move(cond_path), std::move(act_path),
                    std::move(trunk), static_cast<size_t>(disc.extras_i[0]));
  return model;
}

}  // namespace probqsar::gan
