#include "probqsar/ae/autoencoder.hpp"

#include <cmath>

#include "probqsar/errors.hpp"
#include "probqsar/nn/adam.hpp"
#include "probqsar/nn/checkpoint.hpp"
#include "probqsar/nn/training.hpp"

namespace probqsar::ae {

AutoencoderModel::AutoencoderModel(nn::Network encoder, nn::Network decoder,
                                   std::vector<double> loss_curve)
    : encoder_(std::move(encoder)),
      decoder_(std::move(decoder)),
      loss_curve_(std::move(loss_curve)) {}

std::vector<double> AutoencoderModel::encode(
    const std::vector<double> &input) const {
  if (input.size() != input_dim()) {
    throw DimensionMismatch("encode: input has " +
                            std::to_string(input.size()) + " dims, expected " +
                            std::to_string(input_dim()));
  }
  nn::Matrix x(1, input.size());
  for (size_t i = 0; i < input.size(); ++i) {
    x(0, i) = input[i];
  }
  nn::Matrix code = encoder_.forward(x);
  return {code.data(), code.data() + code.size()};
}

nn::Matrix AutoencoderModel::encode_batch(const nn::Matrix &inputs) const {
  if (inputs.cols() != input_dim()) {
    throw DimensionMismatch("encode_batch: width mismatch");
  }
  return encoder_.forward(inputs);
}

std::pair<std::vector<double>, double> AutoencoderModel::reconstruct(
    const std::vector<double> &input) const {
  std::vector<double> code = encode(input);
  nn::Matrix c(1, code.size());
  for (size_t i = 0; i < code.size(); ++i) {
    c(0, i) = code[i];
  }
  nn::Matrix rec = decoder_.forward(c);
  double mse = 0.0;
  for (size_t i = 0; i < input.size(); ++i) {
    const double d = rec(0, i) - input[i];
    mse += d * d;
  }
  mse /= static_cast<double>(input.size());
  return {{rec.data(), rec.data() + rec.size()}, mse};
}

AutoencoderModel train_autoencoder(const nn::Matrix &features,
                                   const AutoencoderConfig &cfg,
                                   uint64_t seed) {
  if (features.rows() < 10) {
    throw InsufficientData("autoencoder needs at least 10 training vectors");
  }
  if (features.cols() != cfg.input_dim) {
    throw DimensionMismatch("autoencoder input width mismatch");
  }

  nn::Prng rng(seed);
  nn::Network encoder;
  encoder.layers.push_back(nn::DenseLayer::init(
      cfg.input_dim, cfg.hidden_dim, nn::Activation::LeakyRelu, rng));
  encoder.layers.push_back(nn::DenseLayer::init(
      cfg.hidden_dim, cfg.code_dim, nn::Activation::Identity, rng));
  nn::Network decoder;
  decoder.layers.push_back(nn::DenseLayer::init(
      cfg.code_dim, cfg.hidden_dim, nn::Activation::LeakyRelu, rng));
  decoder.layers.push_back(nn::DenseLayer::init(
      cfg.hidden_dim, cfg.input_dim, nn::Activation::Identity, rng));

  nn::Adam optimizer({cfg.learning_rate, 0.9, 0.999, 1e-8});
  std::vector<double> loss_curve;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    double epoch_loss = 0.0;
    size_t epoch_rows = 0;
    const auto batches =
        nn::make_batches(features.rows(), cfg.batch_size, rng);
    for (size_t b = 0; b < batches.size(); ++b) {
      nn::Matrix x = nn::gather_rows(features, batches[b]);
      std::vector<nn::LayerCache> enc_caches, dec_caches;
      nn::Matrix code = encoder.forward(x, enc_caches);
      nn::Matrix rec = decoder.forward(code, dec_caches);
      auto [loss, grad] = nn::mse_loss(rec, x);
      if (!std::isfinite(loss)) {
        nn::diagnose_nonfinite(
            "autoencoder epoch " + std::to_string(epoch) + " batch " +
                std::to_string(b),
            {{"input", &x}, {"code", &code}, {"reconstruction", &rec}});
      }
      std::vector<nn::LayerGrads> dec_grads, enc_grads;
      nn::Matrix d_code = decoder.backward(grad, dec_caches, dec_grads);
      encoder.backward(d_code, enc_caches, enc_grads);

      std::vector<nn::Matrix *> params = encoder.params();
      for (nn::Matrix *p : decoder.params()) {
        params.push_back(p);
      }
      std::vector<const nn::Matrix *> grads =
          encoder.grad_ptrs(enc_grads);
      for (const nn::Matrix *g : decoder.grad_ptrs(dec_grads)) {
        grads.push_back(g);
      }
      optimizer.step(params, grads);

      epoch_loss += loss * static_cast<double>(batches[b].size());
      epoch_rows += batches[b].size();
    }
    loss_curve.push_back(epoch_loss / static_cast<double>(epoch_rows));
  }

  return AutoencoderModel(std::move(encoder), std::move(decoder),
                          std::move(loss_curve));
}

// Checkpoint: extras_i[0] = number of encoder layers; extras_f = loss curve.
std::string AutoencoderModel::to_bytes() const {
  nn::Checkpoint ckpt;
  ckpt.kind = nn::kCheckpointAutoencoder;
  ckpt.extras_i = {static_cast<int64_t>(encoder_.layers.size())};
  ckpt.extras_f = loss_curve_;
  ckpt.layers = encoder_.layers;
  for (const auto &layer : decoder_.layers) {
    ckpt.layers.push_back(layer);
  }
  return nn::checkpoint_to_bytes(ckpt);
}

AutoencoderModel AutoencoderModel::from_bytes(const std::string &bytes) {
  nn::Checkpoint ckpt = nn::checkpoint_from_bytes(bytes);
  if (ckpt.kind != nn::kCheckpointAutoencoder || ckpt.extras_i.empty()) {
    throw CorruptFile("checkpoint is not an autoencoder");
  }
  const size_t n_enc = static_cast<size_t>(ckpt.extras_i[0]);
  if (n_enc > ckpt.layers.size()) {
    throw CorruptFile("autoencoder checkpoint layer split out of range");
  }
  nn::Network encoder, decoder;
  for (size_t i = 0; i < ckpt.layers.size(); ++i) {
    (i < n_enc ? encoder : decoder).layers.push_back(std::move(ckpt.layers[i]));
  }
  return AutoencoderModel(std::move(encoder), std::move(decoder),
                          std::move(ckpt.extras_f));
}

}  // namespace probqsar::ae
