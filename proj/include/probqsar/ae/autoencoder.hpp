#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "probqsar/nn/network.hpp"

namespace probqsar::ae {

struct AutoencoderConfig {
  size_t input_dim = 812;
  size_t hidden_dim = 512;
  size_t code_dim = 203;
  int epochs = 200;
  size_t batch_size = 32;
  double learning_rate = 1e-3;
};

// Mirrored compressor: input -> hidden (leaky-relu) -> code (identity) and
// back. Trained with plain MSE for a fixed epoch budget; the encoder is
// frozen afterwards.
class AutoencoderModel {
public:
  AutoencoderModel() = default;
  AutoencoderModel(nn::Network encoder, nn::Network decoder,
                   std::vector<double> loss_curve);

  size_t input_dim() const { return encoder_.in_dim(); }
  size_t code_dim() const { return encoder_.out_dim(); }

  std::vector<double> encode(const std::vector<double> &input) const;
  nn::Matrix encode_batch(const nn::Matrix &inputs) const;

  // decoder(encoder(input)) and its per-sample MSE against the input
  std::pair<std::vector<double>, double> reconstruct(
      const std::vector<double> &input) const;

  const std::vector<double> &loss_curve() const { return loss_curve_; }
  const nn::Network &encoder() const { return encoder_; }
  const nn::Network &decoder() const { return decoder_; }

  std::string to_bytes() const;
  static AutoencoderModel from_bytes(const std::string &bytes);

private:
  nn::Network encoder_;
  nn::Network decoder_;
  std::vector<double> loss_curve_;
};

AutoencoderModel train_autoencoder(const nn::Matrix &features,
                                   const AutoencoderConfig &cfg,
                                   uint64_t seed);

}  // namespace probqsar::ae
