#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "probqsar/nn/network.hpp"

namespace probqsar::baselines {

struct MlpConfig {
  std::vector<size_t> hidden = {128, 64};
  int epochs = 200;
  size_t batch_size = 32;
  double learning_rate = 1e-3;
};

// Leaky-relu MLP regressor trained with Adam on MSE.
struct MlpModel {
  nn::Network net;
  std::vector<double> loss_curve;

  std::string to_bytes() const;
  static MlpModel from_bytes(const std::string &bytes);
};

MlpModel mlp_fit(const nn::Matrix &x, const std::vector<double> &y,
                 const MlpConfig &cfg, uint64_t seed);
std::vector<double> mlp_predict(const MlpModel &model, const nn::Matrix &x);

}  // namespace probqsar::baselines
