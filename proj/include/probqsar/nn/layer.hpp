#pragma once

#include <cstdint>
#include <utility>

#include "probqsar/nn/matrix.hpp"
#include "probqsar/nn/rng.hpp"

namespace probqsar::nn {

enum class Activation : uint8_t {
  Identity = 0,
  Relu = 1,
  LeakyRelu = 2,  // slope 0.2
  Tanh = 3,
};

inline constexpr double kLeakyReluSlope = 0.2;

struct LayerCache {
  Matrix input;           // batch x in
  Matrix pre_activation;  // batch x out
  bool valid = false;
};

struct LayerGrads {
  Matrix d_weights;
  Matrix d_bias;
  Matrix d_input;
};

// Fully connected layer, y = act(x W^T + b), batch rows.
struct DenseLayer {
  Matrix weights;  // out x in
  Matrix bias;     // 1 x out
  Activation activation = Activation::Identity;

  size_t in_dim() const { return weights.cols(); }
  size_t out_dim() const { return weights.rows(); }

  // He-uniform init for relu/leaky-relu, Xavier-uniform for tanh/identity;
  // biases start at zero.
  static DenseLayer init(size_t in, size_t out, Activation act, Prng &rng);

  Matrix forward(const Matrix &x, LayerCache &cache) const;

  // Exact gradients of the layer map; requires the cache filled by forward.
  LayerGrads backward(const Matrix &upstream, const LayerCache &cache) const;
};

double activate(Activation act, double v);
double activate_grad(Activation act, double pre);

// Mean squared error over all entries, gradient 2(pred-target)/N.
std::pair<double, Matrix> mse_loss(const Matrix &pred, const Matrix &target);

}  // namespace probqsar::nn
