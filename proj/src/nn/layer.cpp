#include "probqsar/nn/layer.hpp"

#include <cmath>

#include "probqsar/errors.hpp"

namespace probqsar::nn {

double activate(Activation act, double v) {
  switch (act) {
    case Activation::Identity:
      return v;
    case Activation::Relu:
      return v > 0.0 ? v : 0.0;
    case Activation::LeakyRelu:
      return v > 0.0 ? v : kLeakyReluSlope * v;
    case Activation::Tanh:
      return std::tanh(v);
  }
  return v;
}

double activate_grad(Activation act, double pre) {
  switch (act) {
    case Activation::Identity:
      return 1.0;
    case Activation::Relu:
      return pre > 0.0 ? 1.0 : 0.0;
    case Activation::LeakyRelu:
      return pre > 0.0 ? 1.0 : kLeakyReluSlope;
    case Activation::Tanh: {
      const double t = std::tanh(pre);
      return 1.0 - t * t;
    }
  }
  return 1.0;
}

DenseLayer DenseLayer::init(size_t in, size_t out, Activation act, Prng &rng) {
  DenseLayer layer;
  layer.weights = Matrix(out, in);
  layer.bias = Matrix(1, out);
  layer.activation = act;
  const bool rectified =
      act == Activation::Relu || act == Activation::LeakyRelu;
  const double limit = rectified
                           ? std::sqrt(6.0 / static_cast<double>(in))
                           : std::sqrt(6.0 / static_cast<double>(in + out));
  for (size_t i = 0; i < layer.weights.size(); ++i) {
    layer.weights.data()[i] = rng.uniform(-limit, limit);
  }
  return layer;
}

Matrix DenseLayer::forward(const Matrix &x, LayerCache &cache) const {
  if (x.cols() != in_dim()) {
    throw DimensionMismatch("layer input has " + std::to_string(x.cols()) +
                            " cols, expected " + std::to_string(in_dim()));
  }
  cache.input = x;
  cache.pre_activation = matmul_nt(x, weights);
  for (size_t r = 0; r < cache.pre_activation.rows(); ++r) {
    double *row = cache.pre_activation.row(r);
    for (size_t c = 0; c < out_dim(); ++c) {
      row[c] += bias(0, c);
    }
  }
  cache.valid = true;

  Matrix y = cache.pre_activation;
  for (size_t i = 0; i < y.size(); ++i) {
    y.data()[i] = activate(activation, y.data()[i]);
  }
  if (!y.all_finite()) {
    throw NonFiniteValue("non-finite value in dense layer output");
  }
  return y;
}

LayerGrads DenseLayer::backward(const Matrix &upstream,
                                const LayerCache &cache) const {
  if (!cache.valid) {
    throw NoCachedForward("backward called without a cached forward pass");
  }
  if (!upstream.same_shape(cache.pre_activation)) {
    throw DimensionMismatch("upstream gradient shape mismatch");
  }
  Matrix d_pre = upstream;
  for (size_t i = 0; i < d_pre.size(); ++i) {
    d_pre.data()[i] *= activate_grad(activation, cache.pre_activation.data()[i]);
  }

  LayerGrads grads;
  grads.d_weights = matmul_tn(d_pre, cache.input);  // out x in
  grads.d_bias = Matrix(1, out_dim());
  for (size_t r = 0; r < d_pre.rows(); ++r) {
    const double *row = d_pre.row(r);
    for (size_t c = 0; c < out_dim(); ++c) {
      grads.d_bias(0, c) += row[c];
    }
  }
  grads.d_input = matmul(d_pre, weights);  // batch x in
  return grads;
}

std::pair<double, Matrix> mse_loss(const Matrix &pred, const Matrix &target) {
  if (!pred.same_shape(target)) {
    throw DimensionMismatch("mse_loss shapes differ");
  }
  const double n = static_cast<double>(pred.size());
  double loss = 0.0;
  Matrix grad(pred.rows(), pred.cols());
  for (size_t i = 0; i < pred.size(); ++i) {
    const double d = pred.data()[i] - target.data()[i];
    loss += d * d;
    grad.data()[i] = 2.0 * d / n;
  }
  return {loss / n, std::move(grad)};
}

}  // namespace probqsar::nn
