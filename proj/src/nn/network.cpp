#include "probqsar/nn/network.hpp"

namespace probqsar::nn {

Matrix Network::forward(const Matrix &x, std::vector<LayerCache> &caches) const {
  caches.resize(layers.size());
  Matrix h = x;
  for (size_t i = 0; i < layers.size(); ++i) {
    h = layers[i].forward(h, caches[i]);
  }
  return h;
}

Matrix Network::forward(const Matrix &x) const {
  std::vector<LayerCache> caches;
  return forward(x, caches);
}

Matrix Network::backward(const Matrix &upstream,
                         const std::vector<LayerCache> &caches,
                         std::vector<LayerGrads> &grads) const {
  grads.resize(layers.size());
  Matrix d = upstream;
  for (size_t i = layers.size(); i-- > 0;) {
    grads[i] = layers[i].backward(d, caches[i]);
    d = grads[i].d_input;
  }
  return d;
}

std::vector<Matrix *> Network::params() {
  std::vector<Matrix *> out;
  for (auto &layer : layers) {
    out.push_back(&layer.weights);
    out.push_back(&layer.bias);
  }
  return out;
}

std::vector<const Matrix *> Network::grad_ptrs(
    std::vector<LayerGrads> &grads) const {
  std::vector<const Matrix *> out;
  for (auto &g : grads) {
    out.push_back(&g.d_weights);
    out.push_back(&g.d_bias);
  }
  return out;
}

}  // namespace probqsar::nn
