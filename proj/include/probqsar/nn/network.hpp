#pragma once

#include <vector>

#include "probqsar/nn/layer.hpp"

namespace probqsar::nn {

// Plain layer stack. The GAN players wire DenseLayers by hand; this is for
// the autoencoder halves and the MLP baseline.
struct Network {
  std::vector<DenseLayer> layers;

  Matrix forward(const Matrix &x, std::vector<LayerCache> &caches) const;
  Matrix forward(const Matrix &x) const;  // inference, no caches kept

  // Returns dL/dx; fills per-layer grads back-to-front into `grads`
  // (aligned with `layers`).
  Matrix backward(const Matrix &upstream,
                  const std::vector<LayerCache> &caches,
                  std::vector<LayerGrads> &grads) const;

  std::vector<Matrix *> params();
  std::vector<const Matrix *> grad_ptrs(std::vector<LayerGrads> &grads) const;

  size_t in_dim() const { return layers.front().in_dim(); }
  size_t out_dim() const { return layers.back().out_dim(); }
};

}  // namespace probqsar::nn
