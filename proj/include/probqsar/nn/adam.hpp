#pragma once

#include <cstdint>
#include <vector>

#include "probqsar/nn/matrix.hpp"

namespace probqsar::nn {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Standard Adam with bias correction. Moment buffers are laid out to match
// the parameter list passed to the first step() call; later calls must pass
// the same tensors in the same order.
class Adam {
public:
  explicit Adam(AdamConfig cfg) : cfg_(cfg) {}

  void step(const std::vector<Matrix *> &params,
            const std::vector<const Matrix *> &grads);

  int64_t step_count() const { return t_; }
  const AdamConfig &config() const { return cfg_; }

private:
  AdamConfig cfg_;
  int64_t t_ = 0;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
};

}  // namespace probqsar::nn
