#include "probqsar/baselines/mlp.hpp"

#include <cmath>

#include "probqsar/errors.hpp"
#include "probqsar/nn/adam.hpp"
#include "probqsar/nn/checkpoint.hpp"
#include "probqsar/nn/training.hpp"

namespace probqsar::baselines {

MlpModel mlp_fit(const nn::Matrix &x, const std::vector<double> &y,
                 const MlpConfig &cfg, uint64_t seed) {
  if (x.rows() < 2) {
    throw InsufficientData("mlp needs at least 2 samples");
  }
  if (x.rows() != y.size()) {
    throw DimensionMismatch("mlp feature/target row mismatch");
  }

  nn::Prng rng(seed);
  MlpModel model;
  size_t in = x.cols();
  for (size_t width : cfg.hidden) {
    model.net.layers.push_back(
        nn::DenseLayer::init(in, width, nn::Activation::LeakyRelu, rng));
    in = width;
  }
  model.net.layers.push_back(
      nn::DenseLayer::init(in, 1, nn::Activation::Identity, rng));

  nn::Matrix targets(y.size(), 1);
  for (size_t i = 0; i < y.size(); ++i) {
    targets(i, 0) = y[i];
  }

  nn::Adam optimizer({cfg.learning_rate, 0.9, 0.999, 1e-8});
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    double epoch_loss = 0.0;
    size_t rows = 0;
    const auto batches = nn::make_batches(x.rows(), cfg.batch_size, rng);
    for (size_t b = 0; b < batches.size(); ++b) {
      nn::Matrix xb = nn::gather_rows(x, batches[b]);
      nn::Matrix yb = nn::gather_rows(targets, batches[b]);
      std::vector<nn::LayerCache> caches;
      nn::Matrix pred = model.net.forward(xb, caches);
      auto [loss, grad] = nn::mse_loss(pred, yb);
      if (!std::isfinite(loss)) {
        nn::diagnose_nonfinite("mlp epoch " + std::to_string(epoch) +
                                   " batch " + std::to_string(b),
                               {{"input", &xb}, {"prediction", &pred}});
      }
      std::vector<nn::LayerGrads> grads;
      model.net.backward(grad, caches, grads);
      optimizer.step(model.net.params(), model.net.grad_ptrs(grads));
      epoch_loss += loss * static_cast<double>(batches[b].size());
      rows += batches[b].size();
    }
    model.loss_curve.push_back(epoch_loss / static_cast<double>(rows));
  }
  return model;
}

std::vector<double> mlp_predict(const MlpModel &model, const nn::Matrix &x) {
  nn::Matrix out = model.net.forward(x);
  std::vector<double> pred(out.rows());
  for (size_t r = 0; r < out.rows(); ++r) {
    pred[r] = out(r, 0);
  }
  return pred;
}

std::string MlpModel::to_bytes() const {
  nn::Checkpoint ckpt;
  ckpt.kind = nn::kCheckpointMlp;
  ckpt.extras_f = loss_curve;
  ckpt.layers = net.layers;
  return nn::checkpoint_to_bytes(ckpt);
}

MlpModel MlpModel::from_bytes(const std::string &bytes) {
  nn::Checkpoint ckpt = nn::checkpoint_from_bytes(bytes);
  if (ckpt.kind != nn::kCheckpointMlp) {
    throw CorruptFile("checkpoint is not an MLP");
  }
  MlpModel model;
  model.net.layers = std::move(ckpt.layers);
  model.loss_curve = std::move(ckpt.extras_f);
  return model;
}

}  // namespace probqsar::baselines
