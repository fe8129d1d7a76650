#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "probqsar/errors.hpp"
#include "probqsar/nn/adam.hpp"
#include "probqsar/nn/checkpoint.hpp"
#include "probqsar/nn/grad_check.hpp"
#include "probqsar/nn/network.hpp"
#include "probqsar/nn/rng.hpp"
#include "probqsar/nn/training.hpp"

using namespace probqsar;
using nn::Activation;
using nn::DenseLayer;
using nn::LayerCache;
using nn::Matrix;
using nn::Network;
using nn::Prng;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  size_t r = 0;
  for (const auto &row : rows) {
    size_t c = 0;
    for (double v : row) {
      m(r, c++) = v;
    }
    ++r;
  }
  return m;
}

DenseLayer identity_layer(size_t n) {
  DenseLayer layer;
  layer.weights = Matrix(n, n);
  for (size_t i = 0; i < n; ++i) {
    layer.weights(i, i) = 1.0;
  }
  layer.bias = Matrix(1, n);
  layer.activation = Activation::Identity;
  return layer;
}

Network random_network(std::vector<size_t> dims,
                       std::vector<Activation> acts, uint64_t seed) {
  Prng rng(seed);
  Network net;
  for (size_t i = 0; i + 1 < dims.size(); ++i) {
    net.layers.push_back(
        DenseLayer::init(dims[i], dims[i + 1], acts[i], rng));
  }
  return net;
}

// resample until no pre-activation sits near a relu/leaky kink
bool near_kink(const std::vector<LayerCache> &caches) {
  for (const auto &cache : caches) {
    for (size_t i = 0; i < cache.pre_activation.size(); ++i) {
      if (std::abs(cache.pre_activation.data()[i]) < 1e-6) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST(Rng, DeterministicStream) {
  Prng a(123), b(123), c(124);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next_u64(), b.next_u64());
  }
  bool differs = false;
  Prng a2(123);
  for (int i = 0; i < 100 && !differs; ++i) {
    differs = a2.next_u64() != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, ForkIndependentOfConsumption) {
  Prng a(9);
  Prng b(9);
  b.next_u64();
  b.normal();
  EXPECT_EQ(a.fork(3).next_u64(), b.fork(3).next_u64());
  EXPECT_NE(a.fork(3).next_u64(), a.fork(4).next_u64());
}

TEST(Rng, NormalMoments) {
  Prng rng(77);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sum2 / n, 1.0, 0.02);
}

TEST(DenseLayer, IdentityPassThrough) {
  DenseLayer layer = identity_layer(3);
  LayerCache cache;
  const Matrix x = from_rows({{1.0, -2.0, 3.0}});
  const Matrix y = layer.forward(x, cache);
  for (size_t c = 0; c < 3; ++c) {
    EXPECT_EQ(y(0, c), x(0, c));
  }
}

TEST(DenseLayer, ReluAndLeakyRelu) {
  DenseLayer relu = identity_layer(2);
  relu.activation = Activation::Relu;
  LayerCache cache;
  Matrix y = relu.forward(from_rows({{-1.0, 2.0}}), cache);
  EXPECT_EQ(y(0, 0), 0.0);
  EXPECT_EQ(y(0, 1), 2.0);

  DenseLayer leaky = identity_layer(2);
  leaky.activation = Activation::LeakyRelu;
  y = leaky.forward(from_rows({{-1.0, 2.0}}), cache);
  EXPECT_DOUBLE_EQ(y(0, 0), -0.2);
  EXPECT_EQ(y(0, 1), 2.0);
}

TEST(DenseLayer, SingleUnitProductRule) {
  DenseLayer layer;
  layer.weights = Matrix(1, 1);
  layer.weights(0, 0) = 0.7;
  layer.bias = Matrix(1, 1);
  layer.activation = Activation::Identity;
  LayerCache cache;
  layer.forward(from_rows({{3.0}}), cache);
  const auto grads = layer.backward(from_rows({{1.0}}), cache);
  EXPECT_DOUBLE_EQ(grads.d_weights(0, 0), 3.0);  // dL/dw = x
  EXPECT_DOUBLE_EQ(grads.d_input(0, 0), 0.7);    // dL/dx = w
  EXPECT_DOUBLE_EQ(grads.d_bias(0, 0), 1.0);
}

TEST(DenseLayer, ReluBlocksGradientWhenInactive) {
  DenseLayer layer = identity_layer(1);
  layer.activation = Activation::Relu;
  LayerCache cache;
  layer.forward(from_rows({{-2.0}}), cache);
  const auto grads = layer.backward(from_rows({{1.0}}), cache);
  EXPECT_EQ(grads.d_input(0, 0), 0.0);
  EXPECT_EQ(grads.d_weights(0, 0), 0.0);
}

TEST(DenseLayer, BackwardWithoutForwardThrows) {
  DenseLayer layer = identity_layer(1);
  LayerCache cache;
  EXPECT_THROW(layer.backward(from_rows({{1.0}}), cache), NoCachedForward);
}

TEST(MseLoss, ClosedForms) {
  const Matrix equal = from_rows({{1.0, 2.0}});
  EXPECT_EQ(nn::mse_loss(equal, equal).first, 0.0);
  const auto [loss, grad] =
      nn::mse_loss(from_rows({{0.0, 0.0}}), from_rows({{1.0, 1.0}}));
  EXPECT_DOUBLE_EQ(loss, 1.0);
  EXPECT_DOUBLE_EQ(grad(0, 0), -1.0);  // 2*(0-1)/2
  EXPECT_THROW(nn::mse_loss(equal, from_rows({{1.0}})), DimensionMismatch);
}

TEST(MseLoss, GradientMatchesFiniteDifferences) {
  Prng rng(3);
  Matrix pred(2, 3), target(2, 3);
  for (size_t i = 0; i < pred.size(); ++i) {
    pred.data()[i] = rng.normal();
    target.data()[i] = rng.normal();
  }
  const auto [loss, grad] = nn::mse_loss(pred, target);
  const double h = 1e-6;
  for (size_t i = 0; i < pred.size(); ++i) {
    const double saved = pred.data()[i];
    pred.data()[i] = saved + h;
    const double up = nn::mse_loss(pred, target).first;
    pred.data()[i] = saved - h;
    const double down = nn::mse_loss(pred, target).first;
    pred.data()[i] = saved;
    EXPECT_NEAR(grad.data()[i], (up - down) / (2 * h), 1e-6);
  }
}

TEST(Adam, ZeroGradientLeavesParamsUnchanged) {
  Matrix w(2, 2, 1.5);
  const Matrix g(2, 2, 0.0);
  nn::Adam adam({1e-3, 0.9, 0.999, 1e-8});
  adam.step({&w}, {&g});
  for (size_t i = 0; i < w.size(); ++i) {
    EXPECT_EQ(w.data()[i], 1.5);
  }
}

TEST(Adam, FirstStepIsSignedLearningRate) {
  Matrix w(1, 2);
  w(0, 0) = 1.0;
  w(0, 1) = -1.0;
  Matrix g(1, 2);
  g(0, 0) = 0.3;   // positive gradient: step down
  g(0, 1) = -7.0;  // negative gradient: step up
  nn::Adam adam({0.01, 0.9, 0.999, 1e-8});
  adam.step({&w}, {&g});
  EXPECT_NEAR(w(0, 0), 1.0 - 0.01, 1e-6);
  EXPECT_NEAR(w(0, 1), -1.0 + 0.01, 1e-6);
}

TEST(Adam, QuadraticBowlConverges) {
  Matrix w(1, 1);
  w(0, 0) = 1.0;
  nn::Adam adam({0.01, 0.9, 0.999, 1e-8});
  for (int step = 0; step < 2000; ++step) {
    Matrix g(1, 1);
    g(0, 0) = 2.0 * w(0, 0);
    adam.step({&w}, {&g});
  }
  EXPECT_LT(std::abs(w(0, 0)), 1e-2);
}

TEST(GradCheck, LinearNetworkTight) {
  Network net = random_network({4, 3, 1},
                               {Activation::Identity, Activation::Identity}, 11);
  Prng rng(12);
  Matrix x(5, 4), target(5, 1);
  for (size_t i = 0; i < x.size(); ++i) {
    x.data()[i] = rng.normal();
  }
  for (size_t i = 0; i < target.size(); ++i) {
    target.data()[i] = rng.normal();
  }
  std::vector<LayerCache> caches;
  std::vector<nn::LayerGrads> grads;
  const Matrix pred = net.forward(x, caches);
  const auto [loss, grad] = nn::mse_loss(pred, target);
  net.backward(grad, caches, grads);
  const auto report = nn::grad_check(
      net.params(), net.grad_ptrs(grads),
      [&] {
        return nn::mse_loss(net.forward(x), target).first;
      },
      1e-5, 1e-7);
  EXPECT_TRUE(report.pass) << report.worst << " " << report.max_rel_error;
}

TEST(GradCheck, ThreeLayerLeakyReluNetwork) {
  for (uint64_t seed = 21;; ++seed) {
    Network net = random_network(
        {5, 4, 4, 1},
        {Activation::LeakyRelu, Activation::LeakyRelu, Activation::Identity},
        seed);
    Prng rng(seed + 100);
    Matrix x(3, 5), target(3, 1);
    for (size_t i = 0; i < x.size(); ++i) {
      x.data()[i] = rng.normal();
    }
    for (size_t i = 0; i < target.size(); ++i) {
      target.data()[i] = rng.normal();
    }
    std::vector<LayerCache> caches;
    std::vector<nn::LayerGrads> grads;
    const Matrix pred = net.forward(x, caches);
    if (near_kink(caches)) {
      continue;  // resample away from activation kinks
    }
    const auto [loss, grad] = nn::mse_loss(pred, target);
    net.backward(grad, caches, grads);
    const auto report = nn::grad_check(
        net.params(), net.grad_ptrs(grads),
        [&] {
          return nn::mse_loss(net.forward(x), target).first;
        },
        1e-5, 1e-4);
    EXPECT_TRUE(report.pass) << report.worst << " " << report.max_rel_error;
    break;
  }
}

TEST(GradCheck, DetectsCorruptedGradient) {
  Network net = random_network({3, 2, 1},
                               {Activation::Tanh, Activation::Identity}, 31);
  Prng rng(32);
  Matrix x(4, 3), target(4, 1);
  for (size_t i = 0; i < x.size(); ++i) {
    x.data()[i] = rng.normal();
  }
  for (size_t i = 0; i < target.size(); ++i) {
    target.data()[i] = rng.normal();
  }
  std::vector<LayerCache> caches;
  std::vector<nn::LayerGrads> grads;
  const Matrix pred = net.forward(x, caches);
  const auto [loss, grad] = nn::mse_loss(pred, target);
  net.backward(grad, caches, grads);
  for (auto &g : grads) {
    for (size_t i = 0; i < g.d_weights.size(); ++i) {
      g.d_weights.data()[i] *= 1.10;
    }
  }
  const auto report = nn::grad_check(
      net.params(), net.grad_ptrs(grads),
      [&] {
        return nn::mse_loss(net.forward(x), target).first;
      },
      1e-5, 1e-4);
  EXPECT_FALSE(report.pass);
}

TEST(Matmul, NonFiniteDetected) {
  Matrix x(1, 1);
  x(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(nn::check_finite(x, "x"), NonFiniteValue);
}

TEST(Batches, ShuffledAndComplete) {
  Prng rng(5);
  const auto batches = nn::make_batches(10, 3, rng);
  ASSERT_EQ(batches.size(), 4u);
  EXPECT_EQ(batches.back().size(), 1u);  // last partial batch kept
  std::vector<bool> seen(10, false);
  for (const auto &batch : batches) {
    for (size_t i : batch) {
      seen[i] = true;
    }
  }
  for (bool s : seen) {
    EXPECT_TRUE(s);
  }
}

TEST(Checkpoint, RoundTripIsBitwise) {
  Prng rng(8);
  nn::Checkpoint ckpt;
  ckpt.kind = nn::kCheckpointMlp;
  ckpt.extras_i = {42, -7};
  ckpt.extras_f = {3.14159, -0.125};
  ckpt.layers.push_back(DenseLayer::init(4, 3, Activation::LeakyRelu, rng));
  ckpt.layers.push_back(DenseLayer::init(3, 1, Activation::Identity, rng));

  const std::string path = ::testing::TempDir() + "ckpt.bin";
  nn::save_checkpoint(path, ckpt);
  const nn::Checkpoint back = nn::load_checkpoint(path);
  EXPECT_EQ(back.kind, ckpt.kind);
  EXPECT_EQ(back.extras_i, ckpt.extras_i);
  EXPECT_EQ(back.extras_f, ckpt.extras_f);
  ASSERT_EQ(back.layers.size(), 2u);
  for (size_t l = 0; l < 2; ++l) {
    EXPECT_EQ(back.layers[l].activation, ckpt.layers[l].activation);
    EXPECT_EQ(back.layers[l].weights.raw(), ckpt.layers[l].weights.raw());
    EXPECT_EQ(back.layers[l].bias.raw(), ckpt.layers[l].bias.raw());
  }
  std::filesystem::remove(path);
}

TEST(Checkpoint, TruncationIsCorrupt) {
  Prng rng(8);
  nn::Checkpoint ckpt;
  ckpt.layers.push_back(DenseLayer::init(4, 3, Activation::Tanh, rng));
  std::string bytes = nn::checkpoint_to_bytes(ckpt);
  bytes.resize(bytes.size() / 2);
  EXPECT_THROW(nn::checkpoint_from_bytes(bytes), CorruptFile);
}
