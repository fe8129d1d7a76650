#include "probqsar/ae/autoencoder.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "probqsar/errors.hpp"
#include "probqsar/nn/rng.hpp"

using namespace probqsar;
using ae::AutoencoderConfig;
using ae::AutoencoderModel;
using ae::train_autoencoder;
using nn::Matrix;
using nn::Prng;

namespace {

// points on a random low-dimensional linear subspace of 812-d space
Matrix low_rank_data(size_t n, size_t ambient, size_t rank, uint64_t seed) {
  Prng rng(seed);
  Matrix basis(rank, ambient);
  for (size_t i = 0; i < basis.size(); ++i) {
    basis.data()[i] = rng.normal() / std::sqrt(static_cast<double>(rank));
  }
  Matrix coeffs(n, rank);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    coeffs.data()[i] = rng.normal();
  }
  return nn::matmul(coeffs, basis);
}

double mean_reconstruction_mse(const AutoencoderModel &model,
                               const Matrix &x) {
  double total = 0.0;
  for (size_t r = 0; r < x.rows(); ++r) {
    std::vector<double> row(x.row(r), x.row(r) + x.cols());
    total += model.reconstruct(row).second;
  }
  return total / static_cast<double>(x.rows());
}

}  // namespace

TEST(Autoencoder, LowRankDataCompressesWell) {
  const Matrix train = low_rank_data(500, 812, 10, 1);
  const Matrix held_out = low_rank_data(200, 812, 10, 1);  // same basis? no:
  // (same seed regenerates the same basis AND coefficients prefix; use a
  // fresh draw below instead)

  AutoencoderConfig cfg;
  cfg.epochs = 15;

  // untrained model measures the starting reconstruction error
  AutoencoderConfig init_cfg = cfg;
  init_cfg.epochs = 0;
  const AutoencoderModel init_model = train_autoencoder(train, init_cfg, 2);
  const double initial_mse = mean_reconstruction_mse(init_model, train);

  const AutoencoderModel model = train_autoencoder(train, cfg, 2);
  const double final_mse = mean_reconstruction_mse(model, train);
  EXPECT_LT(final_mse, 0.05 * initial_mse)
      << "initial " << initial_mse << " final " << final_mse;

  // a fresh sample from the same subspace distribution
  Prng rng(1);
  Matrix basis(10, 812);
  for (size_t i = 0; i < basis.size(); ++i) {
    basis.data()[i] = rng.normal() / std::sqrt(10.0);
  }
  Prng rng2(99);
  Matrix coeffs(200, 10);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    coeffs.data()[i] = rng2.normal();
  }
  const Matrix fresh = nn::matmul(coeffs, basis);
  const double held_mse = mean_reconstruction_mse(model, fresh);
  EXPECT_LT(held_mse, 2.0 * final_mse)
      << "train " << final_mse << " held-out " << held_mse;
}

TEST(Autoencoder, LossCurveDescends) {
  const Matrix train = low_rank_data(200, 64, 5, 3);
  AutoencoderConfig cfg;
  cfg.input_dim = 64;
  cfg.hidden_dim = 32;
  cfg.code_dim = 8;
  cfg.epochs = 10;
  const AutoencoderModel model = train_autoencoder(train, cfg, 4);
  ASSERT_EQ(model.loss_curve().size(), 10u);
  for (double v : model.loss_curve()) {
    EXPECT_TRUE(std::isfinite(v));
  }
  EXPECT_LT(model.loss_curve().back(), model.loss_curve().front());
}

TEST(Autoencoder, CodeDimensionIs203) {
  const Matrix train = low_rank_data(50, 812, 4, 5);
  AutoencoderConfig cfg;
  cfg.epochs = 1;
  const AutoencoderModel model = train_autoencoder(train, cfg, 6);
  std::vector<double> row(train.row(0), train.row(0) + train.cols());
  EXPECT_EQ(model.encode(row).size(), 203u);
  EXPECT_EQ(model.code_dim(), 203u);
}

TEST(Autoencoder, EncodeDeterministicAndShapeChecked) {
  const Matrix train = low_rank_data(30, 32, 4, 7);
  AutoencoderConfig cfg;
  cfg.input_dim = 32;
  cfg.hidden_dim = 16;
  cfg.code_dim = 8;
  cfg.epochs = 3;
  const AutoencoderModel model = train_autoencoder(train, cfg, 8);
  std::vector<double> row(train.row(0), train.row(0) + train.cols());
  const auto a = model.encode(row);
  const auto b = model.encode(row);
  EXPECT_EQ(a, b);  // bitwise
  EXPECT_THROW(model.encode(std::vector<double>(31)), DimensionMismatch);
}

TEST(Autoencoder, ReconstructIsDecodeOfEncode) {
  const Matrix train = low_rank_data(40, 32, 3, 9);
  AutoencoderConfig cfg;
  cfg.input_dim = 32;
  cfg.hidden_dim = 16;
  cfg.code_dim = 6;
  cfg.epochs = 2;
  const AutoencoderModel model = train_autoencoder(train, cfg, 10);
  std::vector<double> row(train.row(0), train.row(0) + train.cols());
  const auto [rec, mse] = model.reconstruct(row);

  const auto code = model.encode(row);
  nn::Matrix c(1, code.size());
  for (size_t i = 0; i < code.size(); ++i) {
    c(0, i) = code[i];
  }
  const nn::Matrix direct = model.decoder().forward(c);
  for (size_t i = 0; i < rec.size(); ++i) {
    EXPECT_EQ(rec[i], direct(0, i));
  }
}

TEST(Autoencoder, TrainingIsDeterministic) {
  const Matrix train = low_rank_data(60, 32, 4, 11);
  AutoencoderConfig cfg;
  cfg.input_dim = 32;
  cfg.hidden_dim = 16;
  cfg.code_dim = 8;
  cfg.epochs = 4;
  const AutoencoderModel a = train_autoencoder(train, cfg, 12);
  const AutoencoderModel b = train_autoencoder(train, cfg, 12);
  EXPECT_EQ(a.to_bytes(), b.to_bytes());
}

TEST(Autoencoder, InsufficientDataErrors) {
  const Matrix tiny = low_rank_data(9, 32, 2, 13);
  AutoencoderConfig cfg;
  cfg.input_dim = 32;
  EXPECT_THROW(train_autoencoder(tiny, cfg, 1), InsufficientData);
}

TEST(Autoencoder, SerializationRoundTrip) {
  const Matrix train = low_rank_data(30, 32, 3, 15);
  AutoencoderConfig cfg;
  cfg.input_dim = 32;
  cfg.hidden_dim = 16;
  cfg.code_dim = 5;
  cfg.epochs = 2;
  const AutoencoderModel model = train_autoencoder(train, cfg, 16);
  const AutoencoderModel back = AutoencoderModel::from_bytes(model.to_bytes());
  std::vector<double> row(train.row(0), train.row(0) + train.cols());
  EXPECT_EQ(model.encode(row), back.encode(row));  // bitwise
  EXPECT_EQ(model.loss_curve(), back.loss_curve());
}
