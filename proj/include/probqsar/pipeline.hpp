#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "probqsar/ae/autoencoder.hpp"
#include "probqsar/baselines/knn.hpp"
#include "probqsar/baselines/mlp.hpp"
#include "probqsar/baselines/ridge.hpp"
#include "probqsar/baselines/tree.hpp"
#include "probqsar/chem/molecule.hpp"
#include "probqsar/feat/features.hpp"
#include "probqsar/gan/probcgan.hpp"

namespace probqsar {

struct BaselinesConfig {
  double ridge_lambda = 1.0;
  size_t knn_k = 5;
  int tree_max_depth = 12;
  size_t tree_min_leaf = 3;
  baselines::MlpConfig mlp;
};

// Every knob of the end-to-end pipeline in one place; the CLI RunConfig
// maps onto this.
struct PipelineConfig {
  feat::FingerprintConfig fingerprint;
  feat::SkipgramConfig skipgram;
  ae::AutoencoderConfig autoencoder;
  gan::GanConfig gan;
  BaselinesConfig baselines;
  double train_fraction = 0.8;
};

uint64_t pipeline_config_fingerprint(const PipelineConfig &cfg);

enum class ModelKind {
  ProbCgan,
  Cgan,  // input-only noise + JS objective
  Ridge,
  Knn,
  Tree,
  Mlp,
};

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string &name);

// Applies the cGAN ablation wiring to a GAN config.
gan::GanConfig cgan_mode(gan::GanConfig cfg);

std::vector<chem::Molecule> parse_all(const std::vector<std::string> &smiles);

std::vector<std::vector<std::string>> tokenize_all(
    const std::vector<std::string> &smiles);

// n x 812 matrix of fingerprint bits + raw (unstandardized) embeddings.
nn::Matrix assemble_features(const std::vector<chem::Molecule> &molecules,
                             const std::vector<std::vector<std::string>> &tokens,
                             const feat::EmbeddingMatrix &embedding,
                             const feat::FingerprintConfig &fp_cfg);

using ModelHead = std::variant<gan::ProbCganModel, baselines::RidgeModel,
                               baselines::KnnModel, baselines::TreeModel,
                               baselines::MlpModel>;

// Everything a deployment needs: featurization state, the compressor and
// the regression head.
struct PipelineModel {
  PipelineConfig config;
  ModelKind kind = ModelKind::ProbCgan;
  feat::EmbeddingMatrix embedding;
  feat::FeatureStandardizer standardizer;
  std::optional<ae::AutoencoderModel> autoencoder;
  ModelHead head;
};

struct Prediction {
  double mean = 0.0;
  double stddev = 0.0;  // 0 for deterministic heads
};

// Trains featurizer + autoencoder + head on all provided records (no
// holdout; the benchmark owns split-based evaluation).
PipelineModel train_pipeline(const std::vector<std::string> &smiles,
                             const std::vector<double> &activity,
                             const PipelineConfig &cfg, ModelKind kind,
                             uint64_t seed);

Prediction predict_pipeline(const PipelineModel &model,
                            const std::string &smiles, uint64_t seed);

}  // namespace probqsar
