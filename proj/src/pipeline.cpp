#include "probqsar/pipeline.hpp"

#include <sstream>

#include "probqsar/chem/smiles.hpp"
#include "probqsar/feat/fnv.hpp"
#include "probqsar/feat/tokenize.hpp"

namespace probqsar {

uint64_t pipeline_config_fingerprint(const PipelineConfig &cfg) {
  std::ostringstream ss;
  ss << cfg.fingerprint.length_L << '|' << cfg.fingerprint.radius_r << '|'
     << cfg.skipgram.dim << '|' << cfg.skipgram.window << '|'
     << cfg.skipgram.negatives << '|' << cfg.skipgram.epochs << '|'
     << cfg.skipgram.learning_rate << '|' << cfg.autoencoder.input_dim << '|'
     << cfg.autoencoder.hidden_dim << '|' << cfg.autoencoder.code_dim << '|'
     << cfg.autoencoder.epochs << '|' << cfg.autoencoder.batch_size << '|'
     << cfg.autoencoder.learning_rate << '|' << cfg.gan.epochs << '|'
     << cfg.gan.batch_size << '|' << cfg.gan.learning_rate << '|'
     << cfg.gan.beta1 << '|' << cfg.gan.beta2 << '|' << cfg.gan.d_steps << '|'
     << cfg.gan.noise_dim << '|' << gan::to_string(cfg.gan.divergence) << '|'
     << gan::to_string(cfg.gan.noise_mode) << '|' << cfg.gan.predict_samples
     << '|';
  for (size_t h : cfg.gan.generator_hidden) {
    ss << h << ',';
  }
  ss << '|' << cfg.gan.disc_pathway_dim << '|';
  for (size_t h : cfg.gan.disc_trunk_hidden) {
    ss << h << ',';
  }
  ss << '|' << cfg.baselines.ridge_lambda << '|' << cfg.baselines.knn_k << '|'
     << cfg.baselines.tree_max_depth << '|' << cfg.baselines.tree_min_leaf
     << '|';
  for (size_t h : cfg.baselines.mlp.hidden) {
    ss << h << ',';
  }
  ss << '|' << cfg.baselines.mlp.epochs << '|' << cfg.baselines.mlp.batch_size
     << '|' << cfg.baselines.mlp.learning_rate << '|' << cfg.train_fraction;
  const std::string s = ss.str();
  return feat::fnv1a_bytes(s.data(), s.size());
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::ProbCgan:
      return "prob_cgan";
    case ModelKind::Cgan:
      return "cgan";
    case ModelKind::Ridge:
      return "ridge";
    case ModelKind::Knn:
      return "knn";
    case ModelKind::Tree:
      return "tree";
    case ModelKind::Mlp:
      return "mlp";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string &name) {
  if (name == "prob_cgan") {
    return ModelKind::ProbCgan;
  }
  if (name == "cgan") {
    return ModelKind::Cgan;
  }
  if (name == "ridge") {
    return ModelKind::Ridge;
  }
  if (name == "knn") {
    return ModelKind::Knn;
  }
  if (name == "tree") {
    return ModelKind::Tree;
  }
  if (name == "mlp") {
    return ModelKind::Mlp;
  }
  throw ConfigError("unknown model kind: " + name);
}

gan::GanConfig cgan_mode(gan::GanConfig cfg) {
  cfg.noise_mode = gan::NoiseMode::InputOnly;
  cfg.divergence = gan::Divergence::Js;
  return cfg;
}

std::vector<chem::Molecule> parse_all(const std::vector<std::string> &smiles) {
  std::vector<chem::Molecule> out;
  out.reserve(smiles.size());
  for (const auto &s : smiles) {
    out.push_back(chem::parse_smiles(s));
  }
  return out;
}

std::vector<std::vector<std::string>> tokenize_all(
    const std::vector<std::string> &smiles) {
  std::vector<std::vector<std::string>> out;
  out.reserve(smiles.size());
  for (const auto &s : smiles) {
    out.push_back(feat::tokenize_smiles(s));
  }
  return out;
}

nn::Matrix assemble_features(const std::vector<chem::Molecule> &molecules,
                             const std::vector<std::vector<std::string>> &tokens,
                             const feat::EmbeddingMatrix &embedding,
                             const feat::FingerprintConfig &fp_cfg) {
  if (molecules.size() != tokens.size()) {
    throw DimensionMismatch("molecule/token list size mismatch");
  }
  nn::Matrix x(molecules.size(), feat::kFeatureDim);
  for (size_t i = 0; i < molecules.size(); ++i) {
    const feat::BitFingerprint fp =
        feat::morgan_fingerprint(molecules[i], fp_cfg);
    const std::vector<double> emb = feat::embed_tokens(tokens[i], embedding);
    const std::vector<double> row = feat::concat_features(fp, emb);
    for (size_t c = 0; c < row.size(); ++c) {
      x(i, c) = row[c];
    }
  }
  return x;
}

PipelineModel train_pipeline(const std::vector<std::string> &smiles,
                             const std::vector<double> &activity,
                             const PipelineConfig &cfg, ModelKind kind,
                             uint64_t seed) {
  if (smiles.size() != activity.size()) {
    throw DimensionMismatch("smiles/activity size mismatch");
  }
  PipelineModel model;
  model.config = cfg;
  model.kind = kind;

  const auto molecules = parse_all(smiles);
  const auto tokens = tokenize_all(smiles);
  model.embedding = feat::train_skipgram(tokens, cfg.skipgram, seed);
  nn::Matrix x = assemble_features(molecules, tokens, model.embedding,
                                   cfg.fingerprint);
  model.standardizer = feat::FeatureStandardizer::fit(
      x, feat::kFingerprintBits, feat::kFeatureDim);
  model.standardizer.apply(x);

  const nn::Matrix *cond = &x;
  nn::Matrix latent;
  const bool gan_head = kind == ModelKind::ProbCgan || kind == ModelKind::Cgan;
  if (gan_head) {
    model.autoencoder = ae::train_autoencoder(x, cfg.autoencoder, seed);
    latent = model.autoencoder->encode_batch(x);
    cond = &latent;
  }

  switch (kind) {
    case ModelKind::ProbCgan:
      model.head = gan::train(*cond, activity, cfg.gan, seed);
      break;
    case ModelKind::Cgan:
      model.head = gan::train(*cond, activity, cgan_mode(cfg.gan), seed);
      break;
    case ModelKind::Ridge:
      model.head = baselines::ridge_fit(x, activity, cfg.baselines.ridge_lambda);
      break;
    case ModelKind::Knn:
      model.head = baselines::knn_fit(
          x, activity, std::min(cfg.baselines.knn_k, x.rows()));
      break;
    case ModelKind::Tree:
      model.head = baselines::tree_fit(x, activity, cfg.baselines.tree_max_depth,
                                       cfg.baselines.tree_min_leaf);
      break;
    case ModelKind::Mlp:
      model.head = baselines::mlp_fit(x, activity, cfg.baselines.mlp, seed);
      break;
  }
  return model;
}

Prediction predict_pipeline(const PipelineModel &model,
                            const std::string &smiles, uint64_t seed) {
  const chem::Molecule mol = chem::parse_smiles(smiles);
  const auto tokens = feat::tokenize_smiles(smiles);
  const feat::BitFingerprint fp =
      feat::morgan_fingerprint(mol, model.config.fingerprint);
  const std::vector<double> emb = feat::embed_tokens(tokens, model.embedding);
  std::vector<double> features = feat::concat_features(fp, emb);
  model.standardizer.apply(features);

  Prediction out;
  if (const auto *gan_head = std::get_if<gan::ProbCganModel>(&model.head)) {
    std::vector<double> cond = model.autoencoder
                                   ? model.autoencoder->encode(features)
                                   : features;
    nn::Prng rng(seed);
    const gan::PredictiveDistribution dist =
        gan::predict(*gan_head, cond, model.config.gan.predict_samples, rng);
    out.mean = dist.mean();
    out.stddev = dist.stddev();
  } else if (const auto *ridge = std::get_if<baselines::RidgeModel>(&model.head)) {
    out.mean = baselines::ridge_predict(*ridge, features);
  } else if (const auto *knn = std::get_if<baselines::KnnModel>(&model.head)) {
    out.mean = baselines::knn_predict(*knn, features);
  } else if (const auto *tree = std::get_if<baselines::TreeModel>(&model.head)) {
    out.mean = baselines::tree_predict(*tree, features);
  } else if (const auto *mlp = std::get_if<baselines::MlpModel>(&model.head)) {
    nn::Matrix x(1, features.size());
    for (size_t c = 0; c < features.size(); ++c) {
      x(0, c) = features[c];
    }
    out.mean = baselines::mlp_predict(*mlp, x)[0];
  }
  return out;
}

}  // namespace probqsar
