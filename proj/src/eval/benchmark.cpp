#include "probqsar/eval/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "probqsar/dataio/dataset.hpp"
#include "probqsar/eval/metrics.hpp"
#include "probqsar/feat/fnv.hpp"
#include "probqsar/nn/training.hpp"

namespace probqsar::eval {

void LeakageGuard::check(const std::vector<size_t> &fit_indices) const {
  for (size_t i : fit_indices) {
    if (test_.count(i) != 0) {
      throw Error("leakage: fit call received test index " +
                  std::to_string(i));
    }
  }
}

namespace {

constexpr uint64_t kPredictStreamTag = 0x7072656469637400ULL;  // "predict"

std::vector<double> gather(const std::vector<double> &v,
                           const std::vector<size_t> &rows) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (size_t i : rows) {
    out.push_back(v[i]);
  }
  return out;
}

class RidgeReg : public Regressor {
public:
  explicit RidgeReg(double lambda) : lambda_(lambda) {}
  void fit(const nn::Matrix &x, const std::vector<double> &y,
           uint64_t /*seed*/) override {
    model_ = baselines::ridge_fit(x, y, lambda_);
  }
  std::vector<double> predict(const nn::Matrix &x) const override {
    return baselines::ridge_predict(model_, x);
  }

private:
  double lambda_;
  baselines::RidgeModel model_;
};

class KnnReg : public Regressor {
public:
  explicit KnnReg(size_t k) : k_(k) {}
  void fit(const nn::Matrix &x, const std::vector<double> &y,
           uint64_t /*seed*/) override {
    model_ = baselines::knn_fit(x, y, std::min(k_, x.rows()));
  }
  std::vector<double> predict(const nn::Matrix &x) const override {
    return baselines::knn_predict(model_, x);
  }

private:
  size_t k_;
  baselines::KnnModel model_;
};

class TreeReg : public Regressor {
public:
  TreeReg(int max_depth, size_t min_leaf)
      : max_depth_(max_depth), min_leaf_(min_leaf) {}
  void fit(const nn::Matrix &x, const std::vector<double> &y,
           uint64_t /*seed*/) override {
    model_ = baselines::tree_fit(x, y, max_depth_, min_leaf_);
  }
  std::vector<double> predict(const nn::Matrix &x) const override {
    return baselines::tree_predict(model_, x);
  }

private:
  int max_depth_;
  size_t min_leaf_;
  baselines::TreeModel model_;
};

class MlpReg : public Regressor {
public:
  explicit MlpReg(baselines::MlpConfig cfg) : cfg_(cfg) {}
  void fit(const nn::Matrix &x, const std::vector<double> &y,
           uint64_t seed) override {
    model_ = baselines::mlp_fit(x, y, cfg_, seed);
  }
  std::vector<double> predict(const nn::Matrix &x) const override {
    return baselines::mlp_predict(model_, x);
  }

private:
  baselines::MlpConfig cfg_;
  baselines::MlpModel model_;
};

class ProbCganReg : public Regressor {
public:
  explicit ProbCganReg(gan::GanConfig cfg) : cfg_(cfg) {}
  void fit(const nn::Matrix &x, const std::vector<double> &y,
           uint64_t seed) override {
    model_ = gan::train(x, y, cfg_, seed);
    seed_ = seed;
  }
  std::vector<double> predict(const nn::Matrix &x) const override {
    nn::Prng master(seed_ ^ kPredictStreamTag);
    return gan::predict_means(model_, x, cfg_.predict_samples, master);
  }

private:
  gan::GanConfig cfg_;
  gan::ProbCganModel model_;
  uint64_t seed_ = 0;
};

}  // namespace

ModelSpec make_ridge_spec(const std::string &name, Rep rep, double lambda) {
  return {name, rep, [lambda] { return std::make_unique<RidgeReg>(lambda); }};
}

ModelSpec make_knn_spec(const std::string &name, Rep rep, size_t k) {
  return {name, rep, [k] { return std::make_unique<KnnReg>(k); }};
}

ModelSpec make_tree_spec(const std::string &name, Rep rep, int max_depth,
                         size_t min_leaf) {
  return {name, rep, [max_depth, min_leaf] {
            return std::make_unique<TreeReg>(max_depth, min_leaf);
          }};
}

ModelSpec make_mlp_spec(const std::string &name, Rep rep,
                        const baselines::MlpConfig &cfg) {
  return {name, rep, [cfg] { return std::make_unique<MlpReg>(cfg); }};
}

ModelSpec make_probcgan_spec(const std::string &name, Rep rep,
                             const gan::GanConfig &cfg) {
  return {name, rep, [cfg] { return std::make_unique<ProbCganReg>(cfg); }};
}

std::vector<ModelSpec> default_benchmark_models(const PipelineConfig &cfg) {
  std::vector<ModelSpec> models;
  models.push_back(make_probcgan_spec("Prob-cGAN", Rep::Latent, cfg.gan));
  models.push_back(make_ridge_spec("Ridge (raw-812)", Rep::Raw812,
                                   cfg.baselines.ridge_lambda));
  models.push_back(make_ridge_spec("Ridge (latent-203)", Rep::Latent,
                                   cfg.baselines.ridge_lambda));
  models.push_back(
      make_knn_spec("K-Neighbours (raw-812)", Rep::Raw812, cfg.baselines.knn_k));
  models.push_back(make_knn_spec("K-Neighbours (latent-203)", Rep::Latent,
                                 cfg.baselines.knn_k));
  models.push_back(make_tree_spec("Decision Tree (raw-812)", Rep::Raw812,
                                  cfg.baselines.tree_max_depth,
                                  cfg.baselines.tree_min_leaf));
  models.push_back(make_tree_spec("Decision Tree (latent-203)", Rep::Latent,
                                  cfg.baselines.tree_max_depth,
                                  cfg.baselines.tree_min_leaf));
  models.push_back(make_mlp_spec("MLP (raw-812)", Rep::Raw812, cfg.baselines.mlp));
  models.push_back(
      make_mlp_spec("MLP (latent-203)", Rep::Latent, cfg.baselines.mlp));
  return models;
}

std::vector<ModelSpec> ablation_models(const PipelineConfig &cfg) {
  std::vector<ModelSpec> models;
  models.push_back(make_probcgan_spec("Prob-cGAN", Rep::Latent, cfg.gan));
  models.push_back(
      make_probcgan_spec("cGAN", Rep::Latent, cgan_mode(cfg.gan)));
  models.push_back(
      make_probcgan_spec("(w/o) Autoencoder", Rep::Raw812, cfg.gan));
  models.push_back(make_probcgan_spec("(w/o) Autoencoder, Word Embedding",
                                      Rep::FingerprintOnly, cfg.gan));
  return models;
}

namespace {

nn::Matrix slice_columns(const nn::Matrix &x, size_t width) {
  nn::Matrix out(x.rows(), width);
  for (size_t r = 0; r < x.rows(); ++r) {
    const double *src = x.row(r);
    double *dst = out.row(r);
    for (size_t c = 0; c < width; ++c) {
      dst[c] = src[c];
    }
  }
  return out;
}

// One seed's worth of fitting and scoring over prepared features.
void score_seed(const nn::Matrix &x, const std::vector<double> &y,
                const Split &sp, const std::vector<ModelSpec> &models,
                const PipelineConfig &cfg, uint64_t seed, bool emit_curves,
                EvalReport &report, CurveData *curves) {
  const LeakageGuard guard(sp.test);
  guard.check(sp.train);

  bool needs_latent = false;
  for (const auto &spec : models) {
    needs_latent = needs_latent || spec.rep == Rep::Latent;
  }

  nn::Matrix latent;
  if (needs_latent) {
    ae::AutoencoderConfig ae_cfg = cfg.autoencoder;
    ae_cfg.input_dim = x.cols();
    guard.check(sp.train);
    const nn::Matrix x_train = nn::gather_rows(x, sp.train);
    const ae::AutoencoderModel ae_model =
        ae::train_autoencoder(x_train, ae_cfg, seed);
    latent = ae_model.encode_batch(x);
  }

  nn::Matrix fp_only;
  for (const auto &spec : models) {
    if (spec.rep == Rep::FingerprintOnly && fp_only.rows() == 0) {
      fp_only = slice_columns(x, std::min(x.cols(), feat::kFingerprintBits));
    }
  }

  const std::vector<double> y_test = gather(y, sp.test);
  for (size_t m = 0; m < models.size(); ++m) {
    const nn::Matrix &rep = models[m].rep == Rep::Latent ? latent
                            : models[m].rep == Rep::FingerprintOnly
                                ? fp_only
                                : x;
    guard.check(sp.train);
    auto regressor = models[m].factory();
    regressor->fit(nn::gather_rows(rep, sp.train), gather(y, sp.train), seed);
    const std::vector<double> pred =
        regressor->predict(nn::gather_rows(rep, sp.test));
    report.rows[m].r2.push_back(r2(pred, y_test));
    report.rows[m].rmse.push_back(rmse(pred, y_test));
    if (emit_curves && curves != nullptr) {
      curves->add(models[m].name, y_test, pred);
    }
  }
}

uint64_t matrix_fingerprint(const nn::Matrix &x, const std::vector<double> &y) {
  feat::Fnv1a h;
  h.update_u64(x.rows()).update_u64(x.cols());
  h.update_bytes(x.data(), x.size() * sizeof(double));
  h.update_bytes(y.data(), y.size() * sizeof(double));
  return h.digest();
}

}  // namespace

EvalReport run_benchmark(const nn::Matrix &x, const std::vector<double> &y,
                         const std::vector<ModelSpec> &models,
                         const std::vector<uint64_t> &seeds,
                         const PipelineConfig &cfg, CurveData *curves) {
  if (seeds.empty()) {
    throw Error("benchmark needs at least one seed");
  }
  if (x.rows() != y.size()) {
    throw DimensionMismatch("benchmark feature/target row mismatch");
  }
  EvalReport report;
  report.seeds = seeds;
  report.dataset_fingerprint = matrix_fingerprint(x, y);
  report.config_fingerprint = pipeline_config_fingerprint(cfg);
  for (const auto &spec : models) {
    report.rows.push_back({spec.name, {}, {}});
  }
  for (size_t s = 0; s < seeds.size(); ++s) {
    const Split sp = split(x.rows(), {cfg.train_fraction, seeds[s]});
    score_seed(x, y, sp, models, cfg, seeds[s], s == 0, report, curves);
  }
  return report;
}

EvalReport run_chem_benchmark(const dataio::Dataset &dataset,
                              const std::vector<ModelSpec> &models,
                              const std::vector<uint64_t> &seeds,
                              const PipelineConfig &cfg, CurveData *curves) {
  if (seeds.empty()) {
    throw Error("benchmark needs at least one seed");
  }
  std::vector<std::string> smiles;
  std::vector<double> y;
  for (const auto &rec : dataset.records) {
    smiles.push_back(rec.smiles);
    y.push_back(rec.pchembl);
  }
  const auto molecules = parse_all(smiles);
  const auto tokens = tokenize_all(smiles);

  EvalReport report;
  report.seeds = seeds;
  report.dataset_fingerprint = dataset.fingerprint();
  report.config_fingerprint = pipeline_config_fingerprint(cfg);
  for (const auto &spec : models) {
    report.rows.push_back({spec.name, {}, {}});
  }

  for (size_t s = 0; s < seeds.size(); ++s) {
    const Split sp = split(smiles.size(), {cfg.train_fraction, seeds[s]});
    const LeakageGuard guard(sp.test);

    // skip-gram corpus and feature statistics come from training rows only
    guard.check(sp.train);
    std::vector<std::vector<std::string>> train_tokens;
    for (size_t i : sp.train) {
      train_tokens.push_back(tokens[i]);
    }
    const feat::EmbeddingMatrix embedding =
        feat::train_skipgram(train_tokens, cfg.skipgram, seeds[s]);
    nn::Matrix x =
        assemble_features(molecules, tokens, embedding, cfg.fingerprint);
    const feat::FeatureStandardizer standardizer = feat::FeatureStandardizer::fit(
        nn::gather_rows(x, sp.train), feat::kFingerprintBits,
        feat::kFeatureDim);
    standardizer.apply(x);

    score_seed(x, y, sp, models, cfg, seeds[s], s == 0, report, curves);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Report formatting

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double mean_of(const std::vector<double> &v) {
  double s = 0.0;
  for (double x : v) {
    s += x;
  }
  return s / static_cast<double>(v.size());
}

bool sample_std(const std::vector<double> &v, double *out) {
  if (v.size() < 2) {
    return false;
  }
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) {
    s += (x - m) * (x - m);
  }
  *out = std::sqrt(s / static_cast<double>(v.size() - 1));
  return true;
}

std::string hex64(uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string format_mean_std(const std::vector<double> &values) {
  double sd = 0.0;
  if (sample_std(values, &sd)) {
    return fmt4(mean_of(values)) + " (±" + fmt4(sd) + ")";
  }
  return fmt4(mean_of(values));
}

std::string EvalReport::to_csv() const {
  std::string out;
  out += "# probqsar report\n";
  out += "# dataset_fingerprint: " + hex64(dataset_fingerprint) + "\n";
  out += "# config_fingerprint: " + hex64(config_fingerprint) + "\n";
  out += "# seeds:";
  for (size_t i = 0; i < seeds.size(); ++i) {
    out += (i == 0 ? " " : ",") + std::to_string(seeds[i]);
  }
  out += "\nmodel,r2_mean,r2_std,rmse_mean,rmse_std,n_seeds\n";
  for (const auto &row : rows) {
    double r2_sd = 0.0, rmse_sd = 0.0;
    const bool has_sd = sample_std(row.r2, &r2_sd);
    sample_std(row.rmse, &rmse_sd);
    out += row.name + "," + fmt4(mean_of(row.r2)) + "," +
           (has_sd ? fmt4(r2_sd) : "") + "," + fmt4(mean_of(row.rmse)) + "," +
           (has_sd ? fmt4(rmse_sd) : "") + "," +
           std::to_string(row.r2.size()) + "\n";
  }
  return out;
}

std::string EvalReport::to_text() const {
  size_t name_width = 10;
  for (const auto &row : rows) {
    name_width = std::max(name_width, row.name.size());
  }
  std::string out;
  out += "dataset " + hex64(dataset_fingerprint) + ", config " +
         hex64(config_fingerprint) + ", " + std::to_string(seeds.size()) +
         " seed(s)\n";
  auto pad = [](std::string s, size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out += pad("Method", name_width + 2) + pad("R2", 20) + "RMSE\n";
  for (const auto &row : rows) {
    out += pad(row.name, name_width + 2) + pad(format_mean_std(row.r2), 20) +
           format_mean_std(row.rmse) + "\n";
  }
  return out;
}

double EvalReport::mean_r2(const std::string &row_name) const {
  for (const auto &row : rows) {
    if (row.name == row_name) {
      return mean_of(row.r2);
    }
  }
  throw Error("no report row named " + row_name);
}

double EvalReport::mean_rmse(const std::string &row_name) const {
  for (const auto &row : rows) {
    if (row.name == row_name) {
      return mean_of(row.rmse);
    }
  }
  throw Error("no report row named " + row_name);
}

void CurveData::add(const std::string &model, const std::vector<double> &truth,
                    const std::vector<double> &pred) {
  std::vector<size_t> order(truth.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (truth[a] != truth[b]) {
      return truth[a] < truth[b];
    }
    return a < b;
  });
  char buf[128];
  for (size_t rank = 0; rank < order.size(); ++rank) {
    std::snprintf(buf, sizeof(buf), "%zu,%.6f,%.6f,", rank,
                  truth[order[rank]], pred[order[rank]]);
    csv += buf;
    csv += model + "\n";
  }
}

}  // namespace probqsar::eval
