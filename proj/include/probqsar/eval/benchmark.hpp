#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "probqsar/eval/split.hpp"
#include "probqsar/nn/matrix.hpp"
#include "probqsar/pipeline.hpp"

namespace probqsar::dataio {
struct Dataset;
}

namespace probqsar::eval {

// Trips if any fit in the harness ever sees a test row.
class LeakageGuard {
public:
  explicit LeakageGuard(const std::vector<size_t> &test_indices)
      : test_(test_indices.begin(), test_indices.end()) {}

  void check(const std::vector<size_t> &fit_indices) const;

private:
  std::unordered_set<size_t> test_;
};

class Regressor {
public:
  virtual ~Regressor() = default;
  virtual void fit(const nn::Matrix &x, const std::vector<double> &y,
                   uint64_t seed) = 0;
  virtual std::vector<double> predict(const nn::Matrix &x) const = 0;
};

// Which conditioning each model consumes: the standardized 812-d fusion,
// the 203-d autoencoder code, or the bare 512 fingerprint columns.
enum class Rep {
  Raw812,
  Latent,
  FingerprintOnly,
};

struct ModelSpec {
  std::string name;
  Rep rep = Rep::Raw812;
  std::function<std::unique_ptr<Regressor>()> factory;
};

ModelSpec make_ridge_spec(const std::string &name, Rep rep, double lambda);
ModelSpec make_knn_spec(const std::string &name, Rep rep, size_t k);
ModelSpec make_tree_spec(const std::string &name, Rep rep, int max_depth,
                         size_t min_leaf);
ModelSpec make_mlp_spec(const std::string &name, Rep rep,
                        const baselines::MlpConfig &cfg);
ModelSpec make_probcgan_spec(const std::string &name, Rep rep,
                             const gan::GanConfig &cfg);

// The Table-1 style roster: each baseline on both representations plus the
// Prob-cGAN on the latent code.
std::vector<ModelSpec> default_benchmark_models(const PipelineConfig &cfg);
// The Table-2 style roster: full Prob-cGAN, cGAN mode, no autoencoder,
// fingerprint-only without autoencoder.
std::vector<ModelSpec> ablation_models(const PipelineConfig &cfg);

struct EvalRow {
  std::string name;
  std::vector<double> r2;    // one entry per seed
  std::vector<double> rmse;
};

struct EvalReport {
  std::vector<uint64_t> seeds;
  std::vector<EvalRow> rows;
  uint64_t dataset_fingerprint = 0;
  uint64_t config_fingerprint = 0;

  std::string to_csv() const;
  std::string to_text() const;

  double mean_r2(const std::string &row_name) const;
  double mean_rmse(const std::string &row_name) const;
};

// "0.8131 (±0.0008)" with the ± only when 2+ seeds contributed.
std::string format_mean_std(const std::vector<double> &values);

// Per-model (rank, truth, prediction) triples sorted by truth, first seed
// only; serialized as CSV for external plotting.
struct CurveData {
  std::string csv = "rank,truth,prediction,model\n";
  void add(const std::string &model, const std::vector<double> &truth,
           const std::vector<double> &pred);
};

// Generic driver over a fixed feature matrix. The autoencoder (and
// everything else that fits) trains on training rows only, enforced by a
// LeakageGuard.
EvalReport run_benchmark(const nn::Matrix &x, const std::vector<double> &y,
                         const std::vector<ModelSpec> &models,
                         const std::vector<uint64_t> &seeds,
                         const PipelineConfig &cfg,
                         CurveData *curves = nullptr);

// Chemistry driver: re-featurizes per seed (skip-gram and standardizer are
// split-dependent) and then scores the same way.
EvalReport run_chem_benchmark(const dataio::Dataset &dataset,
                              const std::vector<ModelSpec> &models,
                              const std::vector<uint64_t> &seeds,
                              const PipelineConfig &cfg,
                              CurveData *curves = nullptr);

}  // namespace probqsar::eval
