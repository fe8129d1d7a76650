#include "probqsar/dataio/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "probqsar/chem/smiles.hpp"
#include "probqsar/dataio/bundle.hpp"
#include "probqsar/dataio/bytes.hpp"
#include "probqsar/dataio/config.hpp"
#include "probqsar/dataio/dataset.hpp"
#include "probqsar/eval/benchmark.hpp"
#include "probqsar/eval/metrics.hpp"
#include "probqsar/eval/split.hpp"
#include "probqsar/eval/synthetic.hpp"
#include "probqsar/nn/training.hpp"

namespace probqsar::dataio {

namespace {

uint64_t env_or_default_seed() {
  if (const char *env = std::getenv("PROBQSAR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      throw ConfigError("PROBQSAR_SEED is not an integer: " +
                        std::string(env));
    }
  }
  return 1;
}

RunConfig load_config(const std::string &path) {
  RunConfig cfg = path.empty() ? RunConfig::defaults() : RunConfig::load(path);
  std::fprintf(stderr, "config_fingerprint: 0x%016llx\n",
               static_cast<unsigned long long>(cfg.fingerprint()));
  return cfg;
}

std::vector<std::string> read_smiles_lines(const std::string &path) {
  std::vector<std::string> out;
  const std::string text = read_file(path);
  std::string line;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != '\n') {
      if (text[i] != '\r') {
        line += text[i];
      }
      continue;
    }
    if (!line.empty()) {
      out.push_back(line);
    }
    line.clear();
  }
  return out;
}

void write_or_print(const std::string &path, const std::string &contents) {
  if (path.empty()) {
    std::fputs(contents.c_str(), stdout);
  } else {
    write_file_atomic(path, contents);
  }
}

std::vector<uint64_t> resolve_seeds(const RunConfig &cfg,
                                    const std::string &seeds_flag,
                                    std::optional<uint64_t> seed_flag) {
  if (seed_flag) {
    return {*seed_flag};
  }
  if (!seeds_flag.empty()) {
    std::vector<uint64_t> out;
    for (size_t v : parse_size_list(seeds_flag)) {
      out.push_back(static_cast<uint64_t>(v));
    }
    return out;
  }
  return cfg.seeds();
}

// "PQFV" u16 version, u32 rows, u32 dim, per row a length-prefixed
// compound id, then rows*dim f64 features, then rows f64 activities.
void cmd_featurize(const std::string &input, const std::string &out_path,
                   const RunConfig &run_cfg, uint64_t seed) {
  const PipelineConfig cfg = run_cfg.to_pipeline();
  const Dataset ds = load_chembl_csv(input, ColumnMap{});
  std::fprintf(stderr, "%s\n", ds.provenance.skips.summary().c_str());

  std::vector<std::string> smiles;
  for (const auto &rec : ds.records) {
    smiles.push_back(rec.smiles);
  }
  const auto molecules = parse_all(smiles);
  const auto tokens = tokenize_all(smiles);
  const feat::EmbeddingMatrix embedding =
      feat::train_skipgram(tokens, cfg.skipgram, seed);
  nn::Matrix x = assemble_features(molecules, tokens, embedding,
                                   cfg.fingerprint);
  const feat::FeatureStandardizer standardizer = feat::FeatureStandardizer::fit(
      x, feat::kFingerprintBits, feat::kFeatureDim);
  standardizer.apply(x);

  ByteWriter w;
  w.bytes("PQFV", 4);
  w.u16(1);
  w.u32(static_cast<uint32_t>(x.rows()));
  w.u32(static_cast<uint32_t>(x.cols()));
  for (const auto &rec : ds.records) {
    w.str(rec.compound_id);
  }
  for (size_t i = 0; i < x.size(); ++i) {
    w.f64(x.data()[i]);
  }
  for (const auto &rec : ds.records) {
    w.f64(rec.pchembl);
  }
  write_file_atomic(out_path, w.data());
  std::fprintf(stderr, "wrote %zu x %zu features to %s\n", x.rows(), x.cols(),
               out_path.c_str());
}

void cmd_train(const std::string &input, const std::string &out_path,
               const std::string &model_name, const RunConfig &run_cfg,
               uint64_t seed) {
  const PipelineConfig cfg = run_cfg.to_pipeline();
  const ModelKind kind = model_kind_from_string(model_name);
  const Dataset ds = load_chembl_csv(input, ColumnMap{});
  std::fprintf(stderr, "%s\n", ds.provenance.skips.summary().c_str());

  std::vector<std::string> smiles;
  std::vector<double> activity;
  for (const auto &rec : ds.records) {
    smiles.push_back(rec.smiles);
    activity.push_back(rec.pchembl);
  }
  const PipelineModel model =
      train_pipeline(smiles, activity, cfg, kind, seed);
  save_model_bundle(out_path, run_cfg, model);
  std::fprintf(stderr, "trained %s on %zu records -> %s\n",
               to_string(kind).c_str(), smiles.size(), out_path.c_str());
}

void cmd_predict(const std::string &bundle_path,
                 const std::vector<std::string> &smiles_args,
                 const std::string &smiles_file, const std::string &out_path,
                 int samples, uint64_t seed) {
  LoadedBundle bundle = load_model_bundle(bundle_path);
  if (samples > 0) {
    bundle.model.config.gan.predict_samples = samples;
  }
  std::vector<std::string> inputs = smiles_args;
  if (!smiles_file.empty()) {
    for (auto &line : read_smiles_lines(smiles_file)) {
      inputs.push_back(std::move(line));
    }
  }
  if (inputs.empty()) {
    throw NoValidRows("predict: no SMILES given (use --smiles or "
                      "--smiles-file)");
  }

  std::string csv = "smiles,mean,std\n";
  const nn::Prng master(seed);
  char buf[64];
  for (size_t i = 0; i < inputs.size(); ++i) {
    const Prediction p =
        predict_pipeline(bundle.model, inputs[i], master.fork(i).seed());
    std::snprintf(buf, sizeof(buf), ",%.6f,%.6f\n", p.mean, p.stddev);
    csv += inputs[i] + buf;
  }
  write_or_print(out_path, csv);
}

void cmd_benchmark(const std::string &input, const std::string &out_prefix,
                   const RunConfig &run_cfg,
                   const std::vector<uint64_t> &seeds, bool ablation) {
  const PipelineConfig cfg = run_cfg.to_pipeline();
  const Dataset ds = load_chembl_csv(input, ColumnMap{});
  std::fprintf(stderr, "%s\n", ds.provenance.skips.summary().c_str());

  const std::vector<eval::ModelSpec> models =
      ablation ? eval::ablation_models(cfg) : eval::default_benchmark_models(cfg);
  eval::CurveData curves;
  eval::EvalReport report =
      eval::run_chem_benchmark(ds, models, seeds, cfg, &curves);
  report.config_fingerprint = run_cfg.fingerprint();

  write_file_atomic(out_prefix + ".csv", report.to_csv());
  write_file_atomic(out_prefix + ".txt", report.to_text());
  write_file_atomic(out_prefix + "_curves.csv", curves.csv);
  std::fputs(report.to_text().c_str(), stdout);
  std::fprintf(stderr, "wrote %s.csv, %s.txt, %s_curves.csv\n",
               out_prefix.c_str(), out_prefix.c_str(), out_prefix.c_str());
}

void cmd_synth_check(size_t n, uint64_t seed, const std::string &out_path,
                     const RunConfig &run_cfg) {
  const PipelineConfig cfg = run_cfg.to_pipeline();
  const eval::SyntheticTask task = eval::synthetic_heteroscedastic_task(n, seed);
  const eval::Split sp = eval::split(n, {cfg.train_fraction, seed});

  const nn::Matrix x_train = nn::gather_rows(task.x, sp.train);
  std::vector<double> y_train;
  for (size_t i : sp.train) {
    y_train.push_back(task.y[i]);
  }
  const gan::ProbCganModel model = gan::train(x_train, y_train, cfg.gan, seed);

  const nn::Matrix x_test = nn::gather_rows(task.x, sp.test);
  std::vector<double> y_test, sigma_test;
  for (size_t i : sp.test) {
    y_test.push_back(task.y[i]);
    sigma_test.push_back(task.true_std[i]);
  }
  const nn::Prng master(seed ^ 0x73796e7468ULL);
  const std::vector<double> pred_mean =
      gan::predict_means(model, x_test, cfg.gan.predict_samples, master);
  const std::vector<double> pred_std =
      gan::predict_stddevs(model, x_test, cfg.gan.predict_samples, master);

  const double bayes = eval::bayes_rmse(task, sp.test);
  const double model_rmse = eval::rmse(pred_mean, y_test);
  const double rho = eval::spearman(pred_std, sigma_test);

  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "# probqsar synth-check\n"
                "# n: %zu seed: %llu\n"
                "# config_fingerprint: 0x%016llx\n"
                "bayes_rmse,%.6f\n"
                "model_rmse,%.6f\n"
                "rmse_ratio,%.6f\n"
                "spearman_std,%.6f\n"
                "rmse_within_1.5x_bayes,%d\n"
                "spearman_above_0.5,%d\n",
                n, static_cast<unsigned long long>(seed),
                static_cast<unsigned long long>(run_cfg.fingerprint()), bayes,
                model_rmse, model_rmse / bayes, rho,
                model_rmse <= 1.5 * bayes ? 1 : 0, rho > 0.5 ? 1 : 0);
  write_or_print(out_path, buf);
  if (!out_path.empty()) {
    std::fputs(buf, stdout);
  }
}

}  // namespace

int cli_main(int argc, const char *const *argv) {
  CLI::App app{"QSAR activity prediction with a probabilistic conditional "
               "GAN regressor"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "run configuration file")
      ->expected(1);

  // featurize
  auto *featurize = app.add_subcommand(
      "featurize", "compute 812-d descriptors for a CSV of molecules");
  std::string fz_input, fz_out;
  std::optional<uint64_t> fz_seed;
  featurize->add_option("--input", fz_input, "input CSV/TSV")->required();
  featurize->add_option("--out", fz_out, "output feature file")->required();
  featurize->add_option("--seed", fz_seed, "embedding training seed");

  // train
  auto *train = app.add_subcommand("train", "train a model bundle");
  std::string tr_input, tr_out, tr_model = "prob_cgan";
  std::optional<uint64_t> tr_seed;
  train->add_option("--input", tr_input, "input CSV/TSV")->required();
  train->add_option("--out", tr_out, "output bundle path")->required();
  train->add_option("--model", tr_model,
                    "prob_cgan|cgan|ridge|knn|tree|mlp");
  train->add_option("--seed", tr_seed, "training seed");

  // predict
  auto *predict = app.add_subcommand("predict", "predict activity for SMILES");
  std::string pr_bundle, pr_file, pr_out;
  std::vector<std::string> pr_smiles;
  int pr_samples = 0;
  std::optional<uint64_t> pr_seed;
  predict->add_option("--bundle", pr_bundle, "model bundle")->required();
  predict->add_option("--smiles", pr_smiles, "SMILES strings");
  predict->add_option("--smiles-file", pr_file, "file with one SMILES per line");
  predict->add_option("--out", pr_out, "output CSV (stdout if omitted)");
  predict->add_option("--samples", pr_samples, "override K for the GAN head");
  predict->add_option("--seed", pr_seed, "sampling seed");

  // benchmark
  auto *benchmark =
      app.add_subcommand("benchmark", "multi-seed model comparison report");
  std::string bm_input, bm_out = "benchmark_report", bm_seeds;
  std::optional<uint64_t> bm_seed;
  benchmark->add_option("--input", bm_input, "input CSV/TSV")->required();
  benchmark->add_option("--out", bm_out, "output path prefix");
  benchmark->add_option("--seeds", bm_seeds, "comma-separated seed list");
  benchmark->add_option("--seed", bm_seed, "single seed (overrides --seeds)");

  // ablate
  auto *ablate =
      app.add_subcommand("ablate", "Prob-cGAN ablation report");
  std::string ab_input, ab_out = "ablation_report", ab_seeds;
  std::optional<uint64_t> ab_seed;
  ablate->add_option("--input", ab_input, "input CSV/TSV")->required();
  ablate->add_option("--out", ab_out, "output path prefix");
  ablate->add_option("--seeds", ab_seeds, "comma-separated seed list");
  ablate->add_option("--seed", ab_seed, "single seed (overrides --seeds)");

  // synth-check
  auto *synth = app.add_subcommand(
      "synth-check", "heteroscedastic oracle check of the Prob-cGAN");
  size_t sy_n = 2000;
  std::string sy_out;
  std::optional<uint64_t> sy_seed;
  synth->add_option("--n", sy_n, "sample count (>= 500)");
  synth->add_option("--out", sy_out, "report path (stdout if omitted)");
  synth->add_option("--seed", sy_seed, "task and training seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    const RunConfig run_cfg = load_config(config_path);
    auto seed_of = [&](const std::optional<uint64_t> &flag) {
      return flag ? *flag : env_or_default_seed();
    };
    if (featurize->parsed()) {
      cmd_featurize(fz_input, fz_out, run_cfg, seed_of(fz_seed));
    } else if (train->parsed()) {
      cmd_train(tr_input, tr_out, tr_model, run_cfg, seed_of(tr_seed));
    } else if (predict->parsed()) {
      cmd_predict(pr_bundle, pr_smiles, pr_file, pr_out, pr_samples,
                  seed_of(pr_seed));
    } else if (benchmark->parsed()) {
      cmd_benchmark(bm_input, bm_out, run_cfg,
                    resolve_seeds(run_cfg, bm_seeds, bm_seed), false);
    } else if (ablate->parsed()) {
      cmd_benchmark(ab_input, ab_out, run_cfg,
                    resolve_seeds(run_cfg, ab_seeds, ab_seed), true);
    } else if (synth->parsed()) {
      cmd_synth_check(sy_n, seed_of(sy_seed), sy_out, run_cfg);
    }
  } catch (const Error &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 2;
  }
  return 0;
}

}  // namespace probqsar::dataio
