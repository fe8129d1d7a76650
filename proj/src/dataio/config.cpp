#include "probqsar/dataio/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/feat/fnv.hpp"

namespace probqsar::dataio {

namespace {

enum class KeyType { Int, Real, Str };

struct KeyDef {
  const char *name;
  KeyType type;
  const char *default_value;
};

// Registry order is the canonical serialization order.
constexpr std::array<KeyDef, 35> kKeys = {{
    {"fp.length", KeyType::Int, "512"},
    {"fp.radius", KeyType::Int, "3"},
    {"sg.dim", KeyType::Int, "300"},
    {"sg.window", KeyType::Int, "5"},
    {"sg.negatives", KeyType::Int, "5"},
    {"sg.epochs", KeyType::Int, "15"},
    {"sg.lr", KeyType::Real, "0.025"},
    {"ae.hidden", KeyType::Int, "512"},
    {"ae.code", KeyType::Int, "203"},
    {"ae.epochs", KeyType::Int, "200"},
    {"ae.batch", KeyType::Int, "32"},
    {"ae.lr", KeyType::Real, "0.001"},
    {"gan.epochs", KeyType::Int, "300"},
    {"gan.batch", KeyType::Int, "32"},
    {"gan.lr", KeyType::Real, "0.0002"},
    {"gan.beta1", KeyType::Real, "0.5"},
    {"gan.beta2", KeyType::Real, "0.999"},
    {"gan.d_steps", KeyType::Int, "1"},
    {"gan.noise_dim", KeyType::Int, "32"},
    {"gan.divergence", KeyType::Str, "pearson_chi2"},
    {"gan.noise_mode", KeyType::Str, "every_layer"},
    {"gan.predict_samples", KeyType::Int, "100"},
    {"gan.gen_hidden", KeyType::Str, "256,128,64"},
    {"gan.disc_pathway", KeyType::Int, "128"},
    {"gan.disc_trunk", KeyType::Str, "128"},
    {"baseline.ridge_lambda", KeyType::Real, "1.0"},
    {"baseline.knn_k", KeyType::Int, "5"},
    {"baseline.tree_max_depth", KeyType::Int, "12"},
    {"baseline.tree_min_leaf", KeyType::Int, "3"},
    {"baseline.mlp_hidden", KeyType::Str, "128,64"},
    {"baseline.mlp_epochs", KeyType::Int, "200"},
    {"baseline.mlp_batch", KeyType::Int, "32"},
    {"baseline.mlp_lr", KeyType::Real, "0.001"},
    {"bench.train_fraction", KeyType::Real, "0.8"},
    {"bench.seeds", KeyType::Str, "1,2,3,4,5"},
}};

const KeyDef *find_key(const std::string &name) {
  for (const auto &def : kKeys) {
    if (name == def.name) {
      return &def;
    }
  }
  return nullptr;
}

std::string trim(const std::string &s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return s.substr(b, e - b);
}

}  // namespace

std::vector<size_t> parse_size_list(const std::string &text) {
  std::vector<size_t> out;
  std::string token;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      token = trim(token);
      if (!token.empty()) {
        out.push_back(static_cast<size_t>(std::stoull(token)));
      }
      token.clear();
    } else {
      token += text[i];
    }
  }
  return out;
}

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  for (const auto &def : kKeys) {
    cfg.values_[def.name] = def.default_value;
  }
  return cfg;
}

void RunConfig::set(const std::string &key, const std::string &value) {
  const KeyDef *def = find_key(key);
  if (def == nullptr) {
    throw ConfigError("unknown configuration key: " + key);
  }
  const std::string v = trim(value);
  try {
    switch (def->type) {
      case KeyType::Int:
        (void)std::stoll(v);
        break;
      case KeyType::Real:
        (void)std::stod(v);
        break;
      case KeyType::Str:
        break;
    }
  } catch (const std::exception &) {
    throw ConfigError("bad value for " + key + ": '" + v + "'");
  }
  values_[key] = v;
}

RunConfig RunConfig::parse(const std::string &text) {
  RunConfig cfg = defaults();
  size_t line_no = 0;
  std::string line;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != '\n') {
      line += text[i];
      continue;
    }
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    line = trim(line);
    if (!line.empty()) {
      const size_t eq = line.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": expected 'key = value'");
      }
      cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    line.clear();
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string &path) {
  return parse(read_file(path));
}

int64_t RunConfig::get_int(const std::string &key) const {
  return std::stoll(get_str(key));
}

double RunConfig::get_real(const std::string &key) const {
  return std::stod(get_str(key));
}

std::string RunConfig::get_str(const std::string &key) const {
  auto it = values_.find(key);
  if (it == values_.end()) {
    throw ConfigError("unknown configuration key: " + key);
  }
  return it->second;
}

std::string RunConfig::serialize() const {
  std::string out = "# probqsar run configuration\n";
  for (const auto &def : kKeys) {
    out += std::string(def.name) + " = " + values_.at(def.name) + "\n";
  }
  return out;
}

uint64_t RunConfig::fingerprint() const {
  const std::string s = serialize();
  return feat::fnv1a_bytes(s.data(), s.size());
}

PipelineConfig RunConfig::to_pipeline() const {
  PipelineConfig cfg;
  cfg.fingerprint.length_L = static_cast<uint32_t>(get_int("fp.length"));
  cfg.fingerprint.radius_r = static_cast<int>(get_int("fp.radius"));
  cfg.skipgram.dim = static_cast<int>(get_int("sg.dim"));
  cfg.skipgram.window = static_cast<int>(get_int("sg.window"));
  cfg.skipgram.negatives = static_cast<int>(get_int("sg.negatives"));
  cfg.skipgram.epochs = static_cast<int>(get_int("sg.epochs"));
  cfg.skipgram.learning_rate = get_real("sg.lr");
  cfg.autoencoder.hidden_dim = static_cast<size_t>(get_int("ae.hidden"));
  cfg.autoencoder.code_dim = static_cast<size_t>(get_int("ae.code"));
  cfg.autoencoder.epochs = static_cast<int>(get_int("ae.epochs"));
  cfg.autoencoder.batch_size = static_cast<size_t>(get_int("ae.batch"));
  cfg.autoencoder.learning_rate = get_real("ae.lr");
  cfg.gan.epochs = static_cast<int>(get_int("gan.epochs"));
  cfg.gan.batch_size = static_cast<size_t>(get_int("gan.batch"));
  cfg.gan.learning_rate = get_real("gan.lr");
  cfg.gan.beta1 = get_real("gan.beta1");
  cfg.gan.beta2 = get_real("gan.beta2");
  cfg.gan.d_steps = static_cast<int>(get_int("gan.d_steps"));
  cfg.gan.noise_dim = static_cast<size_t>(get_int("gan.noise_dim"));
  cfg.gan.divergence = gan::divergence_from_string(get_str("gan.divergence"));
  cfg.gan.noise_mode = gan::noise_mode_from_string(get_str("gan.noise_mode"));
  cfg.gan.predict_samples = static_cast<int>(get_int("gan.predict_samples"));
  cfg.gan.generator_hidden = parse_size_list(get_str("gan.gen_hidden"));
  cfg.gan.disc_pathway_dim = static_cast<size_t>(get_int("gan.disc_pathway"));
  cfg.gan.disc_trunk_hidden = parse_size_list(get_str("gan.disc_trunk"));
  cfg.baselines.ridge_lambda = get_real("baseline.ridge_lambda");
  cfg.baselines.knn_k = static_cast<size_t>(get_int("baseline.knn_k"));
  cfg.baselines.tree_max_depth =
      static_cast<int>(get_int("baseline.tree_max_depth"));
  cfg.baselines.tree_min_leaf =
      static_cast<size_t>(get_int("baseline.tree_min_leaf"));
  cfg.baselines.mlp.hidden = parse_size_list(get_str("baseline.mlp_hidden"));
  cfg.baselines.mlp.epochs = static_cast<int>(get_int("baseline.mlp_epochs"));
  cfg.baselines.mlp.batch_size =
      static_cast<size_t>(get_int("baseline.mlp_batch"));
  cfg.baselines.mlp.learning_rate = get_real("baseline.mlp_lr");
  cfg.train_fraction = get_real("bench.train_fraction");
  return cfg;
}

std::vector<uint64_t> RunConfig::seeds() const {
  std::vector<uint64_t> out;
  for (size_t v : parse_size_list(get_str("bench.seeds"))) {
    out.push_back(static_cast<uint64_t>(v));
  }
  return out;
}

}  // namespace probqsar::dataio
