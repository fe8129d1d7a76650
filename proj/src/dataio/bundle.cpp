#include "probqsar/dataio/bundle.hpp"

#include <map>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/feat/fnv.hpp"

namespace probqsar::dataio {

namespace {

std::string head_to_bytes(const ModelHead &head) {
  return std::visit([](const auto &h) { return h.to_bytes(); }, head);
}

ModelHead head_from_bytes(ModelKind kind, const std::string &bytes) {
  switch (kind) {
    case ModelKind::ProbCgan:
    case ModelKind::Cgan:
      return gan::ProbCganModel::from_bytes(bytes);
    case ModelKind::Ridge:
      return baselines::RidgeModel::from_bytes(bytes);
    case ModelKind::Knn:
      return baselines::KnnModel::from_bytes(bytes);
    case ModelKind::Tree:
      return baselines::TreeModel::from_bytes(bytes);
    case ModelKind::Mlp:
      return baselines::MlpModel::from_bytes(bytes);
  }
  throw CorruptFile("unhandled model kind");
}

}  // namespace

void save_model_bundle(const std::string &path, const RunConfig &config,
                       const PipelineModel &model) {
  std::vector<std::pair<std::string, std::string>> sections;
  sections.emplace_back("config", config.serialize());
  sections.emplace_back("kind", to_string(model.kind));
  sections.emplace_back("embedding", feat::embedding_to_bytes(model.embedding));
  sections.emplace_back("standardizer", model.standardizer.to_bytes());
  if (model.autoencoder) {
    sections.emplace_back("autoencoder", model.autoencoder->to_bytes());
  }
  sections.emplace_back("model", head_to_bytes(model.head));

  ByteWriter payload;
  ByteWriter table;
  for (const auto &[name, bytes] : sections) {
    table.str(name);
    table.u64(payload.data().size());
    table.u64(bytes.size());
    table.u64(feat::fnv1a_bytes(bytes.data(), bytes.size()));
    payload.bytes(bytes.data(), bytes.size());
  }

  ByteWriter file;
  file.bytes("PQSR", 4);
  file.u16(1);
  file.u32(static_cast<uint32_t>(sections.size()));
  file.bytes(table.data().data(), table.data().size());
  file.bytes(payload.data().data(), payload.data().size());
  write_file_atomic(path, file.data());
}

LoadedBundle load_model_bundle(const std::string &path) {
  const std::string data = read_file(path);
  ByteReader r(data);
  if (r.raw(4) != std::string_view("PQSR", 4)) {
    throw CorruptFile("bad bundle magic in " + path);
  }
  const uint16_t version = r.u16();
  if (version != 1) {
    throw VersionMismatch("bundle format version " + std::to_string(version) +
                          " unsupported (reader supports 1)");
  }
  const uint32_t n_sections = r.u32();
  struct Entry {
    uint64_t offset, length, checksum;
  };
  std::map<std::string, Entry> table;
  for (uint32_t i = 0; i < n_sections; ++i) {
    const std::string name = r.str();
    Entry e{};
    e.offset = r.u64();
    e.length = r.u64();
    e.checksum = r.u64();
    table[name] = e;
  }
  const size_t payload_start = data.size() - r.remaining();

  auto section = [&](const std::string &name) {
    auto it = table.find(name);
    if (it == table.end()) {
      throw CorruptFile("bundle is missing section '" + name + "'");
    }
    const Entry &e = it->second;
    if (payload_start + e.offset + e.length > data.size()) {
      throw CorruptFile("bundle section '" + name + "' is out of bounds");
    }
    std::string bytes = data.substr(payload_start + e.offset, e.length);
    if (feat::fnv1a_bytes(bytes.data(), bytes.size()) != e.checksum) {
      throw CorruptFile("bundle section '" + name + "' failed its checksum");
    }
    return bytes;
  };

  LoadedBundle out;
  out.config = RunConfig::parse(section("config"));
  out.model.config = out.config.to_pipeline();
  out.model.kind = model_kind_from_string(section("kind"));
  out.model.embedding = feat::embedding_from_bytes(section("embedding"));
  out.model.standardizer =
      feat::FeatureStandardizer::from_bytes(section("standardizer"));
  if (table.count("autoencoder") != 0) {
    out.model.autoencoder =
        ae::AutoencoderModel::from_bytes(section("autoencoder"));
  }
  out.model.head = head_from_bytes(out.model.kind, section("model"));
  return out;
}

}  // namespace probqsar::dataio
