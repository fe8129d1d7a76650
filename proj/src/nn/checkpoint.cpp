#include "probqsar/nn/checkpoint.hpp"

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"

namespace probqsar::nn {

std::string checkpoint_to_bytes(const Checkpoint &ckpt) {
  dataio::ByteWriter w;
  w.bytes("PQNN", 4);
  w.u16(1);
  w.u16(ckpt.kind);
  w.u32(static_cast<uint32_t>(ckpt.extras_i.size()));
  for (int64_t v : ckpt.extras_i) {
    w.i64(v);
  }
  w.u32(static_cast<uint32_t>(ckpt.extras_f.size()));
  for (double v : ckpt.extras_f) {
    w.f64(v);
  }
  w.u32(static_cast<uint32_t>(ckpt.layers.size()));
  for (const DenseLayer &layer : ckpt.layers) {
    w.u32(static_cast<uint32_t>(layer.in_dim()));
    w.u32(static_cast<uint32_t>(layer.out_dim()));
    w.u8(static_cast<uint8_t>(layer.activation));
    for (size_t i = 0; i < layer.weights.size(); ++i) {
      w.f64(layer.weights.data()[i]);
    }
    for (size_t i = 0; i < layer.bias.size(); ++i) {
      w.f64(layer.bias.data()[i]);
    }
  }
  return w.take();
}

Checkpoint checkpoint_from_bytes(const std::string &bytes) {
  dataio::ByteReader r(bytes);
  if (r.raw(4) != std::string_view("PQNN", 4)) {
    throw CorruptFile("bad checkpoint magic");
  }
  const uint16_t version = r.u16();
  if (version != 1) {
    throw VersionMismatch("checkpoint format version " +
                          std::to_string(version) + " unsupported");
  }
  Checkpoint ckpt;
  ckpt.kind = r.u16();
  const uint32_t ni = r.u32();
  for (uint32_t i = 0; i < ni; ++i) {
    ckpt.extras_i.push_back(r.i64());
  }
  const uint32_t nf = r.u32();
  for (uint32_t i = 0; i < nf; ++i) {
    ckpt.extras_f.push_back(r.f64());
  }
  const uint32_t n_layers = r.u32();
  for (uint32_t l = 0; l < n_layers; ++l) {
    const uint32_t in = r.u32();
    const uint32_t out = r.u32();
    DenseLayer layer;
    layer.activation = static_cast<Activation>(r.u8());
    layer.weights = Matrix(out, in);
    layer.bias = Matrix(1, out);
    for (size_t i = 0; i < layer.weights.size(); ++i) {
      layer.weights.data()[i] = r.f64();
    }
    for (size_t i = 0; i < layer.bias.size(); ++i) {
      layer.bias.data()[i] = r.f64();
    }
    ckpt.layers.push_back(std::move(layer));
  }
  return ckpt;
}

void save_checkpoint(const std::string &path, const Checkpoint &ckpt) {
  dataio::write_file_atomic(path, checkpoint_to_bytes(ckpt));
}

Checkpoint load_checkpoint(const std::string &path) {
  return checkpoint_from_bytes(dataio::read_file(path));
}

}  // namespace probqsar::nn
