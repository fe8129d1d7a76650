#pragma once

#include <string>
#include <vector>

#include "probqsar/nn/layer.hpp"

namespace probqsar::nn {

// Shared binary checkpoint for every layer-stack model in the repo.
// Layout, all little-endian:
//   "PQNN", u16 version (=1), u16 kind,
//   u32 n_int_extras, that many i64,
//   u32 n_real_extras, that many f64,
//   u32 n_layers, then per layer:
//     u32 in_dim, u32 out_dim, u8 activation tag,
//     out*in f64 weights (row-major), out f64 bias.
// Kind identifies the owner; extras carry owner-specific fields (the GAN
// records noise_dim, divergence, noise mode and the activity standardizer).
enum CheckpointKind : uint16_t {
  kCheckpointMlp = 0,
  kCheckpointAutoencoder = 1,
  kCheckpointGenerator = 2,
  kCheckpointDiscriminator = 3,
};

struct Checkpoint {
  uint16_t kind = kCheckpointMlp;
  std::vector<int64_t> extras_i;
  std::vector<double> extras_f;
  std::vector<DenseLayer> layers;
};

std::string checkpoint_to_bytes(const Checkpoint &ckpt);
Checkpoint checkpoint_from_bytes(const std::string &bytes);

void save_checkpoint(const std::string &path, const Checkpoint &ckpt);
Checkpoint load_checkpoint(const std::string &path);

}  // namespace probqsar::nn
