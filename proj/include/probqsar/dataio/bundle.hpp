#pragma once

#include <string>

#include "probqsar/dataio/config.hpp"
#include "probqsar/pipeline.hpp"

namespace probqsar::dataio {

// Single-file model container. Layout, little-endian:
//   "PQSR", u16 format version (=1), u32 section count,
//   section table: per section a length-prefixed name, u64 offset (relative
//   to the end of the table), u64 length, u64 FNV-1a checksum of the
//   payload bytes; then the payload region.
// Sections: config (RunConfig text), kind (model kind name), embedding,
// standardizer, model, and autoencoder when the pipeline trained one.
struct LoadedBundle {
  RunConfig config;
  PipelineModel model;
};

void save_model_bundle(const std::string &path, const RunConfig &config,
                       const PipelineModel &model);

LoadedBundle load_model_bundle(const std::string &path);

}  // namespace probqsar::dataio
