#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "probqsar/pipeline.hpp"

namespace probqsar::dataio {

// Flat `key = value` configuration with a fixed key registry. Unknown keys
// are rejected; values keep their textual form so serialize/parse round-
// trips are lossless. '#' starts a comment.
class RunConfig {
public:
  static RunConfig defaults();
  static RunConfig parse(const std::string &text);
  static RunConfig load(const std::string &path);

  void set(const std::string &key, const std::string &value);

  int64_t get_int(const std::string &key) const;
  double get_real(const std::string &key) const;
  std::string get_str(const std::string &key) const;

  std::string serialize() const;
  uint64_t fingerprint() const;

  PipelineConfig to_pipeline() const;
  std::vector<uint64_t> seeds() const;  // bench.seeds

private:
  std::map<std::string, std::string> values_;
};

std::vector<size_t> parse_size_list(const std::string &text);

}  // namespace probqsar::dataio
