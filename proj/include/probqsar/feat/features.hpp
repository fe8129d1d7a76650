#pragma once

#include <vector>

#include "probqsar/feat/fingerprint.hpp"
#include "probqsar/feat/skipgram.hpp"
#include "probqsar/nn/matrix.hpp"

namespace probqsar::feat {

inline constexpr size_t kFingerprintBits = 512;
inline constexpr size_t kEmbeddingDim = 300;
inline constexpr size_t kFeatureDim = kFingerprintBits + kEmbeddingDim;  // 812

// 812 values: fingerprint bits as 0/1 first, embedding after.
std::vector<double> concat_features(const BitFingerprint &fp,
                                    const std::vector<double> &embedding);

// Per-column z-scoring of one column range, statistics from the rows it was
// fitted on (the training split). Columns with zero variance are only
// centered. Used on the embedding half of the 812-d features; fingerprint
// bits stay 0/1.
class FeatureStandardizer {
public:
  FeatureStandardizer() = default;

  static FeatureStandardizer fit(const nn::Matrix &x, size_t col_begin,
                                 size_t col_end);

  void apply(nn::Matrix &x) const;
  void apply(std::vector<double> &row) const;

  size_t col_begin() const { return col_begin_; }
  size_t col_end() const { return col_end_; }
  const std::vector<double> &mean() const { return mean_; }
  const std::vector<double> &stddev() const { return std_; }

  std::string to_bytes() const;
  static FeatureStandardizer from_bytes(const std::string &bytes);

private:
  size_t col_begin_ = 0;
  size_t col_end_ = 0;
  std::vector<double> mean_;
  std::vector<double> std_;
};

}  // namespace probqsar::feat
