#include "probqsar/feat/features.hpp"

#include <cmath>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"

namespace probqsar::feat {

std::vector<double> concat_features(const BitFingerprint &fp,
                                    const std::vector<double> &embedding) {
  if (fp.length() != kFingerprintBits) {
    throw DimensionMismatch("fingerprint has " + std::to_string(fp.length()) +
                            " bits, expected " +
                            std::to_string(kFingerprintBits));
  }
  if (embedding.size() != kEmbeddingDim) {
    throw DimensionMismatch("embedding has " +
                            std::to_string(embedding.size()) +
                            " entries, expected " +
                            std::to_string(kEmbeddingDim));
  }
  std::vector<double> values(kFeatureDim);
  for (size_t i = 0; i < kFingerprintBits; ++i) {
    values[i] = fp.test(static_cast<uint32_t>(i)) ? 1.0 : 0.0;
  }
  for (size_t i = 0; i < kEmbeddingDim; ++i) {
    values[kFingerprintBits + i] = embedding[i];
  }
  return values;
}

FeatureStandardizer FeatureStandardizer::fit(const nn::Matrix &x,
                                             size_t col_begin,
                                             size_t col_end) {
  if (col_end > x.cols() || col_begin > col_end) {
    throw DimensionMismatch("standardizer column range out of bounds");
  }
  if (x.rows() == 0) {
    throw InsufficientData("standardizer needs at least one row");
  }
  FeatureStandardizer s;
  s.col_begin_ = col_begin;
  s.col_end_ = col_end;
  const size_t n = x.rows();
  const size_t width = col_end - col_begin;
  s.mean_.assign(width, 0.0);
  s.std_.assign(width, 0.0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < width; ++c) {
      s.mean_[c] += x(r, col_begin + c);
    }
  }
  for (double &m : s.mean_) {
    m /= static_cast<double>(n);
  }
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < width; ++c) {
      const double d = x(r, col_begin + c) - s.mean_[c];
      s.std_[c] += d * d;
    }
  }
  for (double &v : s.std_) {
    v = std::sqrt(v / static_cast<double>(n));
    if (v == 0.0) {
      v = 1.0;  // constant column: center only
    }
  }
  return s;
}

void FeatureStandardizer::apply(nn::Matrix &x) const {
  if (col_end_ > x.cols()) {
    throw DimensionMismatch("standardizer range exceeds matrix width");
  }
  for (size_t r = 0; r < x.rows(); ++r) {
    for (size_t c = 0; c < mean_.size(); ++c) {
      double &v = x(r, col_begin_ + c);
      v = (v - mean_[c]) / std_[c];
    }
  }
}

void FeatureStandardizer::apply(std::vector<double> &row) const {
  if (col_end_ > row.size()) {
    throw DimensionMismatch("standardizer range exceeds row width");
  }
  for (size_t c = 0; c < mean_.size(); ++c) {
    double &v = row[col_begin_ + c];
    v = (v - mean_[c]) / std_[c];
  }
}

std::string FeatureStandardizer::to_bytes() const {
  dataio::ByteWriter w;
  w.bytes("PQST", 4);
  w.u16(1);
  w.u64(col_begin_);
  w.u64(col_end_);
  for (double m : mean_) {
    w.f64(m);
  }
  for (double s : std_) {
    w.f64(s);
  }
  return w.take();
}

FeatureStandardizer FeatureStandardizer::from_bytes(const std::string &bytes) {
  dataio::ByteReader r(bytes);
  if (r.raw(4) != std::string_view("PQST", 4)) {
    throw CorruptFile("bad standardizer magic");
  }
  if (r.u16() != 1) {
    throw VersionMismatch("standardizer format version unsupported");
  }
  FeatureStandardizer s;
  s.col_begin_ = r.u64();
  s.col_end_ = r.u64();
  const size_t width = s.col_end_ - s.col_begin_;
  s.mean_.resize(width);
  s.std_.resize(width);
  for (double &m : s.mean_) {
    m = r.f64();
  }
  for (double &v : s.std_) {
    v = r.f64();
  }
  return s;
}

}  // namespace probqsar::feat
