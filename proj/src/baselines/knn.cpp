#include "probqsar/baselines/knn.hpp"

#include <algorithm>
#include <cmath>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"

namespace probqsar::baselines {

KnnModel knn_fit(const nn::Matrix &x, const std::vector<double> &y, size_t k) {
  if (k == 0 || k > x.rows()) {
    throw Error("knn: k must be in [1, training size]");
  }
  if (x.rows() != y.size()) {
    throw DimensionMismatch("knn feature/target row mismatch");
  }
  return KnnModel{x, y, k};
}

double knn_predict(const KnnModel &model, const std::vector<double> &x) {
  if (x.size() != model.train_x.cols()) {
    throw DimensionMismatch("knn predict width mismatch");
  }
  const size_t n = model.train_x.rows();
  std::vector<std::pair<double, size_t>> dist(n);
  for (size_t r = 0; r < n; ++r) {
    const double *row = model.train_x.row(r);
    double d2 = 0.0;
    for (size_t c = 0; c < x.size(); ++c) {
      const double d = row[c] - x[c];
      d2 += d * d;
    }
    dist[r] = {d2, r};
  }
  std::partial_sort(dist.begin(),
                    dist.begin() + static_cast<ptrdiff_t>(model.k),
                    dist.end());  // pair ordering breaks ties by index
  double sum = 0.0;
  for (size_t i = 0; i < model.k; ++i) {
    sum += model.train_y[dist[i].second];
  }
  return sum / static_cast<double>(model.k);
}

std::vector<double> knn_predict(const KnnModel &model, const nn::Matrix &x) {
  std::vector<double> out(x.rows());
  for (size_t r = 0; r < x.rows(); ++r) {
    std::vector<double> row(x.row(r), x.row(r) + x.cols());
    out[r] = knn_predict(model, row);
  }
  return out;
}

std::string KnnModel::to_bytes() const {
  dataio::ByteWriter w;
  w.bytes("PQKN", 4);
  w.u16(1);
  w.u64(k);
  w.u64(train_x.rows());
  w.u64(train_x.cols());
  for (size_t i = 0; i < train_x.size(); ++i) {
    w.f64(train_x.data()[i]);
  }
  for (double v : train_y) {
    w.f64(v);
  }
  return w.take();
}

KnnModel KnnModel::from_bytes(const std::string &bytes) {
  dataio::ByteReader r(bytes);
  if (r.raw(4) != std::string_view("PQKN", 4)) {
    throw CorruptFile("bad knn magic");
  }
  if (r.u16() != 1) {
    throw VersionMismatch("knn format version unsupported");
  }
  KnnModel model;
  model.k = r.u64();
  const size_t rows = r.u64();
  const size_t cols = r.u64();
  model.train_x = nn::Matrix(rows, cols);
  for (size_t i = 0; i < model.train_x.size(); ++i) {
    model.train_x.data()[i] = r.f64();
  }
  model.train_y.resize(rows);
  for (double &v : model.train_y) {
    v = r.f64();
  }
  return model;
}

}  // namespace probqsar::baselines
