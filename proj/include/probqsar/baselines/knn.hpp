#pragma once

#include <string>
#include <vector>

#include "probqsar/nn/matrix.hpp"

namespace probqsar::baselines {

// k-nearest-neighbors regression over stored training data, euclidean
// metric, ties broken by lower training index; prediction is the mean
// target of the k neighbors.
struct KnnModel {
  nn::Matrix train_x;
  std::vector<double> train_y;
  size_t k = 5;

  std::string to_bytes() const;
  static KnnModel from_bytes(const std::string &bytes);
};

KnnModel knn_fit(const nn::Matrix &x, const std::vector<double> &y, size_t k);
double knn_predict(const KnnModel &model, const std::vector<double> &x);
std::vector<double> knn_predict(const KnnModel &model, const nn::Matrix &x);

}  // namespace probqsar::baselines
