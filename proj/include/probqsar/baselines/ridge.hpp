#pragma once

#include <string>
#include <vector>

#include "probqsar/nn/matrix.hpp"

namespace probqsar::baselines {

// Ridge regression on centered data, solved directly by Cholesky
// factorization of (Xc^T Xc + lambda I). A non-positive pivot (lambda = 0
// with rank-deficient X) raises SingularSystem.
struct RidgeModel {
  std::vector<double> weights;
  double intercept = 0.0;
  double lambda = 0.0;

  std::string to_bytes() const;
  static RidgeModel from_bytes(const std::string &bytes);
};

RidgeModel ridge_fit(const nn::Matrix &x, const std::vector<double> &y,
                     double lambda);
double ridge_predict(const RidgeModel &model, const std::vector<double> &x);
std::vector<double> ridge_predict(const RidgeModel &model, const nn::Matrix &x);

// Solves A w = b for symmetric positive-definite A (in-place copy).
std::vector<double> cholesky_solve(const nn::Matrix &a,
                                   const std::vector<double> &b);

}  // namespace probqsar::baselines
