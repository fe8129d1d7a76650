#include "probqsar/nn/matrix.hpp"

#include <cmath>

#include <Eigen/Core>

#include "probqsar/errors.hpp"

namespace probqsar::nn {

namespace {

using EigenMap = Eigen::Map<
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using EigenMutMap = Eigen::Map<
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

EigenMap map(const Matrix &m) {
  return EigenMap(m.data(), static_cast<Eigen::Index>(m.rows()),
                  static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

bool Matrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) {
      return false;
    }
  }
  return true;
}

Matrix matmul(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  }
  Matrix c(a.rows(), b.cols());
  EigenMutMap(c.data(), static_cast<Eigen::Index>(c.rows()),
              static_cast<Eigen::Index>(c.cols())) = map(a) * map(b);
  return c;
}

Matrix matmul_tn(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("matmul_tn: " + std::to_string(a.rows()) + " vs " +
                            std::to_string(b.rows()));
  }
  Matrix c(a.cols(), b.cols());
  EigenMutMap(c.data(), static_cast<Eigen::Index>(c.rows()),
              static_cast<Eigen::Index>(c.cols())) = map(a).transpose() * map(b);
  return c;
}

Matrix matmul_nt(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("matmul_nt: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.rows());
  EigenMutMap(c.data(), static_cast<Eigen::Index>(c.rows()),
              static_cast<Eigen::Index>(c.cols())) = map(a) * map(b).transpose();
  return c;
}

void check_finite(const Matrix &m, const std::string &what) {
  if (!m.all_finite()) {
    throw NonFiniteValue("non-finite value in " + what);
  }
}

void check_finite(double v, const std::string &what) {
  if (!std::isfinite(v)) {
    throw NonFiniteValue("non-finite value in " + what);
  }
}

}  // namespace probqsar::nn
