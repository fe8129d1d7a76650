#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace probqsar::nn {

// Dense row-major matrix of doubles. Small by design: the handful of
// operations the training loops need, nothing else.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  double &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  double *data() { return data_.data(); }
  const double *data() const { return data_.data(); }

  std::vector<double> &raw() { return data_; }
  const std::vector<double> &raw() const { return data_; }

  const double *row(size_t r) const { return data_.data() + r * cols_; }
  double *row(size_t r) { return data_.data() + r * cols_; }

  bool same_shape(const Matrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  bool all_finite() const;

private:
  size_t rows_, cols_;
  std::vector<double> data_;
};

// C = A * B
Matrix matmul(const Matrix &a, const Matrix &b);
// C = A^T * B
Matrix matmul_tn(const Matrix &a, const Matrix &b);
// C = A * B^T
Matrix matmul_nt(const Matrix &a, const Matrix &b);

// Throws NonFiniteValue naming `what` if any entry is NaN/Inf.
void check_finite(const Matrix &m, const std::string &what);
void check_finite(double v, const std::string &what);

}  // namespace probqsar::nn
