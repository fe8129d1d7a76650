#include "probqsar/baselines/ridge.hpp"

#include <cmath>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"

namespace probqsar::baselines {

std::vector<double> cholesky_solve(const nn::Matrix &a,
                                   const std::vector<double> &b) {
  const size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw DimensionMismatch("cholesky_solve shape mismatch");
  }
  nn::Matrix l(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      double sum = a(i, j);
      for (size_t k = 0; k < j; ++k) {
        sum -= l(i, k) * l(j, k);
      }
      if (i == j) {
        if (sum <= 0.0 || !std::isfinite(sum)) {
          throw SingularSystem("system is not positive definite at pivot " +
                               std::to_string(i));
        }
        l(i, i) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  // forward substitution L z = b
  std::vector<double> z(n);
  for (size_t i = 0; i < n; ++i) {
    double sum = b[i];
    for (size_t k = 0; k < i; ++k) {
      sum -= l(i, k) * z[k];
    }
    z[i] = sum / l(i, i);
  }
  // back substitution L^T w = z
  std::vector<double> w(n);
  for (size_t i = n; i-- > 0;) {
    double sum = z[i];
    for (size_t k = i + 1; k < n; ++k) {
      sum -= l(k, i) * w[k];
    }
    w[i] = sum / l(i, i);
  }
  return w;
}

RidgeModel ridge_fit(const nn::Matrix &x, const std::vector<double> &y,
                     double lambda) {
  const size_t n = x.rows();
  const size_t d = x.cols();
  if (n < 2) {
    throw InsufficientData("ridge needs at least 2 samples");
  }
  if (y.size() != n) {
    throw DimensionMismatch("ridge feature/target row mismatch");
  }
  if (lambda < 0.0) {
    throw Error("ridge lambda must be >= 0");
  }

  std::vector<double> col_mean(d, 0.0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < d; ++c) {
      col_mean[c] += x(r, c);
    }
  }
  for (double &m : col_mean) {
    m /= static_cast<double>(n);
  }
  double y_mean = 0.0;
  for (double v : y) {
    y_mean += v;
  }
  y_mean /= static_cast<double>(n);

  nn::Matrix gram(d, d);
  std::vector<double> rhs(d, 0.0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t i = 0; i < d; ++i) {
      const double xi = x(r, i) - col_mean[i];
      rhs[i] += xi * (y[r] - y_mean);
      for (size_t j = 0; j <= i; ++j) {
        gram(i, j) += xi * (x(r, j) - col_mean[j]);
      }
    }
  }
  for (size_t i = 0; i < d; ++i) {
    gram(i, i) += lambda;
    for (size_t j = 0; j < i; ++j) {
      gram(j, i) = gram(i, j);
    }
  }

  RidgeModel model;
  model.lambda = lambda;
  model.weights = cholesky_solve(gram, rhs);
  model.intercept = y_mean;
  for (size_t c = 0; c < d; ++c) {
    model.intercept -= model.weights[c] * col_mean[c];
  }
  return model;
}

double ridge_predict(const RidgeModel &model, const std::vector<double> &x) {
  if (x.size() != model.weights.size()) {
    throw DimensionMismatch("ridge predict width mismatch");
  }
  double out = model.intercept;
  for (size_t c = 0; c < x.size(); ++c) {
    out += model.weights[c] * x[c];
  }
  return out;
}

std::vector<double> ridge_predict(const RidgeModel &model,
                                  const nn::Matrix &x) {
  std::vector<double> out(x.rows());
  for (size_t r = 0; r < x.rows(); ++r) {
    std::vector<double> row(x.row(r), x.row(r) + x.cols());
    out[r] = ridge_predict(model, row);
  }
  return out;
}

std::string RidgeModel::to_bytes() const {
  dataio::ByteWriter w;
  w.bytes("PQRG", 4);
  w.u16(1);
  w.f64(intercept);
  w.f64(lambda);
  w.u64(weights.size());
  for (double v : weights) {
    w.f64(v);
  }
  return w.take();
}

RidgeModel RidgeModel::from_bytes(const std::string &bytes) {
  dataio::ByteReader r(bytes);
  if (r.raw(4) != std::string_view("PQRG", 4)) {
    throw CorruptFile("bad ridge magic");
  }
  if (r.u16() != 1) {
    throw VersionMismatch("ridge format version unsupported");
  }
  RidgeModel model;
  model.intercept = r.f64();
  model.lambda = r.f64();
  const uint64_t n = r.u64();
  model.weights.resize(n);
  for (double &v : model.weights) {
    v = r.f64();
  }
  return model;
}

}  // namespace probqsar::baselines
