#include "probqsar/nn/training.hpp"

#include <numeric>

#include "probqsar/errors.hpp"

namespace probqsar::nn {

std::vector<std::vector<size_t>> make_batches(size_t n, size_t batch_size,
                                              Prng &rng) {
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  rng.shuffle(order);
  std::vector<std::vector<size_t>> batches;
  for (size_t start = 0; start < n; start += batch_size) {
    const size_t end = std::min(n, start + batch_size);
    batches.emplace_back(order.begin() + static_cast<ptrdiff_t>(start),
                         order.begin() + static_cast<ptrdiff_t>(end));
  }
  return batches;
}

Matrix gather_rows(const Matrix &x, const std::vector<size_t> &rows) {
  Matrix out(rows.size(), x.cols());
  for (size_t i = 0; i < rows.size(); ++i) {
    const double *src = x.row(rows[i]);
    double *dst = out.row(i);
    for (size_t c = 0; c < x.cols(); ++c) {
      dst[c] = src[c];
    }
  }
  return out;
}

void diagnose_nonfinite(
    const std::string &context,
    const std::vector<std::pair<std::string, const Matrix *>> &tensors) {
  for (const auto &[name, tensor] : tensors) {
    if (!tensor->all_finite()) {
      throw NonFiniteValue(context + ": first non-finite tensor is " + name);
    }
  }
  throw NonFiniteValue(context + ": non-finite loss");
}

}  // namespace probqsar::nn
