#include "probqsar/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "probqsar/errors.hpp"

namespace probqsar::eval {

double rmse(const std::vector<double> &pred,
            const std::vector<double> &truth) {
  if (pred.size() != truth.size()) {
    throw LengthMismatch("rmse: lengths differ");
  }
  if (pred.empty()) {
    throw EmptyBatch("rmse: empty input");
  }
  double sum = 0.0;
  for (size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - truth[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(pred.size()));
}

double r2(const std::vector<double> &pred, const std::vector<double> &truth) {
  if (pred.size() != truth.size()) {
    throw LengthMismatch("r2: lengths differ");
  }
  if (pred.size() < 2) {
    throw LengthMismatch("r2: needs at least 2 points");
  }
  double mean = 0.0;
  for (double t : truth) {
    mean += t;
  }
  mean /= static_cast<double>(truth.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (size_t i = 0; i < pred.size(); ++i) {
    ss_res += (truth[i] - pred[i]) * (truth[i] - pred[i]);
    ss_tot += (truth[i] - mean) * (truth[i] - mean);
  }
  if (ss_tot == 0.0) {
    throw ConstantTruth("r2 undefined for constant truth");
  }
  return 1.0 - ss_res / ss_tot;
}

namespace {

std::vector<double> average_ranks(const std::vector<double> &v) {
  const size_t n = v.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) {
      ++j;
    }
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0;
    for (size_t k = i; k <= j; ++k) {
      ranks[order[k]] = avg;
    }
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const std::vector<double> &a, const std::vector<double> &b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("spearman: lengths differ");
  }
  if (a.size() < 2) {
    throw LengthMismatch("spearman: needs at least 2 points");
  }
  const std::vector<double> ra = average_ranks(a);
  const std::vector<double> rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= n;
  mb /= n;
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (va == 0.0 || vb == 0.0) {
    return 0.0;  // a constant ranking carries no order information
  }
  return cov / std::sqrt(va * vb);
}

}  // namespace probqsar::eval
