#include "probqsar/nn/grad_check.hpp"

#include <algorithm>
#include <cmath>

#include "probqsar/errors.hpp"

namespace probqsar::nn {

GradCheckReport grad_check(const std::vector<Matrix *> &params,
                           const std::vector<const Matrix *> &analytic,
                           const std::function<double()> &loss_fn,
                           double h, double tol) {
  if (params.size() != analytic.size()) {
    throw DimensionMismatch("grad_check: parameter/gradient count mismatch");
  }
  GradCheckReport report;
  for (size_t p = 0; p < params.size(); ++p) {
    Matrix &tensor = *params[p];
    const Matrix &grad = *analytic[p];
    if (!tensor.same_shape(grad)) {
      throw DimensionMismatch("grad_check: tensor shape mismatch");
    }
    for (size_t k = 0; k < tensor.size(); ++k) {
      const double saved = tensor.data()[k];
      tensor.data()[k] = saved + h;
      const double up = loss_fn();
      tensor.data()[k] = saved - h;
      const double down = loss_fn();
      tensor.data()[k] = saved;
      const double numeric = (up - down) / (2.0 * h);
      const double a = grad.data()[k];
      const double rel = std::abs(a - numeric) /
                         std::max({1e-6, std::abs(a), std::abs(numeric)});
      if (rel > report.max_rel_error) {
        report.max_rel_error = rel;
        report.worst = "param " + std::to_string(p) + " entry " +
                       std::to_string(k);
      }
    }
  }
  report.pass = report.max_rel_error < tol;
  return report;
}

}  // namespace probqsar::nn
