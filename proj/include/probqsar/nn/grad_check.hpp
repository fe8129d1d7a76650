#pragma once

#include <functional>
#include <string>
#include <vector>

#include "probqsar/nn/matrix.hpp"

namespace probqsar::nn {

struct GradCheckReport {
  double max_rel_error = 0.0;
  bool pass = false;
  std::string worst;  // "param 2 entry 17" of the worst relative error
};

// Central finite differences over every entry of every parameter tensor.
// `loss_fn` must recompute the scalar loss from the current parameter
// values; `analytic` holds gradients aligned with `params`. Relative error
// is |a - n| / max(1e-6, |a|, |n|).
GradCheckReport grad_check(const std::vector<Matrix *> &params,
                           const std::vector<const Matrix *> &analytic,
                           const std::function<double()> &loss_fn,
                           double h, double tol);

}  // namespace probqsar::nn
