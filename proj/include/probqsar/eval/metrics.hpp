#pragma once

#include <vector>

namespace probqsar::eval {

// sqrt(mean((pred - truth)^2))
double rmse(const std::vector<double> &pred, const std::vector<double> &truth);

// 1 - SS_res/SS_tot about the truth mean. Constant truth raises
// ConstantTruth rather than returning NaN.
double r2(const std::vector<double> &pred, const std::vector<double> &truth);

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double> &a, const std::vector<double> &b);

}  // namespace probqsar::eval
