#pragma once

#include <string>
#include <vector>

#include "probqsar/nn/matrix.hpp"

namespace probqsar::baselines {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;  // leaf mean
};

// Greedy variance-reduction regression tree. Candidate thresholds are the
// midpoints of consecutive distinct sorted values per feature; the split
// minimizing left+right SSE wins, with exact ties going to the lowest
// feature index and then the lowest threshold (guaranteed by scanning
// features and thresholds in ascending order and accepting only strict
// improvements). Queries with x[feature] < threshold descend left.
struct TreeModel {
  std::vector<TreeNode> nodes;  // node 0 is the root
  int max_depth = 12;
  size_t min_leaf = 3;

  std::string to_bytes() const;
  static TreeModel from_bytes(const std::string &bytes);
};

TreeModel tree_fit(const nn::Matrix &x, const std::vector<double> &y,
                   int max_depth, size_t min_leaf);
double tree_predict(const TreeModel &model, const std::vector<double> &x);
std::vector<double> tree_predict(const TreeModel &model, const nn::Matrix &x);

}  // namespace probqsar::baselines
