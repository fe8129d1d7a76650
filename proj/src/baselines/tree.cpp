#include "probqsar/baselines/tree.hpp"

#include <algorithm>
#include <cmath>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"

namespace probqsar::baselines {

namespace {

struct Builder {
  const nn::Matrix &x;
  const std::vector<double> &y;
  int max_depth;
  size_t min_leaf;
  std::vector<TreeNode> nodes;

  int build(std::vector<size_t> indices, int depth) {
    const size_t n = indices.size();
    double sum = 0.0, sum2 = 0.0;
    for (size_t i : indices) {
      sum += y[i];
      sum2 += y[i] * y[i];
    }
    const double mean = sum / static_cast<double>(n);
    const double node_sse = sum2 - sum * sum / static_cast<double>(n);

    const int node_id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[node_id].value = mean;

    if (depth >= max_depth || n < 2 * min_leaf || node_sse <= 0.0) {
      return node_id;
    }

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_sse = node_sse;
    std::vector<std::pair<double, double>> vals(n);  // (feature value, y)
    for (size_t f = 0; f < x.cols(); ++f) {
      for (size_t i = 0; i < n; ++i) {
        vals[i] = {x(indices[i], f), y[indices[i]]};
      }
      std::sort(vals.begin(), vals.end());
      double left_sum = 0.0, left_sum2 = 0.0;
      for (size_t i = 1; i < n; ++i) {
        left_sum += vals[i - 1].second;
        left_sum2 += vals[i - 1].second * vals[i - 1].second;
        if (vals[i - 1].first == vals[i].first) {
          continue;  // not a boundary between distinct values
        }
        if (i < min_leaf || n - i < min_leaf) {
          continue;
        }
        const double ln = static_cast<double>(i);
        const double rn = static_cast<double>(n - i);
        const double right_sum = sum - left_sum;
        const double right_sum2 = sum2 - left_sum2;
        const double sse = (left_sum2 - left_sum * left_sum / ln) +
                           (right_sum2 - right_sum * right_sum / rn);
        if (sse < best_sse) {
          best_sse = sse;
          best_feature = static_cast<int>(f);
          best_threshold = (vals[i - 1].first + vals[i].first) / 2.0;
        }
      }
    }

    if (best_feature < 0) {
      return node_id;
    }

    std::vector<size_t> left, right;
    for (size_t i : indices) {
      (x(i, static_cast<size_t>(best_feature)) < best_threshold ? left
                                                                : right)
          .push_back(i);
    }
    indices.clear();
    indices.shrink_to_fit();

    nodes[node_id].feature = best_feature;
    nodes[node_id].threshold = best_threshold;
    const int left_id = build(std::move(left), depth + 1);
    nodes[node_id].left = left_id;
    const int right_id = build(std::move(right), depth + 1);
    nodes[node_id].right = right_id;
    return node_id;
  }
};

}  // namespace

TreeModel tree_fit(const nn::Matrix &x, const std::vector<double> &y,
                   int max_depth, size_t min_leaf) {
  if (min_leaf == 0) {
    throw Error("tree: min_leaf must be >= 1");
  }
  if (x.rows() < 2 * min_leaf) {
    throw InsufficientData("tree needs at least 2*min_leaf samples");
  }
  if (x.rows() != y.size()) {
    throw DimensionMismatch("tree feature/target row mismatch");
  }
  Builder builder{x, y, max_depth, min_leaf, {}};
  std::vector<size_t> all(x.rows());
  for (size_t i = 0; i < all.size(); ++i) {
    all[i] = i;
  }
  builder.build(std::move(all), 0);
  TreeModel model;
  model.nodes = std::move(builder.nodes);
  model.max_depth = max_depth;
  model.min_leaf = min_leaf;
  return model;
}

double tree_predict(const TreeModel &model, const std::vector<double> &x) {
  int node = 0;
  while (model.nodes[static_cast<size_t>(node)].feature >= 0) {
    const TreeNode &n = model.nodes[static_cast<size_t>(node)];
    node = x[static_cast<size_t>(n.feature)] < n.threshold ? n.left : n.right;
  }
  return model.nodes[static_cast<size_t>(node)].value;
}

std::vector<double> tree_predict(const TreeModel &model, const nn::Matrix &x) {
  std::vector<double> out(x.rows());
  for (size_t r = 0; r < x.rows(); ++r) {
    std::vector<double> row(x.row(r), x.row(r) + x.cols());
    out[r] = tree_predict(model, row);
  }
  return out;
}

std::string TreeModel::to_bytes() const {
  dataio::ByteWriter w;
  w.bytes("PQDT", 4);
  w.u16(1);
  w.i64(max_depth);
  w.u64(min_leaf);
  w.u64(nodes.size());
  for (const TreeNode &n : nodes) {
    w.i64(n.feature);
    w.f64(n.threshold);
    w.i64(n.left);
    w.i64(n.right);
    w.f64(n.value);
  }
  return w.take();
}

TreeModel TreeModel::from_bytes(const std::string &bytes) {
  dataio::ByteReader r(bytes);
  if (r.raw(4) != std::string_view("PQDT", 4)) {
    throw CorruptFile("bad tree magic");
  }
  if (r.u16() != 1) {
    throw VersionMismatch("tree format version unsupported");
  }
  TreeModel model;
  model.max_depth = static_cast<int>(r.i64());
  model.min_leaf = r.u64();
  const uint64_t count = r.u64();
  model.nodes.resize(count);
  for (TreeNode &n : model.nodes) {
    n.feature = static_cast<int>(r.i64());
    n.threshold = r.f64();
    n.left = static_cast<int>(r.i64());
    n.right = static_cast<int>(r.i64());
    n.value = r.f64();
  }
  return model;
}

}  // namespace probqsar::baselines
