#pragma once

#include <string>
#include <vector>

#include "probqsar/nn/matrix.hpp"
#include "probqsar/nn/rng.hpp"

namespace probqsar::nn {

// Shuffled batch index lists for one epoch; the last partial batch is kept.
std::vector<std::vector<size_t>> make_batches(size_t n, size_t batch_size,
                                              Prng &rng);

Matrix gather_rows(const Matrix &x, const std::vector<size_t> &rows);

// Names the first non-finite tensor among (name, tensor) pairs and throws
// NonFiniteValue with `context` prepended; throws with just the context if
// none of the listed tensors is the culprit (e.g. a non-finite scalar loss).
[[noreturn]] void diagnose_nonfinite(
    const std::string &context,
    const std::vector<std::pair<std::string, const Matrix *>> &tensors);

}  // namespace probqsar::nn
