#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "probqsar/nn/matrix.hpp"

namespace probqsar::feat {

// Token ids for embedding lookup. Id 0 is the reserved <unk> row (zero
// vector, never trained); corpus tokens start at 1 ordered by descending
// frequency, ties broken lexicographically.
class Vocabulary {
public:
  static constexpr int kUnkId = 0;

  Vocabulary();
  explicit Vocabulary(const std::vector<std::vector<std::string>> &corpus);

  int id_of(const std::string &token) const;  // kUnkId if unknown
  const std::string &token_of(int id) const { return id_to_token_[id]; }
  size_t size() const { return id_to_token_.size(); }
  int64_t count_of(int id) const { return counts_[id]; }

  std::vector<int> encode(const std::vector<std::string> &tokens) const;

  // For persistence: tokens in id order (index 0 is <unk>).
  const std::vector<std::string> &tokens() const { return id_to_token_; }
  const std::vector<int64_t> &counts() const { return counts_; }
  static Vocabulary from_tokens(std::vector<std::string> tokens,
                                std::vector<int64_t> counts);

private:
  std::vector<std::string> id_to_token_;
  std::vector<int64_t> counts_;
  std::unordered_map<std::string, int> token_to_id_;
};

struct SkipgramConfig {
  int dim = 300;
  int window = 5;
  int negatives = 5;
  int epochs = 15;
  double learning_rate = 0.025;  // linearly decayed to 1e-4 of itself
};

struct EmbeddingMatrix {
  Vocabulary vocab;
  nn::Matrix vectors;  // vocab.size() x dim

  const double *vector_of(const std::string &token) const {
    return vectors.row(vocab.id_of(token));
  }
};

// Skip-gram with negative sampling, trained with plain SGD over (center,
// context) pairs, negatives drawn from the unigram^0.75 distribution.
// Single-threaded and fully determined by the seed.
EmbeddingMatrix train_skipgram(
    const std::vector<std::vector<std::string>> &corpus,
    const SkipgramConfig &cfg, uint64_t seed);

// Mean of the token vectors; unknown tokens use the <unk> row.
std::vector<double> embed_tokens(const std::vector<std::string> &tokens,
                                 const EmbeddingMatrix &emb);

void save_embedding(const std::string &path, const EmbeddingMatrix &emb);
EmbeddingMatrix load_embedding(const std::string &path);

// Section payload used by both the standalone file and the model bundle.
std::string embedding_to_bytes(const EmbeddingMatrix &emb);
EmbeddingMatrix embedding_from_bytes(const std::string &bytes);

}  // namespace probqsar::feat
