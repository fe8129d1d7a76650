#include "probqsar/feat/skipgram.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"
#include "probqsar/nn/rng.hpp"

namespace probqsar::feat {

Vocabulary::Vocabulary() {
  id_to_token_ = {"<unk>"};
  counts_ = {0};
  token_to_id_["<unk>"] = 0;
}

Vocabulary::Vocabulary(const std::vector<std::vector<std::string>> &corpus)
    : Vocabulary() {
  std::map<std::string, int64_t> freq;
  for (const auto &seq : corpus) {
    for (const auto &tok : seq) {
      ++freq[tok];
    }
  }
  std::vector<std::pair<std::string, int64_t>> order(freq.begin(), freq.end());
  std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) {
      return a.second > b.second;
    }
    return a.first < b.first;
  });
  for (const auto &[tok, count] : order) {
    token_to_id_[tok] = static_cast<int>(id_to_token_.size());
    id_to_token_.push_back(tok);
    counts_.push_back(count);
  }
}

int Vocabulary::id_of(const std::string &token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? kUnkId : it->second;
}

std::vector<int> Vocabulary::encode(
    const std::vector<std::string> &tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto &t : tokens) {
    ids.push_back(id_of(t));
  }
  return ids;
}

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens,
                                   std::vector<int64_t> counts) {
  Vocabulary v;
  v.id_to_token_ = std::move(tokens);
  v.counts_ = std::move(counts);
  v.token_to_id_.clear();
  for (size_t i = 0; i < v.id_to_token_.size(); ++i) {
    v.token_to_id_[v.id_to_token_[i]] = static_cast<int>(i);
  }
  return v;
}

namespace {

double sigmoid(double x) {
  return 1.0 / (1.0 + std::exp(-x));
}

// unigram^0.75 sampler over real tokens (ids >= 1), via the cumulative
// distribution
class NegativeSampler {
public:
  explicit NegativeSampler(const Vocabulary &vocab) {
    cumulative_.reserve(vocab.size());
    double total = 0.0;
    for (size_t id = 1; id < vocab.size(); ++id) {
      total += std::pow(static_cast<double>(vocab.count_of(static_cast<int>(id))),
                        0.75);
      cumulative_.push_back(total);
    }
  }

  int draw(nn::Prng &rng) const {
    const double u = rng.uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<int>(it - cumulative_.begin()) + 1;
  }

private:
  std::vector<double> cumulative_;
};

}  // namespace

EmbeddingMatrix train_skipgram(
    const std::vector<std::vector<std::string>> &corpus,
    const SkipgramConfig &cfg, uint64_t seed) {
  int64_t total_tokens = 0;
  for (const auto &seq : corpus) {
    total_tokens += static_cast<int64_t>(seq.size());
  }
  if (corpus.empty() || total_tokens == 0) {
    throw EmptyCorpus("skip-gram corpus is empty");
  }

  Vocabulary vocab(corpus);
  const size_t vsize = vocab.size();
  const int dim = cfg.dim;

  nn::Prng rng(seed);
  nn::Matrix in(vsize, static_cast<size_t>(dim));
  nn::Matrix out(vsize, static_cast<size_t>(dim));
  for (size_t v = 1; v < vsize; ++v) {  // <unk> row stays zero
    for (int d = 0; d < dim; ++d) {
      in(v, static_cast<size_t>(d)) = rng.uniform(-0.5 / dim, 0.5 / dim);
    }
  }

  std::vector<std::vector<int>> encoded;
  encoded.reserve(corpus.size());
  for (const auto &seq : corpus) {
    encoded.push_back(vocab.encode(seq));
  }

  const NegativeSampler sampler(vocab);
  const double total_steps =
      static_cast<double>(total_tokens) * cfg.epochs;
  int64_t processed = 0;
  std::vector<double> accum(static_cast<size_t>(dim));

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto &seq : encoded) {
      const int len = static_cast<int>(seq.size());
      for (int t = 0; t < len; ++t, ++processed) {
        const double alpha =
            cfg.learning_rate *
            std::max(1e-4, 1.0 - static_cast<double>(processed) / total_steps);
        const int half = 1 + static_cast<int>(rng.uniform_int(
                                 static_cast<uint64_t>(cfg.window)));
        const int center = seq[static_cast<size_t>(t)];
        for (int c = t - half; c <= t + half; ++c) {
          if (c == t || c < 0 || c >= len) {
            continue;
          }
          const int context = seq[static_cast<size_t>(c)];
          double *vin = in.row(static_cast<size_t>(center));
          std::fill(accum.begin(), accum.end(), 0.0);
          for (int s = 0; s <= cfg.negatives; ++s) {
            int target;
            double label;
            if (s == 0) {
              target = context;
              label = 1.0;
            } else {
              target = sampler.draw(rng);
              if (target == context) {
                continue;
              }
              label = 0.0;
            }
            double *vout = out.row(static_cast<size_t>(target));
            double dot = 0.0;
            for (int d = 0; d < dim; ++d) {
              dot += vin[d] * vout[d];
            }
            const double g = (label - sigmoid(dot)) * alpha;
            for (int d = 0; d < dim; ++d) {
              accum[static_cast<size_t>(d)] += g * vout[d];
              vout[d] += g * vin[d];
            }
          }
          for (int d = 0; d < dim; ++d) {
            vin[d] += accum[static_cast<size_t>(d)];
          }
        }
      }
    }
  }

  return EmbeddingMatrix{std::move(vocab), std::move(in)};
}

std::vector<double> embed_tokens(const std::vector<std::string> &tokens,
                                 const EmbeddingMatrix &emb) {
  if (tokens.empty()) {
    throw EmptySequence("cannot embed an empty token sequence");
  }
  const size_t dim = emb.vectors.cols();
  std::vector<double> mean(dim, 0.0);
  for (const auto &tok : tokens) {
    const double *row = emb.vector_of(tok);
    for (size_t d = 0; d < dim; ++d) {
      mean[d] += row[d];
    }
  }
  const double inv = 1.0 / static_cast<double>(tokens.size());
  for (double &v : mean) {
    v *= inv;
  }
  return mean;
}

// Layout: "PQEM" u16 version=1, u32 dim, u32 vocab_size, vocab entries in
// id order as (u32 length, bytes, i64 count), then vocab_size*dim f64
// row-major.
std::string embedding_to_bytes(const EmbeddingMatrix &emb) {
  dataio::ByteWriter w;
  w.bytes("PQEM", 4);
  w.u16(1);
  w.u32(static_cast<uint32_t>(emb.vectors.cols()));
  w.u32(static_cast<uint32_t>(emb.vocab.size()));
  for (size_t id = 0; id < emb.vocab.size(); ++id) {
    w.str(emb.vocab.tokens()[id]);
    w.i64(emb.vocab.counts()[id]);
  }
  for (size_t i = 0; i < emb.vectors.size(); ++i) {
    w.f64(emb.vectors.data()[i]);
  }
  return w.take();
}

EmbeddingMatrix embedding_from_bytes(const std::string &bytes) {
  dataio::ByteReader r(bytes);
  if (r.raw(4) != std::string_view("PQEM", 4)) {
    throw CorruptFile("bad embedding magic");
  }
  const uint16_t version = r.u16();
  if (version != 1) {
    throw VersionMismatch("embedding format version " +
                          std::to_string(version) + " unsupported");
  }
  const uint32_t dim = r.u32();
  const uint32_t vsize = r.u32();
  std::vector<std::string> tokens;
  std::vector<int64_t> counts;
  tokens.reserve(vsize);
  counts.reserve(vsize);
  for (uint32_t i = 0; i < vsize; ++i) {
    tokens.push_back(r.str());
    counts.push_back(r.i64());
  }
  nn::Matrix vectors(vsize, dim);
  for (size_t i = 0; i < vectors.size(); ++i) {
    vectors.data()[i] = r.f64();
  }
  return EmbeddingMatrix{Vocabulary::from_tokens(std::move(tokens),
                                                 std::move(counts)),
                         std::move(vectors)};
}

void save_embedding(const std::string &path, const EmbeddingMatrix &emb) {
  dataio::write_file_atomic(path, embedding_to_bytes(emb));
}

EmbeddingMatrix load_embedding(const std::string &path) {
  return embedding_from_bytes(dataio::read_file(path));
}

}  // namespace probqsar::feat
