#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "probqsar/chem/smiles.hpp"
#include "probqsar/errors.hpp"
#include "probqsar/feat/features.hpp"
#include "probqsar/feat/skipgram.hpp"
#include "probqsar/feat/tokenize.hpp"
#include "smiles_corpus.hpp"

using namespace probqsar;
using feat::EmbeddingMatrix;
using feat::SkipgramConfig;
using feat::tokenize_smiles;

TEST(Tokenize, Basics) {
  EXPECT_EQ(tokenize_smiles("CCO"),
            (std::vector<std::string>{"C", "C", "O"}));
  EXPECT_EQ(tokenize_smiles("CCl"), (std::vector<std::string>{"C", "Cl"}));
  EXPECT_EQ(tokenize_smiles("C[NH4+]C"),
            (std::vector<std::string>{"C", "[NH4+]", "C"}));
  EXPECT_EQ(tokenize_smiles("C%10CC%10"),
            (std::vector<std::string>{"C", "%10", "C", "C", "%10"}));
  EXPECT_EQ(tokenize_smiles("CBr"), (std::vector<std::string>{"C", "Br"}));
}

TEST(Tokenize, RejectsUnparseableInput) {
  EXPECT_THROW(tokenize_smiles("C("), chem::ParseError);
  EXPECT_THROW(tokenize_smiles(""), chem::ParseError);
}

TEST(Tokenize, RoundTripIdentityOverCorpus) {
  for (const auto &c : corpus::valid_smiles_cases()) {
    EXPECT_EQ(feat::detokenize(tokenize_smiles(c.smiles)), c.smiles);
  }
}

namespace {

std::vector<std::vector<std::string>> repeated_corpus() {
  std::vector<std::vector<std::string>> corpus;
  for (int i = 0; i < 1000; ++i) {
    corpus.push_back({"C", "C", "O"});
  }
  // sentinel co-occurring with nothing relevant: its own isolated sentences
  for (int i = 0; i < 50; ++i) {
    corpus.push_back({"[Zn]", "[Zn]"});
  }
  return corpus;
}

double cosine(const double *a, const double *b, size_t n) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < n; ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return dot / std::sqrt(na * nb);
}

}  // namespace

TEST(Skipgram, CooccurringTokensAreCloser) {
  SkipgramConfig cfg;
  cfg.dim = 32;
  cfg.epochs = 5;
  const EmbeddingMatrix emb = feat::train_skipgram(repeated_corpus(), cfg, 7);
  const size_t d = emb.vectors.cols();
  const double close = cosine(emb.vector_of("C"), emb.vector_of("O"), d);
  const double far = cosine(emb.vector_of("C"), emb.vector_of("[Zn]"), d);
  EXPECT_GT(close, far);
  EXPECT_GT(close, 0.0);
}

TEST(Skipgram, OutputDimensionIs300ByDefault) {
  const EmbeddingMatrix emb =
      train_skipgram({{"C", "C", "O"}, {"C", "N"}}, SkipgramConfig{}, 1);
  EXPECT_EQ(emb.vectors.cols(), 300u);
  for (size_t i = 0; i < emb.vectors.size(); ++i) {
    EXPECT_TRUE(std::isfinite(emb.vectors.data()[i]));
  }
}

TEST(Skipgram, EmptyCorpusErrors) {
  EXPECT_THROW(feat::train_skipgram({}, SkipgramConfig{}, 1), EmptyCorpus);
  EXPECT_THROW(feat::train_skipgram({{}, {}}, SkipgramConfig{}, 1), EmptyCorpus);
}

TEST(Skipgram, DeterministicGivenSeed) {
  SkipgramConfig cfg;
  cfg.dim = 16;
  cfg.epochs = 3;
  const std::vector<std::vector<std::string>> corpus = {
      {"C", "C", "O"}, {"C", "N", "C"}, {"c", "1", "c", "c", "c", "c", "c", "1"}};
  const EmbeddingMatrix a = feat::train_skipgram(corpus, cfg, 42);
  const EmbeddingMatrix b = feat::train_skipgram(corpus, cfg, 42);
  ASSERT_EQ(a.vectors.size(), b.vectors.size());
  for (size_t i = 0; i < a.vectors.size(); ++i) {
    EXPECT_EQ(a.vectors.data()[i], b.vectors.data()[i]);  // bitwise
  }
  const EmbeddingMatrix c = feat::train_skipgram(corpus, cfg, 43);
  bool any_diff = false;
  for (size_t i = 0; i < a.vectors.size() && !any_diff; ++i) {
    any_diff = a.vectors.data()[i] != c.vectors.data()[i];
  }
  EXPECT_TRUE(any_diff);
}

TEST(EmbedTokens, MeanPooling) {

  const std::vector<std::vector<std::string>> mini_corpus = {{"C", "O"}};
  feat::Vocabulary vocab(mini_corpus);
  nn::Matrix vectors(vocab.size(), 4);
  const int c_id = vocab.id_of("C");
  const int o_id = vocab.id_of("O");
  vectors(static_cast<size_t>(c_id), 0) = 1.0;
  vectors(static_cast<size_t>(o_id), 1) = 1.0;
  const EmbeddingMatrix emb{vocab, vectors};

  EXPECT_EQ(feat::embed_tokens({"C"}, emb),
            (std::vector<double>{1, 0, 0, 0}));
  EXPECT_EQ(feat::embed_tokens({"C", "C"}, emb),
            (std::vector<double>{1, 0, 0, 0}));
  EXPECT_EQ(feat::embed_tokens({"C", "O"}, emb),
            (std::vector<double>{0.5, 0.5, 0, 0}));
  // unknown tokens hit the zero <unk> row
  EXPECT_EQ(feat::embed_tokens({"C", "Q"}, emb),
            (std::vector<double>{0.5, 0, 0, 0}));
  EXPECT_THROW(feat::embed_tokens({}, emb), EmptySequence);
}

TEST(EmbeddingIo, RoundTripIsBitwise) {
  SkipgramConfig cfg;
  cfg.dim = 8;
  cfg.epochs = 2;
  const EmbeddingMatrix emb =
      train_skipgram({{"C", "C", "O"}, {"N", "C"}}, cfg, 5);
  const std::string path = ::testing::TempDir() + "emb.bin";
  feat::save_embedding(path, emb);
  const EmbeddingMatrix back = feat::load_embedding(path);
  ASSERT_EQ(back.vocab.size(), emb.vocab.size());
  for (size_t i = 0; i < emb.vocab.size(); ++i) {
    EXPECT_EQ(back.vocab.tokens()[i], emb.vocab.tokens()[i]);
  }
  ASSERT_EQ(back.vectors.size(), emb.vectors.size());
  for (size_t i = 0; i < emb.vectors.size(); ++i) {
    EXPECT_EQ(back.vectors.data()[i], emb.vectors.data()[i]);
  }
  std::filesystem::remove(path);
}

TEST(ConcatFeatures, LayoutAndErrors) {
  feat::BitFingerprint fp(512);
  for (uint32_t i = 0; i < 512; ++i) {
    fp.set(i);
  }
  const std::vector<double> emb(300, 0.0);
  const std::vector<double> out = feat::concat_features(fp, emb);
  ASSERT_EQ(out.size(), 812u);
  for (size_t i = 0; i < 512; ++i) {
    EXPECT_EQ(out[i], 1.0);
  }
  for (size_t i = 512; i < 812; ++i) {
    EXPECT_EQ(out[i], 0.0);
  }

  feat::BitFingerprint small(64);
  EXPECT_THROW(feat::concat_features(small, emb), DimensionMismatch);
  EXPECT_THROW(feat::concat_features(fp, std::vector<double>(299)),
               DimensionMismatch);
}

TEST(FeatureStandardizer, ZScoresSelectedColumnsOnly) {
  nn::Matrix x(4, 4);
  for (size_t r = 0; r < 4; ++r) {
    x(r, 0) = static_cast<double>(r);          // untouched
    x(r, 1) = static_cast<double>(r);          // untouched
    x(r, 2) = 10.0 + 2.0 * static_cast<double>(r);
    x(r, 3) = 5.0;                             // constant: centered only
  }
  const auto s = feat::FeatureStandardizer::fit(x, 2, 4);
  nn::Matrix z = x;
  s.apply(z);
  for (size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(z(r, 0), x(r, 0));
    EXPECT_EQ(z(r, 1), x(r, 1));
    EXPECT_EQ(z(r, 3), 0.0);
  }
  double mean = 0.0, var = 0.0;
  for (size_t r = 0; r < 4; ++r) {
    mean += z(r, 2);
  }
  mean /= 4.0;
  for (size_t r = 0; r < 4; ++r) {
    var += (z(r, 2) - mean) * (z(r, 2) - mean);
  }
  EXPECT_NEAR(mean, 0.0, 1e-12);
  EXPECT_NEAR(var / 4.0, 1.0, 1e-12);

  const auto back = feat::FeatureStandardizer::from_bytes(s.to_bytes());
  EXPECT_EQ(back.mean(), s.mean());
  EXPECT_EQ(back.stddev(), s.stddev());
}
