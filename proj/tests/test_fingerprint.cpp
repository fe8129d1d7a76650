#include "probqsar/feat/fingerprint.hpp"

#include <gtest/gtest.h>

#include "fingerprint_oracle.hpp"
#include "probqsar/chem/smiles.hpp"
#include "probqsar/errors.hpp"
#include "probqsar/feat/fnv.hpp"

using namespace probqsar;
using chem::parse_smiles;
using feat::BitFingerprint;
using feat::FingerprintConfig;
using feat::morgan_fingerprint;

TEST(FingerprintConfig, Validation) {
  EXPECT_NO_THROW(FingerprintConfig{}.validate());
  EXPECT_THROW((FingerprintConfig{100, 3}.validate()), Error);
  EXPECT_THROW((FingerprintConfig{32, 3}.validate()), Error);
  EXPECT_THROW((FingerprintConfig{512, 7}.validate()), Error);
  EXPECT_THROW((FingerprintConfig{512, -1}.validate()), Error);
}

// The methane invariant is the documented FNV-1a of the little-endian i64
// tuple (element, heavy degree, H count, charge, in-ring, aromatic).
TEST(AtomInvariant, MethaneMatchesDocumentedHash) {
  const auto m = parse_smiles("C");
  const uint64_t expected = feat::Fnv1a()
                                .update_i64(6)
                                .update_i64(0)
                                .update_i64(4)
                                .update_i64(0)
                                .update_i64(0)
                                .update_i64(0)
                                .digest();
  EXPECT_EQ(feat::atom_initial_invariant(m, 0), expected);
}

TEST(AtomInvariant, SymmetricCarbonsShareIdentifier) {
  const auto m = parse_smiles("CC");
  EXPECT_EQ(feat::atom_initial_invariant(m, 0),
            feat::atom_initial_invariant(m, 1));
}

TEST(AtomInvariant, TerminalAndMiddleCarbonDiffer) {
  const auto m = parse_smiles("CCO");
  EXPECT_NE(feat::atom_initial_invariant(m, 0),
            feat::atom_initial_invariant(m, 1));
}

TEST(Morgan, SingleAtomSetsExactlyOneBit) {
  const auto fp = morgan_fingerprint(parse_smiles("C"), {512, 3});
  EXPECT_EQ(fp.popcount(), 1u);
}

TEST(Morgan, EthaneRadiusZeroOneBit) {
  const auto fp = morgan_fingerprint(parse_smiles("CC"), {512, 0});
  EXPECT_EQ(fp.popcount(), 1u);
}

TEST(Morgan, EmptyConfigErrors) {
  EXPECT_THROW(morgan_fingerprint(chem::Molecule({}, {}, ""), {512, 3}),
               EmptyMolecule);
}

TEST(Morgan, EthanolMatchesBruteForceOracle) {
  const auto m = parse_smiles("CCO");
  const FingerprintConfig cfg{512, 3};
  EXPECT_TRUE(morgan_fingerprint(m, cfg) ==
              corpus::oracle_fingerprint(m, cfg));
}

TEST(Morgan, PermutationInvariance) {
  const FingerprintConfig cfg{512, 3};
  EXPECT_TRUE(morgan_fingerprint(parse_smiles("CCO"), cfg) ==
              morgan_fingerprint(parse_smiles("OCC"), cfg));
  EXPECT_TRUE(morgan_fingerprint(parse_smiles("CC(C)(N)O"), cfg) ==
              morgan_fingerprint(parse_smiles("OC(C)(C)N"), cfg));
  EXPECT_TRUE(morgan_fingerprint(parse_smiles("c1ccncc1"), cfg) ==
              morgan_fingerprint(parse_smiles("n1ccccc1"), cfg));
}

TEST(Morgan, RadiusMonotonicity) {
  for (const char *smiles : corpus::small_molecule_corpus()) {
    const auto m = parse_smiles(smiles);
    BitFingerprint prev = morgan_fingerprint(m, {512, 0});
    for (int r = 1; r <= 3; ++r) {
      const BitFingerprint cur = morgan_fingerprint(m, {512, r});
      for (uint32_t bit : prev.on_bits()) {
        EXPECT_TRUE(cur.test(bit)) << smiles << " radius " << r;
      }
      prev = cur;
    }
  }
}

TEST(Morgan, OracleEquivalenceOverCorpus) {
  const auto &corpus = corpus::small_molecule_corpus();
  EXPECT_GE(corpus.size(), 100u);
  for (const char *smiles : corpus) {
    const auto m = parse_smiles(smiles);
    ASSERT_LE(m.atom_count(), 8u) << smiles;
    for (const FingerprintConfig cfg :
         {FingerprintConfig{512, 3}, FingerprintConfig{64, 2}}) {
      EXPECT_TRUE(morgan_fingerprint(m, cfg) ==
                  corpus::oracle_fingerprint(m, cfg))
          << smiles << " L=" << cfg.length_L << " r=" << cfg.radius_r;
    }
  }
}

TEST(Morgan, PopcountPositive) {
  for (const char *smiles : corpus::small_molecule_corpus()) {
    EXPECT_GE(morgan_fingerprint(parse_smiles(smiles), {512, 3}).popcount(),
              1u);
  }
}
