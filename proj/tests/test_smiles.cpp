#include "probqsar/chem/smiles.hpp"

#include <gtest/gtest.h>

#include <set>

#include "smiles_corpus.hpp"

using namespace probqsar;
using chem::BondOrder;
using chem::Molecule;
using chem::ParseError;
using chem::ParseErrorKind;
using chem::parse_smiles;

TEST(SmilesParser, Ethanol) {
  Molecule m = parse_smiles("CCO");
  ASSERT_EQ(m.atom_count(), 3u);
  EXPECT_EQ(m.atoms()[0].element, 6);
  EXPECT_EQ(m.atoms()[1].element, 6);
  EXPECT_EQ(m.atoms()[2].element, 8);
  ASSERT_EQ(m.bond_count(), 2u);
  EXPECT_EQ(m.bonds()[0].a, 0);
  EXPECT_EQ(m.bonds()[0].b, 1);
  EXPECT_EQ(m.bonds()[1].a, 1);
  EXPECT_EQ(m.bonds()[1].b, 2);
  EXPECT_EQ(m.bonds()[0].order, BondOrder::Single);
  EXPECT_EQ(m.bonds()[1].order, BondOrder::Single);
}

TEST(SmilesParser, CyclopropaneTriangle) {
  Molecule m = parse_smiles("C1CC1");
  ASSERT_EQ(m.atom_count(), 3u);
  ASSERT_EQ(m.bond_count(), 3u);
  std::set<std::pair<int, int>> pairs;
  for (const auto &b : m.bonds()) {
    EXPECT_EQ(b.order, BondOrder::Single);
    pairs.insert(std::minmax(b.a, b.b));
  }
  const std::set<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(pairs, want);
}

TEST(SmilesParser, Benzene) {
  Molecule m = parse_smiles("c1ccccc1");
  ASSERT_EQ(m.atom_count(), 6u);
  ASSERT_EQ(m.bond_count(), 6u);
  for (const auto &a : m.atoms()) {
    EXPECT_EQ(a.element, 6);
    EXPECT_TRUE(a.aromatic);
  }
  for (const auto &b : m.bonds()) {
    EXPECT_EQ(b.order, BondOrder::Aromatic);
  }
}

TEST(SmilesParser, AmmoniumBracketAtom) {
  Molecule m = parse_smiles("[NH4+]");
  ASSERT_EQ(m.atom_count(), 1u);
  EXPECT_EQ(m.bond_count(), 0u);
  EXPECT_EQ(m.atoms()[0].element, 7);
  EXPECT_EQ(m.atoms()[0].formal_charge, 1);
  ASSERT_TRUE(m.atoms()[0].explicit_h.has_value());
  EXPECT_EQ(*m.atoms()[0].explicit_h, 4);
}

TEST(SmilesParser, UnmatchedParenOffset) {
  try {
    parse_smiles("C(");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::UnmatchedParenthesis);
    EXPECT_EQ(e.offset(), 1u);
  }
}

TEST(SmilesParser, IsotopeAndCharge) {
  Molecule m = parse_smiles("[13CH3-]");
  ASSERT_EQ(m.atom_count(), 1u);
  EXPECT_EQ(m.atoms()[0].element, 6);
  EXPECT_EQ(*m.atoms()[0].isotope, 13);
  EXPECT_EQ(*m.atoms()[0].explicit_h, 3);
  EXPECT_EQ(m.atoms()[0].formal_charge, -1);
}

TEST(SmilesParser, StereoMarkersDiscarded) {
  Molecule m = parse_smiles("F/C=C\\F");
  ASSERT_EQ(m.atom_count(), 4u);
  ASSERT_EQ(m.bond_count(), 3u);
  EXPECT_EQ(m.bonds()[0].order, BondOrder::Single);
  EXPECT_EQ(m.bonds()[1].order, BondOrder::Double);
  EXPECT_EQ(m.bonds()[2].order, BondOrder::Single);
}

TEST(SmilesParser, RingBondOrderFromEitherEnd) {
  for (const char *s : {"C=1CC1", "C1CC=1", "C=1CC=1"}) {
    Molecule m = parse_smiles(s);
    bool has_double = false;
    for (const auto &b : m.bonds()) {
      has_double = has_double || b.order == BondOrder::Double;
    }
    EXPECT_TRUE(has_double) << s;
  }
}

TEST(SmilesParser, CorpusValidCases) {
  for (const auto &c : corpus::valid_smiles_cases()) {
    SCOPED_TRACE(c.smiles);
    Molecule m = parse_smiles(c.smiles);
    EXPECT_EQ(static_cast<int>(m.atom_count()), c.atoms);
    EXPECT_EQ(static_cast<int>(m.bond_count()), c.bonds);
    int charge = 0, total_h = 0;
    for (size_t i = 0; i < m.atom_count(); ++i) {
      charge += m.atoms()[i].formal_charge;
      total_h += chem::implicit_h_count(m, i);
    }
    EXPECT_EQ(charge, c.net_charge);
    EXPECT_EQ(total_h, c.total_h);
  }
}

TEST(SmilesParser, CorpusMalformedCases) {
  for (const auto &c : corpus::malformed_smiles_cases()) {
    SCOPED_TRACE(c.smiles);
    try {
      parse_smiles(c.smiles);
      ADD_FAILURE() << "expected ParseError for " << c.smiles;
    } catch (const ParseError &e) {
      EXPECT_EQ(e.kind(), c.kind) << e.what();
      EXPECT_EQ(e.offset(), c.offset) << e.what();
    }
  }
}

TEST(SmilesParser, DeterministicReparse) {
  for (const auto &c : corpus::valid_smiles_cases()) {
    Molecule a = parse_smiles(c.smiles);
    Molecule b = parse_smiles(c.smiles);
    ASSERT_EQ(a.atom_count(), b.atom_count());
    ASSERT_EQ(a.bond_count(), b.bond_count());
    for (size_t i = 0; i < a.atom_count(); ++i) {
      EXPECT_EQ(a.atoms()[i].element, b.atoms()[i].element);
      EXPECT_EQ(a.atoms()[i].aromatic, b.atoms()[i].aromatic);
      EXPECT_EQ(a.atoms()[i].formal_charge, b.atoms()[i].formal_charge);
      EXPECT_EQ(a.atoms()[i].explicit_h, b.atoms()[i].explicit_h);
      EXPECT_EQ(a.atoms()[i].isotope, b.atoms()[i].isotope);
    }
    for (size_t i = 0; i < a.bond_count(); ++i) {
      EXPECT_EQ(a.bonds()[i].a, b.bonds()[i].a);
      EXPECT_EQ(a.bonds()[i].b, b.bonds()[i].b);
      EXPECT_EQ(a.bonds()[i].order, b.bonds()[i].order);
    }
  }
}

TEST(ImplicitH, MethaneAndEthanol) {
  Molecule methane = parse_smiles("C");
  EXPECT_EQ(chem::implicit_h_count(methane, 0), 4);
  Molecule ethanol = parse_smiles("CCO");
  EXPECT_EQ(chem::implicit_h_count(ethanol, 2), 1);
}

// Independent valence check for the aromatic-carbon case: two aromatic
// ring bonds sum to 3.0, and carbon's valence of 4 leaves one hydrogen.
TEST(ImplicitH, AromaticCarbonOneHydrogen) {
  Molecule benzene = parse_smiles("c1ccccc1");
  for (size_t i = 0; i < benzene.atom_count(); ++i) {
    EXPECT_EQ(chem::implicit_h_count(benzene, i), 1);
  }
}

TEST(ImplicitH, NonNegativeOverCorpus) {
  for (const auto &c : corpus::valid_smiles_cases()) {
    Molecule m = parse_smiles(c.smiles);
    for (size_t i = 0; i < m.atom_count(); ++i) {
      EXPECT_GE(chem::implicit_h_count(m, i), 0) << c.smiles;
    }
  }
}

namespace {

// Oracle: an edge lies on a cycle iff its endpoints stay connected after
// removing it.
chem::RingFlags ring_flags_oracle(const Molecule &m) {
  chem::RingFlags flags;
  flags.atom_in_ring.assign(m.atom_count(), false);
  flags.bond_in_ring.assign(m.bond_count(), false);
  for (size_t skip = 0; skip < m.bond_count(); ++skip) {
    const int src = m.bonds()[skip].a;
    const int dst = m.bonds()[skip].b;
    std::vector<bool> seen(m.atom_count(), false);
    std::vector<int> stack = {src};
    seen[static_cast<size_t>(src)] = true;
    while (!stack.empty()) {
      const int node = stack.back();
      stack.pop_back();
      for (const auto &[nbr, bond] : m.neighbors(static_cast<size_t>(node))) {
        if (bond == static_cast<int>(skip) || seen[static_cast<size_t>(nbr)]) {
          continue;
        }
        seen[static_cast<size_t>(nbr)] = true;
        stack.push_back(nbr);
      }
    }
    if (seen[static_cast<size_t>(dst)]) {
      flags.bond_in_ring[skip] = true;
      flags.atom_in_ring[static_cast<size_t>(src)] = true;
      flags.atom_in_ring[static_cast<size_t>(dst)] = true;
    }
  }
  return flags;
}

}  // namespace

TEST(RingFlags, AcyclicAllFalse) {
  const chem::RingFlags flags = chem::ring_flags(parse_smiles("CCO"));
  for (bool f : flags.atom_in_ring) {
    EXPECT_FALSE(f);
  }
  for (bool f : flags.bond_in_ring) {
    EXPECT_FALSE(f);
  }
}

TEST(RingFlags, TriangleAllTrue) {
  const chem::RingFlags flags = chem::ring_flags(parse_smiles("C1CC1"));
  for (bool f : flags.atom_in_ring) {
    EXPECT_TRUE(f);
  }
  for (bool f : flags.bond_in_ring) {
    EXPECT_TRUE(f);
  }
}

TEST(RingFlags, TriangleWithTail) {
  Molecule m = parse_smiles("C1CC1C");
  const chem::RingFlags flags = chem::ring_flags(m);
  EXPECT_TRUE(flags.atom_in_ring[0]);
  EXPECT_TRUE(flags.atom_in_ring[1]);
  EXPECT_TRUE(flags.atom_in_ring[2]);
  EXPECT_FALSE(flags.atom_in_ring[3]);
  for (size_t i = 0; i < m.bond_count(); ++i) {
    const auto &b = m.bonds()[i];
    const bool tail = (b.a == 2 && b.b == 3) || (b.a == 3 && b.b == 2);
    EXPECT_EQ(flags.bond_in_ring[i], !tail);
  }
}

TEST(RingFlags, MatchesOracleOnSmallMolecules) {
  size_t checked = 0;
  for (const auto &c : corpus::valid_smiles_cases()) {
    Molecule m = parse_smiles(c.smiles);
    if (m.atom_count() > 8) {
      continue;
    }
    ++checked;
    const chem::RingFlags fast = chem::ring_flags(m);
    const chem::RingFlags slow = ring_flags_oracle(m);
    EXPECT_EQ(fast.atom_in_ring, slow.atom_in_ring) << c.smiles;
    EXPECT_EQ(fast.bond_in_ring, slow.bond_in_ring) << c.smiles;
  }
  EXPECT_GT(checked, 50u);
}

// For connected single-component SMILES, ring closures account exactly for
// the bonds beyond the spanning tree.
TEST(SmilesParser, BondCountIdentity) {
  for (const auto &c : corpus::valid_smiles_cases()) {
    EXPECT_GE(c.bonds, c.atoms - 1) << c.smiles;
  }
}
