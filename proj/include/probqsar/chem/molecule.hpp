#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "probqsar/errors.hpp"

namespace probqsar::chem {

enum class BondOrder : uint8_t {
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
};

struct Atom {
  int element = 0;  // atomic number, 1..118
  bool aromatic = false;
  int formal_charge = 0;
  // Present iff the atom was written in brackets; bracket atoms with no H
  // field carry explicit_h = 0 (SMILES bracket semantics).
  std::optional<int> explicit_h;
  std::optional<int> isotope;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
};

// Immutable molecular graph in SMILES reading order.
class Molecule {
public:
  Molecule() = default;
  Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
           std::string source_smiles);

  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }
  const std::string &source_smiles() const { return source_smiles_; }
  size_t atom_count() const { return atoms_.size(); }
  size_t bond_count() const { return bonds_.size(); }

  // Per atom: (neighbor atom index, bond index) pairs in bond order.
  const std::vector<std::pair<int, int>> &neighbors(size_t atom) const {
    return adjacency_[atom];
  }

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::string source_smiles_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Hydrogens implied by the valence model. Bracket atoms return their
// explicit H count. Organic-subset atoms return (default valence - bond
// order sum) where aromatic bonds count 1.5, the smallest allowed valence
// >= the bond sum is chosen (B3, C4, N3, O2, P3/5, S2/4/6, halogens 1),
// and the result is floored at 0.
int implicit_h_count(const Molecule &m, size_t atom_index);

struct RingFlags {
  std::vector<bool> atom_in_ring;
  std::vector<bool> bond_in_ring;
};

// An atom/bond is flagged iff it lies on at least one cycle. Bonds that are
// not bridges are ring bonds; ring atoms are their endpoints.
RingFlags ring_flags(const Molecule &m);

int element_from_symbol(std::string_view symbol);  // 0 if unknown
std::string_view element_symbol(int atomic_number);
bool aromatic_allowed(int atomic_number);  // B,C,N,O,P,S,Se,As

}  // namespace probqsar::chem
