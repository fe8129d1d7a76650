#include "probqsar/chem/molecule.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace probqsar::chem {

namespace {

constexpr std::array<std::string_view, 119> kSymbols = {
    "?",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
    "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
    "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
    "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
    "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
    "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
    "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
    "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am",
    "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh",
    "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

double bond_order_value(BondOrder order) {
  switch (order) {
    case BondOrder::Single:
      return 1.0;
    case BondOrder::Double:
      return 2.0;
    case BondOrder::Triple:
      return 3.0;
    case BondOrder::Aromatic:
      return 1.5;
  }
  return 1.0;
}

// Allowed valences for un-bracketed organic-subset atoms.
const std::vector<int> &default_valences(int element) {
  static const std::vector<int> b = {3};
  static const std::vector<int> c = {4};
  static const std::vector<int> n = {3};
  static const std::vector<int> o = {2};
  static const std::vector<int> p = {3, 5};
  static const std::vector<int> s = {2, 4, 6};
  static const std::vector<int> halogen = {1};
  static const std::vector<int> none = {};
  switch (element) {
    case 5:
      return b;
    case 6:
      return c;
    case 7:
      return n;
    case 8:
      return o;
    case 15:
      return p;
    case 16:
      return s;
    case 9:
    case 17:
    case 35:
    case 53:
      return halogen;
    default:
      return none;
  }
}

}  // namespace

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
                   std::string source_smiles)
    : atoms_(std::move(atoms)),
      bonds_(std::move(bonds)),
      source_smiles_(std::move(source_smiles)),
      adjacency_(atoms_.size()) {
  for (size_t i = 0; i < bonds_.size(); ++i) {
    adjacency_[bonds_[i].a].emplace_back(bonds_[i].b, static_cast<int>(i));
    adjacency_[bonds_[i].b].emplace_back(bonds_[i].a, static_cast<int>(i));
  }
}

int implicit_h_count(const Molecule &m, size_t atom_index) {
  const Atom &atom = m.atoms()[atom_index];
  if (atom.explicit_h.has_value()) {
    return *atom.explicit_h;
  }
  double bond_sum = 0.0;
  for (const auto &[nbr, bond_idx] : m.neighbors(atom_index)) {
    bond_sum += bond_order_value(m.bonds()[bond_idx].order);
  }
  const auto &valences = default_valences(atom.element);
  for (int v : valences) {
    if (static_cast<double>(v) >= bond_sum - 1e-9) {
      return std::max(0, static_cast<int>(std::floor(v - bond_sum + 1e-9)));
    }
  }
  return 0;  // hypervalent: no H left to add
}

RingFlags ring_flags(const Molecule &m) {
  const size_t n = m.atom_count();
  RingFlags flags;
  flags.atom_in_ring.assign(n, false);
  flags.bond_in_ring.assign(m.bond_count(), true);

  // Tarjan bridge detection (iterative). Bridges are the only non-ring
  // bonds in a graph without parallel edges.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int node;
    int parent_bond;
    size_t next_edge;
  };
  for (size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) {
      continue;
    }
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({static_cast<int>(root), -1, 0});
    while (!stack.empty()) {
      Frame &frame = stack.back();
      const auto &adj = m.neighbors(frame.node);
      if (frame.next_edge < adj.size()) {
        auto [nbr, bond_idx] = adj[frame.next_edge++];
        if (bond_idx == frame.parent_bond) {
          continue;
        }
        if (disc[nbr] == -1) {
          disc[nbr] = low[nbr] = timer++;
          stack.push_back({nbr, bond_idx, 0});
        } else {
          low[frame.node] = std::min(low[frame.node], disc[nbr]);
        }
      } else {
        const int node = frame.node;
        const int parent_bond = frame.parent_bond;
        stack.pop_back();
        if (!stack.empty()) {
          const int parent = stack.back().node;
          low[parent] = std::min(low[parent], low[node]);
          if (low[node] > disc[parent]) {
            flags.bond_in_ring[parent_bond] = false;  // bridge
          }
        }
      }
    }
  }
  for (size_t i = 0; i < m.bond_count(); ++i) {
    if (flags.bond_in_ring[i]) {
      flags.atom_in_ring[m.bonds()[i].a] = true;
      flags.atom_in_ring[m.bonds()[i].b] = true;
    }
  }
  return flags;
}

int element_from_symbol(std::string_view symbol) {
  for (size_t z = 1; z < kSymbols.size(); ++z) {
    if (kSymbols[z] == symbol) {
      return static_cast<int>(z);
    }
  }
  return 0;
}

std::string_view element_symbol(int atomic_number) {
  if (atomic_number < 1 || atomic_number >= static_cast<int>(kSymbols.size())) {
    return kSymbols[0];
  }
  return kSymbols[atomic_number];
}

bool aromatic_allowed(int atomic_number) {
  switch (atomic_number) {
    case 5:   // B
    case 6:   // C
    case 7:   // N
    case 8:   // O
    case 15:  // P
    case 16:  // S
    case 33:  // As
    case 34:  // Se
      return true;
    default:
      return false;
  }
}

}  // namespace probqsar::chem
