#pragma once

#include <cstdint>
#include <vector>

#include "probqsar/chem/molecule.hpp"

namespace probqsar::feat {

struct FingerprintConfig {
  uint32_t length_L = 512;  // power of two, >= 64
  int radius_r = 3;         // 0..6

  void validate() const;
};

class BitFingerprint {
public:
  explicit BitFingerprint(uint32_t length) : bits_(length, 0) {}

  uint32_t length() const { return static_cast<uint32_t>(bits_.size()); }
  void set(uint32_t i) { bits_[i] = 1; }
  bool test(uint32_t i) const { return bits_[i] != 0; }
  uint32_t popcount() const;
  std::vector<uint32_t> on_bits() const;

  bool operator==(const BitFingerprint &o) const { return bits_ == o.bits_; }

private:
  std::vector<uint8_t> bits_;
};

// Initial ECFP atom identifier: FNV-1a over the little-endian i64 encoding
// of (element, heavy degree, implicit+explicit-neighbor H count, formal
// charge, in-ring flag, aromatic flag), in that order.
uint64_t atom_initial_invariant(const chem::Molecule &m, size_t atom_index);
uint64_t atom_initial_invariant(const chem::Molecule &m, size_t atom_index,
                                const chem::RingFlags &rings);

// Bond contribution to neighbor tuples: single=1 double=2 triple=3
// aromatic=4 (the BondOrder enum values).
uint64_t bond_order_code(chem::BondOrder order);

// Iteration update: FNV-1a over (iteration, own id, then each (bond code,
// neighbor id) pair sorted ascending), all as little-endian u64.
uint64_t iteration_hash(uint64_t iteration, uint64_t own_id,
                        std::vector<std::pair<uint64_t, uint64_t>> pairs);

// ECFP-style circular fingerprint. Every radius-0 identifier is emitted;
// at iterations 1..r an atom's environment (the set of bond indices within
// that radius) is emitted only if the same bond set was not emitted at an
// earlier iteration, and when several atoms cover the same bond set within
// one iteration the smallest identifier represents it (which keeps the
// result independent of atom order). Identifiers fold into bucket
// (id mod L).
BitFingerprint morgan_fingerprint(const chem::Molecule &m,
                                  const FingerprintConfig &cfg);

}  // namespace probqsar::feat
