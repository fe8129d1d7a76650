#include "probqsar/feat/fingerprint.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "probqsar/errors.hpp"
#include "probqsar/feat/fnv.hpp"

namespace probqsar::feat {

void FingerprintConfig::validate() const {
  if (length_L < 64 || (length_L & (length_L - 1)) != 0) {
    throw Error("fingerprint length must be a power of two >= 64");
  }
  if (radius_r < 0 || radius_r > 6) {
    throw Error("fingerprint radius must be in [0, 6]");
  }
}

uint32_t BitFingerprint::popcount() const {
  uint32_t n = 0;
  for (uint8_t b : bits_) {
    n += b;
  }
  return n;
}

std::vector<uint32_t> BitFingerprint::on_bits() const {
  std::vector<uint32_t> on;
  for (uint32_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) {
      on.push_back(i);
    }
  }
  return on;
}

uint64_t bond_order_code(chem::BondOrder order) {
  return static_cast<uint64_t>(order);
}

uint64_t atom_initial_invariant(const chem::Molecule &m, size_t atom_index,
                                const chem::RingFlags &rings) {
  const chem::Atom &atom = m.atoms()[atom_index];
  int heavy_degree = 0;
  int h_neighbors = 0;
  for (const auto &[nbr, bond] : m.neighbors(atom_index)) {
    if (m.atoms()[nbr].element == 1) {
      ++h_neighbors;
    } else {
      ++heavy_degree;
    }
  }
  const int total_h = chem::implicit_h_count(m, atom_index) + h_neighbors;
  return Fnv1a()
      .update_i64(atom.element)
      .update_i64(heavy_degree)
      .update_i64(total_h)
      .update_i64(atom.formal_charge)
      .update_i64(rings.atom_in_ring[atom_index] ? 1 : 0)
      .update_i64(atom.aromatic ? 1 : 0)
      .digest();
}

uint64_t atom_initial_invariant(const chem::Molecule &m, size_t atom_index) {
  return atom_initial_invariant(m, atom_index, chem::ring_flags(m));
}

uint64_t iteration_hash(uint64_t iteration, uint64_t own_id,
                        std::vector<std::pair<uint64_t, uint64_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Fnv1a h;
  h.update_u64(iteration).update_u64(own_id);
  for (const auto &[code, id] : pairs) {
    h.update_u64(code).update_u64(id);
  }
  return h.digest();
}

BitFingerprint morgan_fingerprint(const chem::Molecule &m,
                                  const FingerprintConfig &cfg) {
  cfg.validate();
  if (m.atom_count() == 0) {
    throw EmptyMolecule("cannot fingerprint an empty molecule");
  }
  const size_t n = m.atom_count();
  const chem::RingFlags rings = chem::ring_flags(m);

  BitFingerprint fp(cfg.length_L);
  std::vector<uint64_t> ids(n);
  for (size_t a = 0; a < n; ++a) {
    ids[a] = atom_initial_invariant(m, a, rings);
    fp.set(static_cast<uint32_t>(ids[a] % cfg.length_L));
  }

  // env[a] = sorted bond indices within the current radius of a
  std::vector<std::vector<int>> env(n);
  std::set<std::vector<int>> emitted;

  for (int k = 1; k <= cfg.radius_r; ++k) {
    std::vector<uint64_t> next_ids(n);
    std::vector<std::vector<int>> next_env(n);
    for (size_t a = 0; a < n; ++a) {
      std::vector<std::pair<uint64_t, uint64_t>> pairs;
      std::set<int> grown(env[a].begin(), env[a].end());
      for (const auto &[nbr, bond] : m.neighbors(a)) {
        pairs.emplace_back(bond_order_code(m.bonds()[bond].order), ids[nbr]);
        grown.insert(bond);
        grown.insert(env[nbr].begin(), env[nbr].end());
      }
      next_ids[a] = iteration_hash(static_cast<uint64_t>(k), ids[a], pairs);
      next_env[a].assign(grown.begin(), grown.end());
    }
    // Environments already emitted at an earlier iteration are dropped;
    // when several atoms cover the same bond set at this iteration, the
    // smallest identifier represents it (atom-order independent).
    std::map<std::vector<int>, uint64_t> candidates;
    for (size_t a = 0; a < n; ++a) {
      if (next_env[a].empty()) {
        continue;  // isolated atom: no new environment
      }
      auto [it, inserted] = candidates.emplace(next_env[a], next_ids[a]);
      if (!inserted) {
        it->second = std::min(it->second, next_ids[a]);
      }
    }
    for (const auto &[env_bonds, id] : candidates) {
      if (emitted.insert(env_bonds).second) {
        fp.set(static_cast<uint32_t>(id % cfg.length_L));
      }
    }
    ids = std::move(next_ids);
    env = std::move(next_env);
  }
  return fp;
}

}  // namespace probqsar::feat
