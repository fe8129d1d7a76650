#pragma once

// Brute-force ECFP reference, independent of the incremental production
// path: identifiers are recomputed recursively per (atom, radius) and
// environments are enumerated from scratch with a BFS per atom. Shares only
// the hash primitives (the quantity under agreement) with the library.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "probqsar/feat/fingerprint.hpp"

namespace probqsar::corpus {

inline uint64_t oracle_identifier(const chem::Molecule &m,
                                  const chem::RingFlags &rings, size_t atom,
                                  int radius) {
  if (radius == 0) {
    return feat::atom_initial_invariant(m, atom, rings);
  }
  std::vector<std::pair<uint64_t, uint64_t>> pairs;
  for (const auto &[nbr, bond] : m.neighbors(atom)) {
    pairs.emplace_back(feat::bond_order_code(m.bonds()[bond].order),
                       oracle_identifier(m, rings, static_cast<size_t>(nbr),
                                         radius - 1));
  }
  return feat::iteration_hash(static_cast<uint64_t>(radius),
                              oracle_identifier(m, rings, atom, radius - 1),
                              std::move(pairs));
}

// Bonds whose nearer endpoint lies within distance radius-1 of the center.
inline std::vector<int> oracle_environment(const chem::Molecule &m,
                                           size_t atom, int radius) {
  std::vector<int> dist(m.atom_count(), -1);
  std::queue<size_t> frontier;
  dist[atom] = 0;
  frontier.push(atom);
  while (!frontier.empty()) {
    const size_t node = frontier.front();
    frontier.pop();
    for (const auto &[nbr, bond] : m.neighbors(node)) {
      if (dist[static_cast<size_t>(nbr)] == -1) {
        dist[static_cast<size_t>(nbr)] = dist[node] + 1;
        frontier.push(static_cast<size_t>(nbr));
      }
    }
  }
  std::vector<int> env;
  for (size_t b = 0; b < m.bond_count(); ++b) {
    const int da = dist[static_cast<size_t>(m.bonds()[b].a)];
    const int db = dist[static_cast<size_t>(m.bonds()[b].b)];
    const int nearer = (da >= 0 && db >= 0) ? std::min(da, db)
                       : da >= 0            ? da
                                            : db;
    if (nearer >= 0 && nearer <= radius - 1) {
      env.push_back(static_cast<int>(b));
    }
  }
  return env;
}

inline feat::BitFingerprint oracle_fingerprint(
    const chem::Molecule &m, const feat::FingerprintConfig &cfg) {
  const chem::RingFlags rings = chem::ring_flags(m);
  feat::BitFingerprint fp(cfg.length_L);
  for (size_t a = 0; a < m.atom_count(); ++a) {
    fp.set(static_cast<uint32_t>(oracle_identifier(m, rings, a, 0) %
                                 cfg.length_L));
  }
  std::set<std::vector<int>> emitted;
  for (int k = 1; k <= cfg.radius_r; ++k) {
    std::map<std::vector<int>, uint64_t> candidates;
    for (size_t a = 0; a < m.atom_count(); ++a) {
      std::vector<int> env = oracle_environment(m, a, k);
      if (env.empty()) {
        continue;
      }
      const uint64_t id = oracle_identifier(m, rings, a, k);
      auto [it, inserted] = candidates.emplace(std::move(env), id);
      if (!inserted) {
        it->second = std::min(it->second, id);
      }
    }
    for (const auto &[env_bonds, id] : candidates) {
      if (emitted.insert(env_bonds).second) {
        fp.set(static_cast<uint32_t>(id % cfg.length_L));
      }
    }
  }
  return fp;
}

// 100 molecules with at most 8 heavy atoms for oracle-equivalence checks.
inline const std::vector<const char *> &small_molecule_corpus() {
  static const std::vector<const char *> corpus = {
      "C", "CC", "CCC", "CCCC", "CCCCC", "CCCCCC", "CCCCCCC", "CCCCCCCC",
      "CC(C)C", "CC(C)(C)C", "CCC(C)C", "CC(C)CC", "CC(CC)CC",
      "CO", "CCO", "CCCO", "OCCO", "COC", "CCOC", "CN", "CCN", "NCCN",
      "CNC", "CCNC", "CS", "CCS", "CSC", "CCSC", "OCC(O)CO", "CC(N)C",
      "CC(O)C", "OC(O)O",
      "C=C", "CC=C", "C=CC=C", "CC=CC", "C=O", "CC=O", "CC(=O)C",
      "CC(=O)O", "C#C", "CC#C", "C#N", "CC#N", "C=C=C", "O=C=O", "N#CC#N",
      "CN=O",
      "C1CC1", "C1CCC1", "C1CCCC1", "C1CCCCC1", "C1CCCCCC1", "C1CC1C",
      "CC1CC1C", "C1CC1CC", "C1CCC1C", "C1CC2CC12", "C1CC1C1CC1",
      "O1CCOCC1", "N1CCNCC1", "C1CCOC1", "C1CCNC1", "C1=CC1", "C1CC=1",
      "C%10CC%10", "C%12CCC%12C",
      "c1ccccc1", "Cc1ccccc1", "CCc1ccccc1", "c1ccncc1", "c1ccoc1",
      "c1ccsc1", "c1cc[nH]c1", "c1cnc[nH]1", "Oc1ccccc1", "Nc1ccccc1",
      "Clc1ccccc1", "Cc1cccs1", "c1cscn1", "c1ccc(cc1)O",
      "[NH4+]", "[OH-]", "[13CH4]", "[C@H](C)(N)O", "C[N+](C)(C)C",
      "CC(=O)[O-]", "[NH3+]CC([O-])=O", "[O-]C=O", "[S+](C)(C)C",
      "[2H]O[2H]", "[nH]1cccc1", "C[13C](C)C",
      "CF", "CCl", "CBr", "CI", "FC(F)F", "ClC(Cl)Cl", "FC(F)(F)C",
      "CC(Cl)C", "BrCCBr", "ClCCl",
  };
  return corpus;
}

}  // namespace probqsar::corpus
