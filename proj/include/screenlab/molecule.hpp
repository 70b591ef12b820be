//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_MOLECULE_HPP
#define SCREENLAB_MOLECULE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "screenlab/elements.hpp"
#include "screenlab/error.hpp"

namespace screenlab {

enum class BondOrder : uint8_t {
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
};

struct Atom {
  uint8_t element = elem::C;
  int8_t charge = 0;
  uint8_t implicit_h = 0;
  uint16_t isotope = 0;  // 0 = natural abundance
  bool aromatic = false;
  // Opaque stereo tag ("@", "@@"); parsed and preserved, never interpreted.
  std::string stereo;
};

struct Bond {
  int a = -1;
  int b = -1;
  BondOrder order = BondOrder::Single;
  // Integer order backing an aromatic bond (a concrete Kekule assignment);
  // equal to order for non-aromatic bonds.
  uint8_t kekule = 1;
  char direction = 0;  // '/' or '\\', opaque

  int other(int i) const { return i == a ? b : a; }
};

/// Immutable hydrogen-suppressed molecular graph with perceived aromaticity,
/// implicit hydrogens, and SSSR ring information. Construct via
/// MoleculeBuilder (or parse_smiles); safe to share across threads.
class Molecule {
 public:
  Molecule() = default;

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  const Atom& atom(int i) const { return atoms_[static_cast<size_t>(i)]; }
  const Bond& bond(int i) const { return bonds_[static_cast<size_t>(i)]; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }

  /// Bond indices incident to atom i.
  const std::vector<int>& bonds_of(int i) const { return adj_[static_cast<size_t>(i)]; }
  int degree(int i) const { return static_cast<int>(adj_[static_cast<size_t>(i)].size()); }

  /// SSSR rings, each a cycle of atom indices in ring order.
  const std::vector<std::vector<int>>& rings() const { return rings_; }
  /// Bond indices of ring r, parallel to rings()[r].
  const std::vector<std::vector<int>>& ring_bonds() const { return ring_bonds_; }

  bool atom_in_ring(int i) const { return atom_in_ring_[static_cast<size_t>(i)]; }
  bool bond_in_ring(int i) const { return bond_in_ring_[static_cast<size_t>(i)]; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int find_bond(int a, int b) const {
    for (int bi : adj_[static_cast<size_t>(a)]) {
      const Bond& bd = bonds_[static_cast<size_t>(bi)];
      if (bd.other(a) == b) return bi;
    }
    return -1;
  }

  /// Total hydrogen count (implicit only; explicit isotope-labelled H atoms
  /// are graph atoms and not counted here).
  int total_implicit_h() const {
    int n = 0;
    for (const Atom& a : atoms_) n += a.implicit_h;
    return n;
  }

  /// Sum of integer (Kekule) bond orders at atom i.
  int explicit_valence(int i) const {
    int v = 0;
    for (int bi : adj_[static_cast<size_t>(i)]) v += bonds_[static_cast<size_t>(bi)].kekule;
    return v;
  }

  /// True if atom i has a bond of the given order.
  bool has_bond_of_order(int i, BondOrder o) const {
    for (int bi : adj_[static_cast<size_t>(i)])
      if (bonds_[static_cast<size_t>(bi)].order == o) return true;
    return false;
  }

  /// Copy with atoms relabelled: atom new_order[k] of this molecule becomes
  /// atom k of the result. Exercises canonicalization invariance in tests.
  Molecule reordered(const std::vector<int>& new_order) const;

 private:
  friend class MoleculeBuilder;

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> rings_;
  std::vector<std::vector<int>> ring_bonds_;
  std::vector<bool> atom_in_ring_;
  std::vector<bool> bond_in_ring_;
  std::string name_;
};

/// Assembles a Molecule: structural validation, Kekule assignment for
/// aromatic input, implicit-hydrogen and valence resolution, SSSR
/// perception, and Hueckel aromaticity perception, in that order.
class MoleculeBuilder {
 public:
  struct AtomSpec {
    Atom atom;
    bool bracket = false;        // H count fixed by input
    uint8_t declared_h = 0;      // only meaningful when bracket
    bool input_aromatic = false; // written lowercase / flagged aromatic
  };
  struct BondSpec {
    int a = -1, b = -1;
    BondOrder order = BondOrder::Single;
    bool order_explicit = false;  // written with an explicit symbol
    char direction = 0;
  };

  int add_atom(AtomSpec spec) {
    atoms_.push_back(std::move(spec));
    return static_cast<int>(atoms_.size()) - 1;
  }

  void add_bond(BondSpec spec) { bonds_.push_back(spec); }

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const AtomSpec& atom_spec(int i) const { return atoms_[static_cast<size_t>(i)]; }

  /// Validates and finalizes. Throws ValenceError on chemistry violations.
  Molecule finalize();

 private:
  enum class PiNeed { Required, Forbidden, Flexible };

  std::vector<AtomSpec> atoms_;
  std::vector<BondSpec> bonds_;
};

/// Component id per atom plus component count.
inline std::pair<std::vector<int>, int> connected_component_ids(const Molecule& m) {
  std::vector<int> comp(static_cast<size_t>(m.atom_count()), -1);
  int ncomp = 0;
  for (int i = 0; i < m.atom_count(); ++i) {
    if (comp[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> stack{i};
    comp[static_cast<size_t>(i)] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int bi : m.bonds_of(v)) {
        int w = m.bond(bi).other(v);
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  return {std::move(comp), ncomp};
}

namespace detail {

// Bonds whose removal disconnects their endpoints are acyclic; everything
// else lies on a cycle. Iterative DFS lowlink.
inline std::vector<bool> cyclic_bonds(int n, const std::vector<Bond>& bonds,
                                      const std::vector<std::vector<int>>& adj) {
  std::vector<bool> cyclic(bonds.size(), false);
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  int timer = 0;
  struct Frame {
    int v;
    int parent_bond;
    size_t edge_idx;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] >= 0) continue;
    std::vector<Frame> stack;
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& edges = adj[static_cast<size_t>(f.v)];
      if (f.edge_idx < edges.size()) {
        int bi = edges[f.edge_idx++];
        if (bi == f.parent_bond) continue;
        int w = bonds[static_cast<size_t>(bi)].other(f.v);
        if (disc[static_cast<size_t>(w)] < 0) {
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          stack.push_back({w, bi, 0});
        } else {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
          if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) cyclic[static_cast<size_t>(bi)] = true;
        }
      } else {
        int v = f.v;
        int pb = f.parent_bond;
        stack.pop_back();
        if (pb >= 0) {
          int u = bonds[static_cast<size_t>(pb)].other(v);
          low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
          if (low[static_cast<size_t>(v)] < disc[static_cast<size_t>(v)]) cyclic[static_cast<size_t>(pb)] = true;
        }
      }
    }
  }
  return cyclic;
}

// GF(2) edge-space vector, one bit per bond.
struct EdgeVec {
  std::vector<uint64_t> w;
  explicit EdgeVec(size_t bonds = 0) : w((bonds + 63) / 64, 0) {}
  void set(int b) { w[static_cast<size_t>(b) >> 6] |= uint64_t{1} << (b & 63); }
  bool test(int b) const { return (w[static_cast<size_t>(b) >> 6] >> (b & 63)) & 1; }
  void operator^=(const EdgeVec& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
  }
  bool zero() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }
  int lowest_bit() const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i]) return static_cast<int>(i * 64 + static_cast<size_t>(std::countr_zero(w[i])));
    return -1;
  }
};

struct CandidateRing {
  std::vector<int> atoms;   // cycle order
  std::vector<int> bonds;   // cycle order, bonds[i] joins atoms[i], atoms[i+1]
  std::vector<int> sorted_atoms;
  EdgeVec vec;
};

// Smallest set of smallest rings via Horton: generate candidate short cycles
// through every (vertex, edge) pair, then greedily keep a linearly
// independent basis ordered by (size, lexicographic atom list).
inline void compute_sssr(int n, const std::vector<Bond>& bonds,
                         const std::vector<std::vector<int>>& adj,
                         std::vector<std::vector<int>>& rings_out,
                         std::vector<std::vector<int>>& ring_bonds_out) {
  rings_out.clear();
  ring_bonds_out.clear();
  if (n == 0 || bonds.empty()) return;

  // Cyclomatic number per whole graph: B - N + components.
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> stack{i};
    comp[static_cast<size_t>(i)] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int bi : adj[static_cast<size_t>(v)]) {
        int w = bonds[static_cast<size_t>(bi)].other(v);
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  int mu = static_cast<int>(bonds.size()) - n + ncomp;
  if (mu <= 0) return;

  std::vector<CandidateRing> candidates;
  std::vector<int> dist(static_cast<size_t>(n)), parent_bond(static_cast<size_t>(n));
  for (int root = 0; root < n; ++root) {
    // BFS shortest-path tree from root.
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_bond.begin(), parent_bond.end(), -1);
    std::vector<int> queue{root};
    dist[static_cast<size_t>(root)] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int bi : adj[static_cast<size_t>(v)]) {
        int w = bonds[static_cast<size_t>(bi)].other(v);
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          parent_bond[static_cast<size_t>(w)] = bi;
          queue.push_back(w);
        }
      }
    }
    auto path_to_root = [&](int v, std::vector<int>& atoms, std::vector<int>& bnds) {
      atoms.clear();
      bnds.clear();
      while (v != root) {
        atoms.push_back(v);
        int pb = parent_bond[static_cast<size_t>(v)];
        bnds.push_back(pb);
        v = bonds[static_cast<size_t>(pb)].other(v);
      }
      atoms.push_back(root);
    };
    std::vector<int> pa, pb_bonds, qa, qb_bonds;
    for (size_t bi = 0; bi < bonds.size(); ++bi) {
      int x = bonds[bi].a, y = bonds[bi].b;
      if (dist[static_cast<size_t>(x)] < 0 || dist[static_cast<size_t>(y)] < 0) continue;
      if (parent_bond[static_cast<size_t>(x)] == static_cast<int>(bi) ||
          parent_bond[static_cast<size_t>(y)] == static_cast<int>(bi))
        continue;  // tree edge
      path_to_root(x, pa, pb_bonds);
      path_to_root(y, qa, qb_bonds);
      // Paths must meet only at root, else this isn't a simple cycle.
      std::vector<bool> seen(static_cast<size_t>(n), false);
      for (int v : pa) seen[static_cast<size_t>(v)] = true;
      bool disjoint = true;
      for (int v : qa)
        if (v != root && seen[static_cast<size_t>(v)]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;

      CandidateRing ring;
      // x ... root ... y, then closing edge y-x.
      ring.atoms = pa;  // x..root
      for (auto it = qa.rbegin(); it != qa.rend(); ++it)
        if (*it != root) ring.atoms.push_back(*it);
      ring.bonds = pb_bonds;
      for (auto it = qb_bonds.rbegin(); it != qb_bonds.rend(); ++it) ring.bonds.push_back(*it);
      ring.bonds.push_back(static_cast<int>(bi));
      ring.vec = EdgeVec(bonds.size());
      for (int b : ring.bonds) ring.vec.set(b);
      ring.sorted_atoms = ring.atoms;
      std::sort(ring.sorted_atoms.begin(), ring.sorted_atoms.end());
      candidates.push_back(std::move(ring));
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const CandidateRing& a, const CandidateRing& b) {
              if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
              return a.sorted_atoms < b.sorted_atoms;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const CandidateRing& a, const CandidateRing& b) {
                                 return a.sorted_atoms == b.sorted_atoms &&
                                        a.atoms.size() == b.atoms.size();
                               }),
                   candidates.end());

  // Greedy GF(2) independence with on-line Gaussian elimination.
  std::vector<EdgeVec> basis;   // reduced pivots
  std::vector<int> pivot_bits;
  for (const CandidateRing& cand : candidates) {
    if (static_cast<int>(rings_out.size()) == mu) break;
    EdgeVec v = cand.vec;
    for (size_t i = 0; i < basis.size(); ++i)
      if (v.test(pivot_bits[i])) v ^= basis[i];
    if (v.zero()) continue;
    pivot_bits.push_back(v.lowest_bit());
    basis.push_back(v);
    rings_out.push_back(cand.atoms);
    ring_bonds_out.push_back(cand.bonds);
  }
}

}  // namespace detail

inline Molecule MoleculeBuilder::finalize() {
  const int n = static_cast<int>(atoms_.size());

  // ---- structural checks ----
  for (const BondSpec& b : bonds_) {
    if (b.a < 0 || b.b < 0 || b.a >= n || b.b >= n)
      throw ValenceError("bond references out-of-range atom index");
    if (b.a == b.b) throw ValenceError("bond joins an atom to itself");
  }
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::vector<Bond> bonds;
  bonds.reserve(bonds_.size());
  for (const BondSpec& bs : bonds_) {
    for (int bi : adj[static_cast<size_t>(bs.a)])
      if (bonds[static_cast<size_t>(bi)].other(bs.a) == bs.b)
        throw ValenceError("duplicate bond between atoms " + std::to_string(bs.a) + " and " +
                           std::to_string(bs.b));
    Bond b;
    b.a = bs.a;
    b.b = bs.b;
    b.order = bs.order;
    b.kekule = bs.order == BondOrder::Aromatic ? 1 : static_cast<uint8_t>(bs.order);
    b.direction = bs.direction;
    adj[static_cast<size_t>(bs.a)].push_back(static_cast<int>(bonds.size()));
    adj[static_cast<size_t>(bs.b)].push_back(static_cast<int>(bonds.size()));
    bonds.push_back(b);
  }

  std::vector<bool> cyclic = detail::cyclic_bonds(n, bonds, adj);

  // ---- resolve implicit aromatic bond candidates ----
  // A bond written without a symbol between two aromatic-input atoms is
  // aromatic when cyclic, single otherwise (biphenyl linker).
  std::vector<bool> arom_bond(bonds.size(), false);
  for (size_t i = 0; i < bonds_.size(); ++i) {
    const BondSpec& bs = bonds_[i];
    bool both_arom = atoms_[static_cast<size_t>(bs.a)].input_aromatic &&
                     atoms_[static_cast<size_t>(bs.b)].input_aromatic;
    if (bs.order == BondOrder::Aromatic) {
      if (!cyclic[i])
        throw ValenceError("aromatic bond outside any ring");
      arom_bond[i] = true;
    } else if (!bs.order_explicit && both_arom && cyclic[i] && bs.order == BondOrder::Single) {
      arom_bond[i] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!atoms_[static_cast<size_t>(i)].input_aromatic) continue;
    bool any = false;
    for (int bi : adj[static_cast<size_t>(i)]) any = any || arom_bond[static_cast<size_t>(bi)];
    if (!any)
      throw ValenceError("aromatic atom " + std::to_string(i) + " has no aromatic ring bond");
  }

  // ---- Kekule assignment over the aromatic-input subgraph ----
  std::vector<PiNeed> need(static_cast<size_t>(n), PiNeed::Forbidden);
  for (int i = 0; i < n; ++i) {
    const AtomSpec& a = atoms_[static_cast<size_t>(i)];
    if (!a.input_aromatic) continue;
    int deg = static_cast<int>(adj[static_cast<size_t>(i)].size());
    int conn = deg + (a.bracket ? a.declared_h : 0);
    bool exo_double = false;
    for (int bi : adj[static_cast<size_t>(i)])
      if (!arom_bond[static_cast<size_t>(bi)] && bonds[static_cast<size_t>(bi)].order == BondOrder::Double)
        exo_double = true;
    switch (a.atom.element) {
      case elem::C:
        if (exo_double)
          need[static_cast<size_t>(i)] = PiNeed::Forbidden;
        else if (a.atom.charge != 0)
          need[static_cast<size_t>(i)] = PiNeed::Flexible;
        else
          need[static_cast<size_t>(i)] = PiNeed::Required;
        break;
      case elem::N:
      case elem::P:
        if (exo_double)
          need[static_cast<size_t>(i)] = PiNeed::Forbidden;
        else if (a.atom.charge > 0)
          need[static_cast<size_t>(i)] = conn <= 3 ? PiNeed::Required : PiNeed::Forbidden;
        else if (a.atom.charge < 0)
          need[static_cast<size_t>(i)] = PiNeed::Forbidden;
        else
          need[static_cast<size_t>(i)] = conn >= 3 ? PiNeed::Forbidden : PiNeed::Required;
        break;
      case elem::O:
      case elem::S:
        need[static_cast<size_t>(i)] = a.atom.charge > 0 ? PiNeed::Flexible : PiNeed::Forbidden;
        break;
      case elem::B:
        need[static_cast<size_t>(i)] = PiNeed::Flexible;
        break;
      default:
        throw ValenceError(std::string("element ") +
                           std::string(element_symbol(a.atom.element)) +
                           " cannot be aromatic");
    }
  }

  // Backtracking perfect matching over Required atoms; Flexible atoms may
  // absorb a double bond but need not.
  {
    std::vector<int> matched(static_cast<size_t>(n), -1);  // partner atom or -1
    std::vector<int> required;
    for (int i = 0; i < n; ++i)
      if (atoms_[static_cast<size_t>(i)].input_aromatic && need[static_cast<size_t>(i)] == PiNeed::Required)
        required.push_back(i);

    auto assignable = [&](int v) {
      return need[static_cast<size_t>(v)] != PiNeed::Forbidden && matched[static_cast<size_t>(v)] < 0;
    };
    // Recursive lambda via explicit stack of choices.
    std::function<bool(size_t)> solve = [&](size_t k) -> bool {
      while (k < required.size() && matched[static_cast<size_t>(required[k])] >= 0) ++k;
      if (k == required.size()) return true;
      int v = required[k];
      for (int bi : adj[static_cast<size_t>(v)]) {
        if (!arom_bond[static_cast<size_t>(bi)]) continue;
        int w = bonds[static_cast<size_t>(bi)].other(v);
        if (!assignable(w)) continue;
        matched[static_cast<size_t>(v)] = w;
        matched[static_cast<size_t>(w)] = v;
        if (solve(k + 1)) return true;
        matched[static_cast<size_t>(v)] = -1;
        matched[static_cast<size_t>(w)] = -1;
      }
      return false;
    };
    if (!solve(0)) throw ValenceError("kekulization failed: no valid alternating bond assignment");
    for (size_t bi = 0; bi < bonds.size(); ++bi) {
      if (!arom_bond[bi]) continue;
      int a = bonds[bi].a, b = bonds[bi].b;
      bonds[bi].kekule =
          (matched[static_cast<size_t>(a)] == b && matched[static_cast<size_t>(b)] == a) ? 2 : 1;
      bonds[bi].order = static_cast<BondOrder>(bonds[bi].kekule);
    }
  }

  // ---- implicit hydrogens and valence validation ----
  std::vector<Atom> out_atoms(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const AtomSpec& spec = atoms_[static_cast<size_t>(i)];
    Atom a = spec.atom;
    int vexp = 0;
    for (int bi : adj[static_cast<size_t>(i)]) vexp += bonds[static_cast<size_t>(bi)].kekule;
    ValenceSet allowed = allowed_valences(a.element, a.charge);
    if (spec.bracket) {
      a.implicit_h = spec.declared_h;
      if (!allowed.contains(vexp + spec.declared_h))
        throw ValenceError(std::string(element_symbol(a.element)) + " atom " +
                           std::to_string(i) + " with charge " + std::to_string(a.charge) +
                           " has disallowed valence " + std::to_string(vexp + spec.declared_h));
    } else {
      int target = allowed.smallest_at_least(vexp);
      if (target < 0)
        throw ValenceError(std::string(element_symbol(a.element)) + " atom " +
                           std::to_string(i) + " exceeds allowed valence (" +
                           std::to_string(vexp) + ")");
      a.implicit_h = static_cast<uint8_t>(target - vexp);
    }
    out_atoms[static_cast<size_t>(i)] = std::move(a);
  }

  // ---- ring perception ----
  Molecule m;
  m.atoms_ = std::move(out_atoms);
  m.bonds_ = std::move(bonds);
  m.adj_ = std::move(adj);
  detail::compute_sssr(n, m.bonds_, m.adj_, m.rings_, m.ring_bonds_);
  m.atom_in_ring_.assign(static_cast<size_t>(n), false);
  m.bond_in_ring_.assign(m.bonds_.size(), false);
  for (size_t bi = 0; bi < m.bonds_.size(); ++bi) m.bond_in_ring_[bi] = cyclic[bi];
  for (size_t bi = 0; bi < m.bonds_.size(); ++bi)
    if (cyclic[bi]) {
      m.atom_in_ring_[static_cast<size_t>(m.bonds_[bi].a)] = true;
      m.atom_in_ring_[static_cast<size_t>(m.bonds_[bi].b)] = true;
    }

  // ---- aromaticity perception (Hueckel 4n+2 per SSSR ring) ----
  // Pi contribution per ring atom: 1 when it has a double bond to any ring
  // atom, 0 when its double bond is exocyclic to a chain atom; otherwise
  // lone-pair heteroatoms give 2, carbanions 2, carbocations and boron 0,
  // and a saturated atom disqualifies the ring.
  for (Atom& a : m.atoms_) a.aromatic = false;
  std::vector<bool> ring_is_aromatic(m.rings_.size(), false);
  for (size_t r = 0; r < m.rings_.size(); ++r) {
    const auto& ring = m.rings_[r];
    bool ok = true;
    int pi = 0;
    for (int ai : ring) {
      const Atom& a = m.atoms_[static_cast<size_t>(ai)];
      if (!aromatic_capable(a.element)) {
        ok = false;
        break;
      }
      int doubles = 0;
      bool double_to_ring_atom = false;
      bool triple = false;
      for (int bi : m.adj_[static_cast<size_t>(ai)]) {
        const Bond& b = m.bonds_[static_cast<size_t>(bi)];
        if (b.kekule == 2) {
          ++doubles;
          if (m.atom_in_ring_[static_cast<size_t>(b.other(ai))]) double_to_ring_atom = true;
        } else if (b.kekule == 3) {
          triple = true;
        }
      }
      if (triple || doubles > 1) {
        ok = false;
        break;
      }
      if (doubles == 1) {
        pi += double_to_ring_atom ? 1 : 0;
      } else if (a.element == elem::C) {
        if (a.charge < 0)
          pi += 2;
        else if (a.charge > 0)
          pi += 0;
        else {
          ok = false;  // saturated carbon
          break;
        }
      } else if (a.element == elem::B) {
        pi += 0;
      } else {
        pi += 2;  // N/O/S/P lone pair
      }
    }
    if (ok && pi >= 2 && (pi - 2) % 4 == 0) ring_is_aromatic[r] = true;
  }
  for (size_t r = 0; r < m.rings_.size(); ++r) {
    if (!ring_is_aromatic[r]) continue;
    for (int ai : m.rings_[r]) m.atoms_[static_cast<size_t>(ai)].aromatic = true;
    for (int bi : m.ring_bonds_[r]) m.bonds_[static_cast<size_t>(bi)].order = BondOrder::Aromatic;
  }

  return m;
}

inline Molecule Molecule::reordered(const std::vector<int>& new_order) const {
  MoleculeBuilder b;
  std::vector<int> pos(atoms_.size());
  for (size_t k = 0; k < new_order.size(); ++k) pos[static_cast<size_t>(new_order[k])] = static_cast<int>(k);
  for (int old : new_order) {
    const Atom& a = atoms_[static_cast<size_t>(old)];
    MoleculeBuilder::AtomSpec spec;
    spec.atom = a;
    spec.bracket = true;  // freeze H counts; graph is already resolved
    spec.declared_h = a.implicit_h;
    spec.input_aromatic = a.aromatic;
    b.add_atom(std::move(spec));
  }
  for (const Bond& bd : bonds_) {
    MoleculeBuilder::BondSpec bs;
    bs.a = pos[static_cast<size_t>(bd.a)];
    bs.b = pos[static_cast<size_t>(bd.b)];
    bs.order = bd.order;
    bs.order_explicit = true;
    bs.direction = bd.direction;
    b.add_bond(bs);
  }
  Molecule m = b.finalize();
  m.set_name(name_);
  return m;
}

}  // namespace screenlab

#endif  // SCREENLAB_MOLECULE_HPP
