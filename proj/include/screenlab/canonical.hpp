//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_CANONICAL_HPP
#define SCREENLAB_CANONICAL_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "screenlab/molecule.hpp"

namespace screenlab {

namespace detail {

inline int bond_code(const Bond& b) {
  return b.order == BondOrder::Aromatic ? 4 : static_cast<int>(b.order);
}

}  // namespace detail

/// Canonical atom ranks, 0..n-1, each unique. Iterative neighborhood
/// refinement from an invariant of (element, charge, degree, implicit H,
/// isotope, aromaticity, ring membership); remaining ties broken by lowest
/// atom index followed by re-refinement. Stereo annotations are ignored.
inline std::vector<int> canonical_ranks(const Molecule& m) {
  const int n = m.atom_count();
  std::vector<int> rank(static_cast<size_t>(n), 0);
  if (n <= 1) return rank;

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  {
    auto key = [&](int i) {
      const Atom& a = m.atom(i);
      return std::array<int, 7>{a.element,
                                a.charge,
                                m.degree(i),
                                a.implicit_h,
                                a.isotope,
                                a.aromatic ? 1 : 0,
                                m.atom_in_ring(i) ? 1 : 0};
    };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
    int r = 0;
    rank[static_cast<size_t>(order[0])] = 0;
    for (int k = 1; k < n; ++k) {
      if (key(order[static_cast<size_t>(k)]) != key(order[static_cast<size_t>(k - 1)])) ++r;
      rank[static_cast<size_t>(order[k])] = r;
    }
  }

  auto count_classes = [&]() {
    int mx = -1;
    for (int r : rank) mx = std::max(mx, r);
    return mx + 1;
  };

  std::vector<std::vector<long>> keys(static_cast<size_t>(n));
  auto refine = [&]() {
    int classes = count_classes();
    for (;;) {
      for (int i = 0; i < n; ++i) {
        auto& k = keys[static_cast<size_t>(i)];
        k.clear();
        k.push_back(rank[static_cast<size_t>(i)]);
        std::vector<long> terms;
        for (int bi : m.bonds_of(i)) {
          const Bond& b = m.bond(bi);
          terms.push_back(static_cast<long>(rank[static_cast<size_t>(b.other(i))]) * 8 +
                          detail::bond_code(b));
        }
        std::sort(terms.begin(), terms.end());
        k.insert(k.end(), terms.begin(), terms.end());
      }
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return keys[static_cast<size_t>(x)] < keys[static_cast<size_t>(y)];
      });
      int r = 0;
      std::vector<int> next(static_cast<size_t>(n));
      next[static_cast<size_t>(order[0])] = 0;
      for (int k = 1; k < n; ++k) {
        if (keys[static_cast<size_t>(order[k])] != keys[static_cast<size_t>(order[k - 1])]) ++r;
        next[static_cast<size_t>(order[k])] = r;
      }
      rank = std::move(next);
      int now = r + 1;
      if (now == classes) break;
      classes = now;
    }
    return classes;
  };

  int classes = refine();
  while (classes < n) {
    // Lowest-ranked tied class, lowest atom index inside it, gets promoted.
    int best_rank = n, chosen = -1;
    std::vector<int> size(static_cast<size_t>(classes), 0);
    for (int r : rank) ++size[static_cast<size_t>(r)];
    for (int i = 0; i < n; ++i) {
      int r = rank[static_cast<size_t>(i)];
      if (size[static_cast<size_t>(r)] > 1 && (r < best_rank || (r == best_rank && i < chosen))) {
        best_rank = r;
        chosen = i;
      }
    }
    for (int i = 0; i < n; ++i)
      rank[static_cast<size_t>(i)] =
          rank[static_cast<size_t>(i)] * 2 + (i == chosen ? 0 : 1);
    classes = refine();
  }
  return rank;
}

namespace detail {

// Hydrogen count a bare (unbracketed) organic-subset atom would receive when
// this molecule's output is parsed back, or -1 when no bare spelling works.
inline int simulated_bare_h(const Molecule& m, int i) {
  const Atom& a = m.atom(i);
  int arom = 0, vexp_non = 0;
  bool exo_double = false;
  for (int bi : m.bonds_of(i)) {
    const Bond& b = m.bond(bi);
    if (b.order == BondOrder::Aromatic) {
      ++arom;
    } else {
      vexp_non += static_cast<int>(b.order);
      if (b.order == BondOrder::Double) exo_double = true;
    }
  }
  int vexp;
  if (!a.aromatic) {
    vexp = vexp_non;
  } else {
    bool ring_double;  // whether Kekule assignment gives this atom a double
    switch (a.element) {
      case elem::C:
        ring_double = !exo_double;
        break;
      case elem::N:
      case elem::P:
        ring_double = !exo_double && m.degree(i) < 3;
        break;
      case elem::O:
      case elem::S:
        ring_double = false;
        break;
      default:
        return -1;  // aromatic boron has no deterministic bare reading
    }
    vexp = arom + (ring_double ? 1 : 0) + vexp_non;
  }
  int target = allowed_valences(a.element, 0).smallest_at_least(vexp);
  return target < 0 ? -1 : target - vexp;
}

inline bool needs_bracket(const Molecule& m, int i) {
  const Atom& a = m.atom(i);
  if (!organic_subset(a.element)) return true;
  if (a.charge != 0 || a.isotope != 0) return true;
  return simulated_bare_h(m, i) != a.implicit_h;
}

inline std::string atom_token(const Molecule& m, int i) {
  const Atom& a = m.atom(i);
  std::string sym(element_symbol(a.element));
  if (a.aromatic)
    for (char& c : sym) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (!needs_bracket(m, i)) return sym;
  std::string out = "[";
  if (a.isotope != 0) out += std::to_string(a.isotope);
  out += sym;
  if (a.implicit_h == 1)
    out += "H";
  else if (a.implicit_h > 1)
    out += "H" + std::to_string(a.implicit_h);
  if (a.charge == 1)
    out += "+";
  else if (a.charge == -1)
    out += "-";
  else if (a.charge > 1)
    out += "+" + std::to_string(a.charge);
  else if (a.charge < -1)
    out += "-" + std::to_string(-a.charge);
  out += "]";
  return out;
}

inline std::string bond_token(const Molecule& m, const Bond& b) {
  switch (b.order) {
    case BondOrder::Aromatic:
      return "";
    case BondOrder::Single:
      // A plain single bond between two aromatic atoms would read back as
      // aromatic when cyclic; mark it always.
      if (m.atom(b.a).aromatic && m.atom(b.b).aromatic) return "-";
      return "";
    case BondOrder::Double:
      return "=";
    case BondOrder::Triple:
      return "#";
  }
  return "";
}

class FragmentWriter {
 public:
  FragmentWriter(const Molecule& m, const std::vector<int>& rank) : m_(m), rank_(rank) {}

  std::string write(int root) {
    const int n = m_.atom_count();
    visit_.assign(static_cast<size_t>(n), -1);
    tree_children_.assign(static_cast<size_t>(n), {});
    open_at_.assign(static_cast<size_t>(n), {});
    close_at_.assign(static_cast<size_t>(n), {});
    digit_of_.clear();
    free_digits_.clear();
    next_digit_ = 1;
    out_.clear();

    // Pass 1: DFS spanning tree, neighbors in canonical-rank order.
    int clock = 0;
    struct Frame {
      int atom;
      std::vector<int> nbr_bonds;
      size_t next = 0;
    };
    auto make_frame = [&](int v) {
      Frame f;
      f.atom = v;
      f.nbr_bonds.assign(m_.bonds_of(v).begin(), m_.bonds_of(v).end());
      std::sort(f.nbr_bonds.begin(), f.nbr_bonds.end(), [&](int x, int y) {
        return rank_[static_cast<size_t>(m_.bond(x).other(v))] <
               rank_[static_cast<size_t>(m_.bond(y).other(v))];
      });
      return f;
    };
    std::vector<Frame> stack;
    visit_[static_cast<size_t>(root)] = clock++;
    stack.push_back(make_frame(root));
    std::vector<char> edge_used(static_cast<size_t>(m_.bond_count()), 0);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next >= f.nbr_bonds.size()) {
        stack.pop_back();
        continue;
      }
      int bi = f.nbr_bonds[f.next++];
      if (edge_used[static_cast<size_t>(bi)]) continue;
      edge_used[static_cast<size_t>(bi)] = 1;
      int w = m_.bond(bi).other(f.atom);
      if (visit_[static_cast<size_t>(w)] < 0) {
        tree_children_[static_cast<size_t>(f.atom)].push_back(bi);
        visit_[static_cast<size_t>(w)] = clock++;
        stack.push_back(make_frame(w));
      } else {
        // Back edge: opens at the earlier-visited endpoint.
        open_at_[static_cast<size_t>(w)].push_back(bi);
        close_at_[static_cast<size_t>(f.atom)].push_back(bi);
      }
    }
    for (int i = 0; i < n; ++i) {
      auto by_far_visit = [&](int x, int y) {
        auto late_end = [&](int b) {
          const Bond& bd = m_.bond(b);
          return std::max(visit_[static_cast<size_t>(bd.a)], visit_[static_cast<size_t>(bd.b)]);
        };
        return late_end(x) < late_end(y);
      };
      auto by_near_visit = [&](int x, int y) {
        auto early_end = [&](int b) {
          const Bond& bd = m_.bond(b);
          return std::min(visit_[static_cast<size_t>(bd.a)], visit_[static_cast<size_t>(bd.b)]);
        };
        return early_end(x) < early_end(y);
      };
      std::sort(open_at_[static_cast<size_t>(i)].begin(), open_at_[static_cast<size_t>(i)].end(), by_far_visit);
      std::sort(close_at_[static_cast<size_t>(i)].begin(), close_at_[static_cast<size_t>(i)].end(), by_near_visit);
    }

    emit(root, -1);
    return std::move(out_);
  }

 private:
  void emit(int u, int parent_bond) {
    if (parent_bond >= 0) out_ += bond_token(m_, m_.bond(parent_bond));
    out_ += atom_token(m_, u);
    for (int bi : open_at_[static_cast<size_t>(u)]) {
      int d = alloc_digit();
      digit_of_[bi] = d;
      out_ += bond_token(m_, m_.bond(bi));
      out_ += digit_str(d);
    }
    for (int bi : close_at_[static_cast<size_t>(u)]) {
      int d = digit_of_.at(bi);
      out_ += digit_str(d);
      release_digit(d);
    }
    const auto& kids = tree_children_[static_cast<size_t>(u)];
    for (size_t k = 0; k < kids.size(); ++k) {
      int bi = kids[k];
      int w = m_.bond(bi).other(u);
      bool last = k + 1 == kids.size();
      if (!last) out_ += "(";
      emit(w, bi);
      if (!last) out_ += ")";
    }
  }

  int alloc_digit() {
    if (!free_digits_.empty()) {
      auto it = std::min_element(free_digits_.begin(), free_digits_.end());
      int d = *it;
      free_digits_.erase(it);
      return d;
    }
    return next_digit_++;
  }
  void release_digit(int d) { free_digits_.push_back(d); }
  static std::string digit_str(int d) {
    return d < 10 ? std::to_string(d) : "%" + std::to_string(d);
  }

  const Molecule& m_;
  const std::vector<int>& rank_;
  std::string out_;
  std::vector<int> visit_;
  std::vector<std::vector<int>> tree_children_, open_at_, close_at_;
  std::map<int, int> digit_of_;
  std::vector<int> free_digits_;
  int next_digit_ = 1;
};

}  // namespace detail

/// Deterministic canonical SMILES. Graph-isomorphic molecules (same
/// elements, charges, aromaticity, bond orders) produce byte-identical
/// output; stereo annotations are dropped. Disconnected components are
/// written sorted by their fragment string.
inline std::string canonical_smiles(const Molecule& m) {
  if (m.atom_count() == 0) return "";
  std::vector<int> rank = canonical_ranks(m);
  auto [comp, ncomp] = connected_component_ids(m);
  std::vector<std::string> frags;
  frags.reserve(static_cast<size_t>(ncomp));
  detail::FragmentWriter writer(m, rank);
  for (int c = 0; c < ncomp; ++c) {
    int root = -1;
    for (int i = 0; i < m.atom_count(); ++i) {
      if (comp[static_cast<size_t>(i)] != c) continue;
      if (root < 0 || rank[static_cast<size_t>(i)] < rank[static_cast<size_t>(root)]) root = i;
    }
    frags.push_back(writer.write(root));
  }
  std::sort(frags.begin(), frags.end());
  std::string out;
  for (size_t i = 0; i < frags.size(); ++i) {
    if (i) out += ".";
    out += frags[i];
  }
  return out;
}

}  // namespace screenlab

#endif  // SCREENLAB_CANONICAL_HPP
