//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_PATTERN_HPP
#define SCREENLAB_PATTERN_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "screenlab/error.hpp"
#include "screenlab/molecule.hpp"

namespace screenlab {

/// Substructure query atom. Written like a SMILES atom with two extensions:
/// `*` matches any atom, and bracket forms constrain exactly what they
/// spell out: `[N+]` requires charge +1, a bracket without a charge requires
/// charge 0, `[OH]` requires exactly one attached hydrogen, and a bracket
/// without an H count leaves hydrogens unconstrained.
struct PatternAtom {
  bool wildcard = false;
  uint8_t element = 0;
  bool aromatic = false;
  int8_t charge = 0;
  bool charge_specified = false;
  int8_t h_count = -1;  // -1 = unconstrained
};

/// Query bond: `~` matches any order; otherwise the order must match the
/// perceived bond order exactly. An unwritten bond is aromatic between two
/// aromatic query atoms and single otherwise.
struct PatternBond {
  int a = -1;
  int b = -1;
  bool any = false;
  BondOrder order = BondOrder::Single;

  int other(int i) const { return i == a ? b : a; }
};

class Pattern {
 public:
  Pattern(std::vector<PatternAtom> atoms, std::vector<PatternBond> bonds)
      : atoms_(std::move(atoms)), bonds_(std::move(bonds)), adj_(atoms_.size()) {
    for (size_t i = 0; i < bonds_.size(); ++i) {
      adj_[static_cast<size_t>(bonds_[i].a)].push_back(static_cast<int>(i));
      adj_[static_cast<size_t>(bonds_[i].b)].push_back(static_cast<int>(i));
    }
  }

  const std::vector<PatternAtom>& atoms() const { return atoms_; }
  const std::vector<PatternBond>& bonds() const { return bonds_; }
  const std::vector<int>& bonds_of(int i) const { return adj_[static_cast<size_t>(i)]; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }

 private:
  std::vector<PatternAtom> atoms_;
  std::vector<PatternBond> bonds_;
  std::vector<std::vector<int>> adj_;
};

namespace detail {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  Pattern run() {
    if (text_.empty()) throw SyntaxError("empty pattern", 0);
    while (pos_ < text_.size()) step();
    if (!branch_stack_.empty()) throw SyntaxError("unclosed branch", text_.size());
    if (!open_rings_.empty())
      throw SyntaxError("unclosed ring bond", text_.size());
    if (pending_ != PendingBond::None)
      throw SyntaxError("bond symbol with nothing to bond to", text_.size());
    if (atoms_.empty()) throw SyntaxError("no atoms in pattern", 0);
    if (atoms_.size() > 16) throw PatternTooLarge(atoms_.size());
    return Pattern(std::move(atoms_), std::move(bonds_));
  }

 private:
  enum class PendingBond { None, Single, Double, Triple, Aromatic, Any };

  void step() {
    char c = text_[pos_];
    switch (c) {
      case '(': {
        if (prev_ < 0) throw SyntaxError("branch with no preceding atom", pos_);
        branch_stack_.push_back(prev_);
        ++pos_;
        return;
      }
      case ')': {
        if (branch_stack_.empty()) throw SyntaxError("unmatched ')'", pos_);
        prev_ = branch_stack_.back();
        branch_stack_.pop_back();
        ++pos_;
        return;
      }
      case '-': set_pending(PendingBond::Single); return;
      case '=': set_pending(PendingBond::Double); return;
      case '#': set_pending(PendingBond::Triple); return;
      case ':': set_pending(PendingBond::Aromatic); return;
      case '~': set_pending(PendingBond::Any); return;
      case '.': throw SyntaxError("patterns must be connected", pos_);
      case '[': parse_bracket(); return;
      case '*': {
        PatternAtom a;
        a.wildcard = true;
        place_atom(a);
        ++pos_;
        return;
      }
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ring_closure(c - '0');
      ++pos_;
      return;
    }
    parse_element();
  }

  void set_pending(PendingBond b) {
    if (pending_ != PendingBond::None) throw SyntaxError("two bond symbols in a row", pos_);
    if (prev_ < 0) throw SyntaxError("bond symbol with no preceding atom", pos_);
    pending_ = b;
    ++pos_;
  }

  void parse_element() {
    size_t at = pos_;
    char c = text_[pos_];
    PatternAtom a;
    if (std::isupper(static_cast<unsigned char>(c))) {
      char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : 0;
      if (c == 'C' && next == 'l') {
        a.element = elem::Cl;
        pos_ += 2;
      } else if (c == 'B' && next == 'r') {
        a.element = elem::Br;
        pos_ += 2;
      } else {
        int z = element_from_symbol(std::string_view(&text_[pos_], 1));
        if (z == 0) throw SyntaxError(std::string("unknown element '") + c + "'", at);
        a.element = static_cast<uint8_t>(z);
        ++pos_;
      }
    } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' || c == 's') {
      switch (c) {
        case 'b': a.element = elem::B; break;
        case 'c': a.element = elem::C; break;
        case 'n': a.element = elem::N; break;
        case 'o': a.element = elem::O; break;
        case 'p': a.element = elem::P; break;
        case 's': a.element = elem::S; break;
      }
      a.aromatic = true;
      ++pos_;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
    place_atom(a);
  }

  void parse_bracket() {
    size_t at = pos_++;
    if (pos_ >= text_.size()) throw SyntaxError("unterminated bracket", at);
    char c = text_[pos_];
    PatternAtom a;
    a.charge_specified = true;  // brackets pin the charge, default 0
    if (std::isupper(static_cast<unsigned char>(c))) {
      char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : 0;
      if (c == 'C' && next == 'l') {
        a.element = elem::Cl;
        pos_ += 2;
      } else if (c == 'B' && next == 'r') {
        a.element = elem::Br;
        pos_ += 2;
      } else {
        int z = element_from_symbol(std::string_view(&text_[pos_], 1));
        if (z == 0) throw SyntaxError(std::string("unknown element '") + c + "'", pos_);
        a.element = static_cast<uint8_t>(z);
        ++pos_;
      }
    } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' || c == 's') {
      switch (c) {
        case 'b': a.element = elem::B; break;
        case 'c': a.element = elem::C; break;
        case 'n': a.element = elem::N; break;
        case 'o': a.element = elem::O; break;
        case 'p': a.element = elem::P; break;
        case 's': a.element = elem::S; break;
      }
      a.aromatic = true;
      ++pos_;
    } else {
      throw SyntaxError("expected element in bracket", pos_);
    }
    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      int h = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        h = text_[pos_] - '0';
        ++pos_;
      }
      a.h_count = static_cast<int8_t>(h);
    }
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      char sign = text_[pos_++];
      int mag = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        mag = text_[pos_] - '0';
        ++pos_;
      }
      a.charge = static_cast<int8_t>(sign == '+' ? mag : -mag);
    }
    if (pos_ >= text_.size() || text_[pos_] != ']') throw SyntaxError("expected ']'", pos_);
    ++pos_;
    place_atom(a);
  }

  void place_atom(PatternAtom a) {
    atoms_.push_back(a);
    int idx = static_cast<int>(atoms_.size()) - 1;
    if (prev_ >= 0) {
      add_bond(prev_, idx, pending_);
    } else if (pending_ != PendingBond::None) {
      throw SyntaxError("bond symbol with no preceding atom", pos_);
    }
    pending_ = PendingBond::None;
    prev_ = idx;
  }

  void add_bond(int x, int y, PendingBond p) {
    PatternBond b;
    b.a = x;
    b.b = y;
    switch (p) {
      case PendingBond::None:
        b.order = (!atoms_[static_cast<size_t>(x)].wildcard && atoms_[static_cast<size_t>(x)].aromatic &&
                   !atoms_[static_cast<size_t>(y)].wildcard && atoms_[static_cast<size_t>(y)].aromatic)
                      ? BondOrder::Aromatic
                      : BondOrder::Single;
        break;
      case PendingBond::Single: b.order = BondOrder::Single; break;
      case PendingBond::Double: b.order = BondOrder::Double; break;
      case PendingBond::Triple: b.order = BondOrder::Triple; break;
      case PendingBond::Aromatic: b.order = BondOrder::Aromatic; break;
      case PendingBond::Any: b.any = true; break;
    }
    bonds_.push_back(b);
  }

  void ring_closure(int num) {
    if (prev_ < 0) throw SyntaxError("ring closure with no preceding atom", pos_);
    auto it = open_rings_.find(num);
    if (it == open_rings_.end()) {
      open_rings_[num] = {prev_, pending_};
      pending_ = PendingBond::None;
      return;
    }
    auto [atom, opened] = it->second;
    open_rings_.erase(it);
    if (atom == prev_) throw SyntaxError("ring closure joins an atom to itself", pos_);
    PendingBond use = opened != PendingBond::None ? opened : pending_;
    pending_ = PendingBond::None;
    add_bond(atom, prev_, use);
  }

  std::string_view text_;
  size_t pos_ = 0;
  std::vector<PatternAtom> atoms_;
  std::vector<PatternBond> bonds_;
  int prev_ = -1;
  PendingBond pending_ = PendingBond::None;
  std::map<int, std::pair<int, PendingBond>> open_rings_;
  std::vector<int> branch_stack_;
};

inline int attached_h(const Molecule& m, int i) {
  int h = m.atom(i).implicit_h;
  for (int bi : m.bonds_of(i))
    if (m.atom(m.bond(bi).other(i)).element == elem::H) ++h;
  return h;
}

inline bool atom_matches(const PatternAtom& p, const Molecule& m, int i) {
  const Atom& a = m.atom(i);
  if (!p.wildcard) {
    if (a.element != p.element) return false;
    if (a.aromatic != p.aromatic) return false;
    if (p.charge_specified && a.charge != p.charge) return false;
  }
  if (p.h_count >= 0 && attached_h(m, i) != p.h_count) return false;
  return true;
}

inline bool bond_matches(const PatternBond& p, const Bond& b) {
  return p.any || p.order == b.order;
}

// Pattern self-isomorphisms under exact constraint equality. Small patterns,
// plain backtracking.
inline std::vector<std::vector<int>> pattern_automorphisms(const Pattern& p) {
  const int n = p.atom_count();
  auto atom_eq = [&](const PatternAtom& x, const PatternAtom& y) {
    return x.wildcard == y.wildcard && x.element == y.element && x.aromatic == y.aromatic &&
           x.charge == y.charge && x.charge_specified == y.charge_specified &&
           x.h_count == y.h_count;
  };
  std::vector<std::vector<int>> autos;
  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      autos.push_back(map);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      if (!atom_eq(p.atoms()[static_cast<size_t>(k)], p.atoms()[static_cast<size_t>(c)])) continue;
      if (p.bonds_of(k).size() != p.bonds_of(c).size()) continue;
      bool ok = true;
      for (int bi : p.bonds_of(k)) {
        const PatternBond& pb = p.bonds()[static_cast<size_t>(bi)];
        int w = pb.other(k);
        if (map[static_cast<size_t>(w)] < 0) continue;
        bool found = false;
        for (int bj : p.bonds_of(c)) {
          const PatternBond& qb = p.bonds()[static_cast<size_t>(bj)];
          if (qb.other(c) == map[static_cast<size_t>(w)] && qb.any == pb.any &&
              (qb.any || qb.order == pb.order)) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(k)] = c;
      used[static_cast<size_t>(c)] = true;
      rec(k + 1);
      map[static_cast<size_t>(k)] = -1;
      used[static_cast<size_t>(c)] = false;
    }
  };
  rec(0);
  return autos;
}

}  // namespace detail

/// Parses the query language described on PatternAtom/PatternBond.
/// Throws SyntaxError on malformed input and PatternTooLarge above 16 atoms.
inline Pattern parse_pattern(std::string_view text) {
  return detail::PatternParser(text).run();
}

/// Every embedding of p into m: injective on atoms, every pattern bond
/// present with a compatible order. Results are deduplicated up to pattern
/// automorphism and returned sorted; each entry maps pattern atom k to
/// result[k].
inline std::vector<std::vector<int>> match_substructure(const Molecule& m, const Pattern& p) {
  const int pn = p.atom_count();
  if (pn > 16) throw PatternTooLarge(static_cast<size_t>(pn));
  std::vector<std::vector<int>> found;
  if (m.atom_count() == 0) return found;

  // Visit order: each atom after the first touches an earlier one.
  std::vector<int> order, via_bond(static_cast<size_t>(pn), -1), pos_of(static_cast<size_t>(pn), -1);
  {
    std::vector<bool> seen(static_cast<size_t>(pn), false);
    order.push_back(0);
    seen[0] = true;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      for (int bi : p.bonds_of(v)) {
        int w = p.bonds()[static_cast<size_t>(bi)].other(v);
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          via_bond[static_cast<size_t>(w)] = bi;
          order.push_back(w);
        }
      }
    }
    if (static_cast<int>(order.size()) != pn)
      throw SyntaxError("patterns must be connected", 0);
    for (size_t k = 0; k < order.size(); ++k) pos_of[static_cast<size_t>(order[k])] = static_cast<int>(k);
  }

  std::vector<int> map(static_cast<size_t>(pn), -1);
  std::vector<bool> used(static_cast<size_t>(m.atom_count()), false);

  std::function<void(size_t)> extend = [&](size_t k) {
    if (k == order.size()) {
      found.push_back(map);
      return;
    }
    int q = order[k];
    auto try_atom = [&](int cand) {
      if (used[static_cast<size_t>(cand)]) return;
      if (!detail::atom_matches(p.atoms()[static_cast<size_t>(q)], m, cand)) return;
      // all pattern bonds from q into the mapped part must exist and match
      for (int bi : p.bonds_of(q)) {
        const PatternBond& pb = p.bonds()[static_cast<size_t>(bi)];
        int w = pb.other(q);
        if (map[static_cast<size_t>(w)] < 0) continue;
        int mb = m.find_bond(cand, map[static_cast<size_t>(w)]);
        if (mb < 0 || !detail::bond_matches(pb, m.bond(mb))) return;
      }
      map[static_cast<size_t>(q)] = cand;
      used[static_cast<size_t>(cand)] = true;
      extend(k + 1);
      map[static_cast<size_t>(q)] = -1;
      used[static_cast<size_t>(cand)] = false;
    };
    if (k == 0) {
      for (int i = 0; i < m.atom_count(); ++i) try_atom(i);
    } else {
      int anchor = map[static_cast<size_t>(p.bonds()[static_cast<size_t>(via_bond[static_cast<size_t>(q)])].other(q))];
      for (int bi : m.bonds_of(anchor)) try_atom(m.bond(bi).other(anchor));
    }
  };
  extend(0);

  if (found.empty()) return found;
  auto autos = detail::pattern_automorphisms(p);
  std::set<std::vector<int>> canon;
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<size_t>(pn));
  for (const auto& f : found) {
    std::vector<int> best;
    for (const auto& sigma : autos) {
      for (int i = 0; i < pn; ++i) image[static_cast<size_t>(i)] = f[static_cast<size_t>(sigma[static_cast<size_t>(i)])];
      if (best.empty() || image < best) best = image;
    }
    if (canon.insert(best).second) out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of automorphism-distinct embeddings.
inline int count_matches(const Molecule& m, const Pattern& p) {
  return static_cast<int>(match_substructure(m, p).size());
}

inline bool has_match(const Molecule& m, const Pattern& p) {
  return !match_substructure(m, p).empty();
}

}  // namespace screenlab

#endif  // SCREENLAB_PATTERN_HPP
