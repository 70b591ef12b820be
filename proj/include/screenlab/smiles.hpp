//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_SMILES_HPP
#define SCREENLAB_SMILES_HPP

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "screenlab/error.hpp"
#include "screenlab/molecule.hpp"

namespace screenlab {

namespace detail {

class SmilesParser {
 public:
  explicit SmilesParser(std::string_view text) : text_(text) {}

  Molecule run() {
    if (text_.empty()) throw SyntaxError("empty SMILES", 0);
    if (text_.size() > 1000)
      throw UnsupportedFeature("SMILES longer than 1000 characters", 1000);
    while (pos_ < text_.size()) step();
    if (!branch_stack_.empty())
      throw SyntaxError("unclosed branch", text_.size());
    if (!open_rings_.empty())
      throw SyntaxError("unclosed ring bond " + std::to_string(open_rings_.begin()->first),
                        open_rings_.begin()->second.pos);
    if (pending_.active)
      throw SyntaxError("bond symbol with nothing to bond to", pending_.pos);
    if (builder_.atom_count() == 0) throw SyntaxError("no atoms", 0);
    Molecule m = builder_.finalize();
    return maybe_suppress_h(m);
  }

 private:
  struct Pending {
    bool active = false;
    BondOrder order = BondOrder::Single;
    char dir = 0;
    size_t pos = 0;
  };
  struct RingSlot {
    int atom;
    Pending bond;
    size_t pos;
  };

  void step() {
    char c = text_[pos_];
    if (std::isspace(static_cast<unsigned char>(c)))
      throw SyntaxError("unexpected whitespace", pos_);
    switch (c) {
      case '(': {
        if (prev_ < 0) throw SyntaxError("branch with no preceding atom", pos_);
        if (pending_.active) throw SyntaxError("bond symbol before branch open", pos_);
        branch_stack_.push_back(prev_);
        ++pos_;
        return;
      }
      case ')': {
        if (branch_stack_.empty()) throw SyntaxError("unmatched ')'", pos_);
        if (pending_.active) throw SyntaxError("bond symbol before branch close", pos_);
        prev_ = branch_stack_.back();
        branch_stack_.pop_back();
        ++pos_;
        return;
      }
      case '.': {
        if (pending_.active) throw SyntaxError("bond symbol before '.'", pos_);
        prev_ = -1;
        ++pos_;
        return;
      }
      case '-': set_pending(BondOrder::Single, 0); return;
      case '=': set_pending(BondOrder::Double, 0); return;
      case '#': set_pending(BondOrder::Triple, 0); return;
      case ':': set_pending(BondOrder::Aromatic, 0); return;
      case '/': set_pending(BondOrder::Single, '/'); return;
      case '\\': set_pending(BondOrder::Single, '\\'); return;
      case '$': throw UnsupportedFeature("quadruple bond", pos_);
      case '*': throw UnsupportedFeature("wildcard atom", pos_);
      case '%': {
        size_t at = pos_;
        if (pos_ + 2 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])))
          throw SyntaxError("'%' needs two digits", at);
        int num = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
        pos_ += 3;
        ring_closure(num, at);
        return;
      }
      case '[': parse_bracket(); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t at = pos_++;
      ring_closure(c - '0', at);
      return;
    }
    parse_organic();
  }

  void set_pending(BondOrder o, char dir) {
    if (pending_.active) throw SyntaxError("two bond symbols in a row", pos_);
    if (prev_ < 0) throw SyntaxError("bond symbol with no preceding atom", pos_);
    pending_ = {true, o, dir, pos_};
    ++pos_;
  }

  void parse_organic() {
    size_t at = pos_;
    char c = text_[pos_];
    MoleculeBuilder::AtomSpec spec;
    int z = 0;
    bool aromatic = false;
    if (std::isupper(static_cast<unsigned char>(c))) {
      char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : 0;
      if (c == 'C' && next == 'l') {
        z = elem::Cl;
        pos_ += 2;
      } else if (c == 'B' && next == 'r') {
        z = elem::Br;
        pos_ += 2;
      } else {
        z = element_from_symbol(std::string_view(&text_[pos_], 1));
        if (z == 0 || z == elem::H || !organic_subset(z))
          throw UnsupportedFeature(std::string("atom '") + c + "' outside organic subset", at);
        ++pos_;
      }
    } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' || c == 's') {
      switch (c) {
        case 'b': z = elem::B; break;
        case 'c': z = elem::C; break;
        case 'n': z = elem::N; break;
        case 'o': z = elem::O; break;
        case 'p': z = elem::P; break;
        case 's': z = elem::S; break;
      }
      aromatic = true;
      ++pos_;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
    spec.atom.element = static_cast<uint8_t>(z);
    spec.bracket = false;
    spec.input_aromatic = aromatic;
    spec.atom.aromatic = aromatic;
    place_atom(std::move(spec), at);
  }

  void parse_bracket() {
    size_t at = pos_;
    ++pos_;  // '['
    MoleculeBuilder::AtomSpec spec;
    spec.bracket = true;

    int isotope = 0;
    bool has_isotope = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      has_isotope = true;
      isotope = isotope * 10 + (text_[pos_] - '0');
      if (isotope > 999) throw SyntaxError("isotope out of range", pos_);
      ++pos_;
    }
    if (has_isotope) spec.atom.isotope = static_cast<uint16_t>(isotope);

    if (pos_ >= text_.size()) throw SyntaxError("unterminated bracket atom", at);
    char c = text_[pos_];
    int z = 0;
    bool aromatic = false;
    if (std::isupper(static_cast<unsigned char>(c))) {
      char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : 0;
      if (std::islower(static_cast<unsigned char>(next))) {
        std::string two{c, next};
        z = element_from_symbol(two);
        if (z == 0) throw UnsupportedFeature("element '" + two + "'", pos_);
        pos_ += 2;
      } else {
        z = element_from_symbol(std::string_view(&text_[pos_], 1));
        if (z == 0) throw UnsupportedFeature(std::string("element '") + c + "'", pos_);
        ++pos_;
      }
    } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' || c == 's') {
      char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : 0;
      if (std::islower(static_cast<unsigned char>(next)) && next != 'h')
        throw UnsupportedFeature(std::string("aromatic element '") + c + next + "'", pos_);
      switch (c) {
        case 'b': z = elem::B; break;
        case 'c': z = elem::C; break;
        case 'n': z = elem::N; break;
        case 'o': z = elem::O; break;
        case 'p': z = elem::P; break;
        case 's': z = elem::S; break;
      }
      aromatic = true;
      ++pos_;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "' in bracket", pos_);
    }
    spec.atom.element = static_cast<uint8_t>(z);
    spec.input_aromatic = aromatic;
    spec.atom.aromatic = aromatic;

    if (pos_ < text_.size() && text_[pos_] == '@') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '@') {
        spec.atom.stereo = "@@";
        pos_ += 2;
      } else {
        spec.atom.stereo = "@";
        ++pos_;
      }
      if (pos_ < text_.size() && std::isupper(static_cast<unsigned char>(text_[pos_])) &&
          text_[pos_] != 'H')
        throw UnsupportedFeature("named chirality class", pos_);
    }

    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      int h = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        h = text_[pos_] - '0';
        ++pos_;
      }
      spec.declared_h = static_cast<uint8_t>(h);
    }

    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      char sign = text_[pos_];
      ++pos_;
      int mag = 0;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          mag = mag * 10 + (text_[pos_] - '0');
          ++pos_;
        }
      } else {
        mag = 1;
        while (pos_ < text_.size() && text_[pos_] == sign) {
          ++mag;
          ++pos_;
        }
      }
      if (mag > 9) throw SyntaxError("charge out of range", pos_);
      spec.atom.charge = static_cast<int8_t>(sign == '+' ? mag : -mag);
    }

    if (pos_ < text_.size() && text_[pos_] == ':')
      throw UnsupportedFeature("atom class", pos_);
    if (pos_ >= text_.size() || text_[pos_] != ']')
      throw SyntaxError("expected ']'", pos_ < text_.size() ? pos_ : text_.size());
    ++pos_;
    place_atom(std::move(spec), at);
  }

  void place_atom(MoleculeBuilder::AtomSpec spec, size_t at) {
    int idx = builder_.add_atom(std::move(spec));
    if (prev_ >= 0) {
      MoleculeBuilder::BondSpec bs;
      bs.a = prev_;
      bs.b = idx;
      if (pending_.active) {
        bs.order = pending_.order;
        bs.order_explicit = true;
        bs.direction = pending_.dir;
      }
      builder_.add_bond(bs);
    } else if (pending_.active) {
      throw SyntaxError("bond symbol with no preceding atom", at);
    }
    pending_ = Pending{};
    prev_ = idx;
  }

  void ring_closure(int num, size_t at) {
    if (prev_ < 0) throw SyntaxError("ring closure with no preceding atom", at);
    auto it = open_rings_.find(num);
    if (it == open_rings_.end()) {
      open_rings_[num] = RingSlot{prev_, pending_, at};
      pending_ = Pending{};
      return;
    }
    RingSlot slot = it->second;
    open_rings_.erase(it);
    if (slot.atom == prev_) throw SyntaxError("ring closure joins an atom to itself", at);
    MoleculeBuilder::BondSpec bs;
    bs.a = slot.atom;
    bs.b = prev_;
    if (slot.bond.active && pending_.active) {
      if (slot.bond.order != pending_.order)
        throw SyntaxError("conflicting bond symbols on ring closure " + std::to_string(num), at);
    }
    const Pending& use = slot.bond.active ? slot.bond : pending_;
    if (use.active) {
      bs.order = use.order;
      bs.order_explicit = true;
      bs.direction = use.dir;
    }
    pending_ = Pending{};
    builder_.add_bond(bs);
  }

  // Bare explicit hydrogens ([H] with one single bond to a heavy atom and no
  // isotope/charge/stereo) fold into the neighbor's implicit count. Valences
  // were already validated with the bond present, so totals are unchanged.
  static Molecule maybe_suppress_h(const Molecule& m) {
    std::vector<bool> drop(static_cast<size_t>(m.atom_count()), false);
    std::vector<int> extra_h(static_cast<size_t>(m.atom_count()), 0);
    bool any = false;
    for (int i = 0; i < m.atom_count(); ++i) {
      const Atom& a = m.atom(i);
      if (a.element != elem::H || a.isotope != 0 || a.charge != 0 || !a.stereo.empty()) continue;
      if (a.implicit_h != 0 || m.degree(i) != 1) continue;
      const Bond& b = m.bond(m.bonds_of(i)[0]);
      if (b.kekule != 1 || b.direction != 0) continue;
      int nb = b.other(i);
      if (m.atom(nb).element == elem::H) continue;
      drop[static_cast<size_t>(i)] = true;
      ++extra_h[static_cast<size_t>(nb)];
      any = true;
    }
    if (!any) return m;

    MoleculeBuilder b;
    std::vector<int> remap(static_cast<size_t>(m.atom_count()), -1);
    for (int i = 0; i < m.atom_count(); ++i) {
      if (drop[static_cast<size_t>(i)]) continue;
      MoleculeBuilder::AtomSpec spec;
      spec.atom = m.atom(i);
      spec.bracket = true;
      spec.declared_h = static_cast<uint8_t>(m.atom(i).implicit_h + extra_h[static_cast<size_t>(i)]);
      spec.input_aromatic = m.atom(i).aromatic;
      remap[static_cast<size_t>(i)] = b.add_atom(std::move(spec));
    }
    for (const Bond& bd : m.bonds()) {
      if (drop[static_cast<size_t>(bd.a)] || drop[static_cast<size_t>(bd.b)]) continue;
      MoleculeBuilder::BondSpec bs;
      bs.a = remap[static_cast<size_t>(bd.a)];
      bs.b = remap[static_cast<size_t>(bd.b)];
      bs.order = bd.order;
      bs.order_explicit = true;
      bs.direction = bd.direction;
      b.add_bond(bs);
    }
    return b.finalize();
  }

  std::string_view text_;
  size_t pos_ = 0;
  MoleculeBuilder builder_;
  int prev_ = -1;
  Pending pending_;
  std::map<int, RingSlot> open_rings_;
  std::vector<int> branch_stack_;
};

}  // namespace detail

/// Parses one SMILES string into a finalized Molecule.
inline Molecule parse_smiles(std::string_view text) {
  return detail::SmilesParser(text).run();
}

struct SmiRecord {
  std::string smiles;
  std::string name;
  size_t line_no = 0;
};

/// Reads .smi lines: SMILES, whitespace, optional name. '#' comments and
/// blank lines are skipped. Does not parse the SMILES.
inline std::vector<SmiRecord> read_smi(std::istream& in) {
  std::vector<SmiRecord> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    size_t end = line.find_first_of(" \t", start);
    SmiRecord rec;
    rec.line_no = lineno;
    if (end == std::string::npos) {
      rec.smiles = line.substr(start);
    } else {
      rec.smiles = line.substr(start, end - start);
      size_t nstart = line.find_first_not_of(" \t", end);
      if (nstart != std::string::npos) {
        size_t nend = line.find_last_not_of(" \t");
        rec.name = line.substr(nstart, nend - nstart + 1);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<SmiRecord> read_smi_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_smi(in);
}

/// Parses a record and attaches its name.
inline Molecule parse_smi_record(const SmiRecord& rec) {
  Molecule m = parse_smiles(rec.smiles);
  m.set_name(rec.name.empty() ? rec.smiles : rec.name);
  return m;
}

}  // namespace screenlab

#endif  // SCREENLAB_SMILES_HPP
