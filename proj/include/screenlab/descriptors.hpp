// Per-molecule numeric profile: MW, LP (Crippen), TPSA (Ertl), H-bond
// donor/acceptor counts, ring and group counts, structural alerts.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "screenlab/data_tables.hpp"
#include "screenlab/elements.hpp"
#include "screenlab/error.hpp"
#include "screenlab/molecule.hpp"
#include "screenlab/pattern.hpp"

namespace screenlab {

struct DescriptorSet {
  double mw = 0.0;
  double lp = 0.0;
  double tpsa = 0.0;
  int hbd = 0;
  int hba = 0;
  int aromatic_rings = 0;
  int carboxylic_acids = 0;
  int rotatable_bonds = 0;
  int alerts = 0;
  // One entry per atom that fell outside a contribution table. The affected
  // descriptor treats the atom as zero; everything else is still computed.
  std::vector<std::string> warnings;
};

namespace detail {

struct AtomEnv {
  int h = 0;           // attached hydrogens, implicit + explicit
  int narom = 0;       // aromatic bonds to heavy neighbors
  int nsingle = 0;     // single bonds to heavy neighbors
  int ndouble = 0;
  int ntriple = 0;
  std::vector<int> single_nb;   // heavy neighbors across single bonds
  std::vector<int> double_nb;   // heavy neighbors across double bonds
  std::vector<int> arom_nb;     // heavy neighbors across aromatic bonds
  std::vector<int> heavy_nb;    // all heavy neighbors
};

inline AtomEnv atom_env(const Molecule& m, int i) {
  AtomEnv e;
  e.h = m.atom(i).implicit_h;
  for (int bi : m.bonds_of(i)) {
    const Bond& b = m.bond(bi);
    int j = b.other(i);
    if (m.atom(j).element == elem::H) {
      ++e.h;
      continue;
    }
    e.heavy_nb.push_back(j);
    switch (b.order) {
      case BondOrder::Single:   ++e.nsingle; e.single_nb.push_back(j); break;
      case BondOrder::Double:   ++e.ndouble; e.double_nb.push_back(j); break;
      case BondOrder::Triple:   ++e.ntriple; break;
      case BondOrder::Aromatic: ++e.narom;   e.arom_nb.push_back(j);   break;
    }
  }
  return e;
}

inline bool is_hetero(const Atom& a) {
  return a.element != elem::C && a.element != elem::H;
}

// N,O,P,S,halogen; boron is handled separately (C27) and aromatic
// heteroatoms count as aromatic attachments instead.
inline bool crippen_hetero(const Atom& a) {
  switch (a.element) {
    case elem::N:
    case elem::O:
    case elem::P:
    case elem::S:
    case elem::F:
    case elem::Cl:
    case elem::Br:
    case elem::I:
      return !a.aromatic;
    default:
      return false;
  }
}

// Aliphatic carbon with a double bond to a doubly-bonded or triply-bonded
// partner, i.e. part of a cumulated or alkyne system.
inline bool sp_carbon(const Molecule& m, int i, const AtomEnv& e) {
  return m.atom(i).element == elem::C &&
         (e.ntriple > 0 || e.ndouble >= 2);
}

inline std::string crippen_carbon_type(const Molecule& m, int i,
                                       const AtomEnv& e) {
  const Atom& a = m.atom(i);
  if (a.aromatic) {
    if (e.h >= 1) return "C18";
    if (e.ndouble > 0) return "C25";  // exocyclic =X
    if (e.narom >= 3) return "C19";   // fusion carbon
    for (int j : e.single_nb) {
      const Atom& nb = m.atom(j);
      if (nb.aromatic) return "C20";  // biaryl link
      switch (nb.element) {
        case elem::C: return "C21";
        case elem::N: return "C22";
        case elem::O: return "C23";
        case elem::S: return "C24";
        case elem::F: return "C14";
        case elem::Cl: return "C15";
        case elem::Br: return "C16";
        case elem::I: return "C17";
        default: return "C13";
      }
    }
    return "CS";
  }
  if (a.charge != 0) return "CS";
  if (e.ntriple > 0 || e.ndouble >= 2) return "C7";
  if (e.ndouble == 1) {
    int j = e.double_nb[0];
    const Atom& p = m.atom(j);
    if (p.element != elem::C) return "C5";
    if (p.aromatic) return "C26";  // C=c
    for (int k : e.single_nb)
      if (m.atom(k).aromatic) return "C26";  // a-C=C
    if (sp_carbon(m, j, atom_env(m, j))) return "C7";  // C=C=C end
    return "C6";
  }
  // sp3 from here; aliphatic heteroatom attachment outranks aromatic
  for (int j : e.heavy_nb)
    if (crippen_hetero(m.atom(j))) return e.h >= 2 ? "C3" : "C4";
  bool arom_nb = false;
  for (int j : e.heavy_nb)
    if (m.atom(j).aromatic) arom_nb = true;
  if (arom_nb) {
    if (e.h == 3) {
      for (int j : e.heavy_nb)
        if (m.atom(j).aromatic)
          return m.atom(j).element == elem::C ? "C8" : "C9";
    }
    if (e.h == 2) return "C10";
    if (e.h == 1) return "C11";
    return "C12";
  }
  for (int j : e.heavy_nb)
    if (m.atom(j).element == elem::B) return "C27";
  return e.h >= 2 ? "C1" : "C2";
}

inline std::string crippen_nitrogen_type(const Molecule& m, int i,
                                         const AtomEnv& e) {
  const Atom& a = m.atom(i);
  if (a.aromatic) {
    if (a.charge > 0) return "N12";
    if (a.charge == 0) return "N11";
    return "NS";
  }
  if (a.charge > 0) {
    if (e.h >= 1 && e.ndouble == 0 && e.ntriple == 0) return "N10";
    if (e.h == 0 && e.ndouble == 0 && e.ntriple == 0 && e.nsingle == 4)
      return "N13";
    return "N14";
  }
  if (a.charge < 0) return "N14";  // azide terminus, amide anion
  if (e.ntriple > 0) return "N9";
  if (e.ndouble >= 1) return e.h >= 1 ? "N5" : "N6";
  bool arom_nb = false;
  for (int j : e.heavy_nb)
    if (m.atom(j).aromatic) arom_nb = true;
  if (e.h >= 2) return arom_nb ? "N3" : "N1";
  if (e.h == 1) return arom_nb ? "N4" : "N2";
  return arom_nb ? "N8" : "N7";
}

inline std::string crippen_oxygen_type(const Molecule& m, int i,
                                       const AtomEnv& e) {
  const Atom& a = m.atom(i);
  if (a.aromatic) return "O1";
  if (a.charge < 0) {
    for (int j : e.heavy_nb) {
      const Atom& nb = m.atom(j);
      if (nb.element == elem::C) {
        AtomEnv ne = atom_env(m, j);
        for (int k : ne.double_nb)
          if (m.atom(k).element == elem::O) return "O12";  // carboxylate
      }
      if (nb.element == elem::N) return "O5";
      if (nb.element == elem::S) return "O6";
      if (nb.element == elem::P) return "O7";
    }
    return "OS";
  }
  if (a.charge > 0) return "OS";
  if (e.h >= 1) return "O2";
  if (e.ndouble >= 1) {
    int j = e.double_nb[0];
    const Atom& p = m.atom(j);
    if (p.element == elem::C && p.aromatic) return "O8";
    if (p.element == elem::N || p.element == elem::O) return "O5";
    if (p.element == elem::S) return "O6";
    if (p.element == elem::P || p.element == elem::B) return "O7";
    if (p.element == elem::C) {
      AtomEnv pe = atom_env(m, j);
      bool arom = false, het = false;
      for (int k : pe.heavy_nb) {
        if (k == i) continue;
        if (m.atom(k).aromatic) arom = true;
        else if (is_hetero(m.atom(k))) het = true;
      }
      if (arom) return "O10";
      if (het) return "O11";
      return "O9";
    }
    return "OS";
  }
  for (int j : e.heavy_nb)
    if (m.atom(j).aromatic) return "O4";
  return "O3";
}

// Hydrogen contribution class, keyed by the heavy atom it sits on.
inline std::string crippen_hydrogen_type(const Molecule& m, int parent) {
  const Atom& a = m.atom(parent);
  if (a.element == elem::C || a.element == elem::H) return "H1";
  if (a.element == elem::N) return "H3";
  if (a.element == elem::O) {
    AtomEnv e = atom_env(m, parent);
    for (int j : e.heavy_nb) {
      const Atom& nb = m.atom(j);
      if (nb.element == elem::N) return "H3";  // hydroxylamine, N-oxide acid
      if (nb.element == elem::O || nb.element == elem::S) return "H4";
    }
    for (int j : e.heavy_nb) {
      if (m.atom(j).element != elem::C) continue;
      AtomEnv ne = atom_env(m, j);
      for (int k : ne.double_nb) {
        uint8_t z = m.atom(k).element;
        if (z == elem::C || z == elem::N || z == elem::O || z == elem::S)
          return "H4";  // acid, enol
      }
    }
    return "H2";  // alcohol, phenol, water
  }
  return "HS";
}

inline std::string crippen_type(const Molecule& m, int i, const AtomEnv& e) {
  const Atom& a = m.atom(i);
  switch (a.element) {
    case elem::C: return crippen_carbon_type(m, i, e);
    case elem::N: return crippen_nitrogen_type(m, i, e);
    case elem::O: return crippen_oxygen_type(m, i, e);
    case elem::S:
      if (a.aromatic) return "S3";
      return a.charge != 0 ? "S2" : "S1";
    case elem::P: return "P";
    case elem::F: return a.charge < 0 ? "Hal" : "F";
    case elem::Cl: return a.charge < 0 ? "Hal" : "Cl";
    case elem::Br: return a.charge < 0 ? "Hal" : "Br";
    case elem::I: return a.charge < 0 ? "Hal" : "I";
    case elem::H:
      // explicit H atom, typed by the heavy atom it sits on
      for (int bi : m.bonds_of(i)) {
        int j = m.bond(bi).other(i);
        if (m.atom(j).element != elem::H) return crippen_hydrogen_type(m, j);
      }
      return "H1";
    default: return {};  // unparameterized (B)
  }
}

inline bool in_three_ring(const Molecule& m, int i) {
  for (const auto& ring : m.rings())
    if (ring.size() == 3 &&
        std::find(ring.begin(), ring.end(), i) != ring.end())
      return true;
  return false;
}

// Environment key for the polar-fragment table; see the key legend in the
// tpsa data table.
inline std::string tpsa_key(const Molecule& m, int i, const AtomEnv& e,
                            bool r3) {
  const Atom& a = m.atom(i);
  std::string key;
  char c = a.element == elem::N ? 'N' : 'O';
  key += a.aromatic ? static_cast<char>(c + 32) : c;
  if (e.h > 0) {
    key += 'H';
    if (e.h > 1) key += static_cast<char>('0' + e.h);
  }
  if (a.charge == 1) key += 'p';
  else if (a.charge == -1) key += 'm';
  else if (a.charge != 0) return {};
  auto part = [&](char tag, int n) {
    if (n == 0) return;
    key += '_';
    key += tag;
    key += static_cast<char>('0' + n);
  };
  part('a', e.narom);
  part('s', e.nsingle);
  part('d', e.ndouble);
  part('t', e.ntriple);
  if (r3) key += "_r3";
  return key;
}

inline const std::vector<Pattern>& acid_patterns() {
  static const std::vector<Pattern> pats = {
      parse_pattern("C(=O)[OH]"),
      parse_pattern("C(=O)[O-]"),
  };
  return pats;
}

inline const std::vector<std::pair<std::string, Pattern>>& alert_patterns() {
  static const std::vector<std::pair<std::string, Pattern>> pats = [] {
    std::vector<std::pair<std::string, Pattern>> out;
    for (const auto& [name, expr] : tables::alerts())
      out.emplace_back(name, parse_pattern(expr));
    return out;
  }();
  return pats;
}

inline bool amide_cn(const Molecule& m, int c, int n) {
  if (m.atom(c).element != elem::C || m.atom(n).element != elem::N)
    return false;
  for (int bi : m.bonds_of(c)) {
    const Bond& b = m.bond(bi);
    if (b.order == BondOrder::Double && m.atom(b.other(c)).element == elem::O)
      return true;
  }
  return false;
}

}  // namespace detail

inline int count_rotatable_bonds(const Molecule& m) {
  auto heavy_degree = [&](int i) {
    int d = 0;
    for (int bi : m.bonds_of(i))
      if (m.atom(m.bond(bi).other(i)).element != elem::H) ++d;
    return d;
  };
  int n = 0;
  for (int bi = 0; bi < m.bond_count(); ++bi) {
    const Bond& b = m.bond(bi);
    if (b.order != BondOrder::Single || m.bond_in_ring(bi)) continue;
    if (m.atom(b.a).element == elem::H || m.atom(b.b).element == elem::H)
      continue;
    if (heavy_degree(b.a) < 2 || heavy_degree(b.b) < 2) continue;
    if (detail::amide_cn(m, b.a, b.b) || detail::amide_cn(m, b.b, b.a))
      continue;
    ++n;
  }
  return n;
}

inline int count_aromatic_rings(const Molecule& m) {
  int n = 0;
  for (const auto& rb : m.ring_bonds()) {
    bool all = true;
    for (int bi : rb)
      if (m.bond(bi).order != BondOrder::Aromatic) all = false;
    if (all) ++n;
  }
  return n;
}

inline DescriptorSet compute_descriptors(const Molecule& m) {
  DescriptorSet d;
  const auto& weights = tables::atomic_weights();
  const auto& lp_table = tables::crippen();
  const auto& tpsa_table = tables::tpsa();

  for (int i = 0; i < m.atom_count(); ++i) {
    const Atom& a = m.atom(i);
    auto wit = weights.find(std::string(element_symbol(a.element)));
    if (wit != weights.end())
      d.mw += wit->second + a.implicit_h * weights.at("H");

    detail::AtomEnv env = detail::atom_env(m, i);

    std::string type = detail::crippen_type(m, i, env);
    auto cit = type.empty() ? lp_table.end() : lp_table.find(type);
    if (cit == lp_table.end()) {
      d.warnings.push_back("atom " + std::to_string(i) + " (" +
                           std::string(element_symbol(a.element)) +
                           ") outside LP table");
    } else {
      d.lp += cit->second;
      if (a.implicit_h > 0 && a.element != elem::H)
        d.lp +=
            a.implicit_h * lp_table.at(detail::crippen_hydrogen_type(m, i));
    }

    if (a.element == elem::N || a.element == elem::O) {
      bool r3 = detail::in_three_ring(m, i);
      double v = 0.0;
      bool found = false;
      if (r3) {
        auto it = tpsa_table.find(detail::tpsa_key(m, i, env, true));
        if (it != tpsa_table.end()) { v = it->second; found = true; }
      }
      if (!found) {
        auto it = tpsa_table.find(detail::tpsa_key(m, i, env, false));
        if (it != tpsa_table.end()) { v = it->second; found = true; }
      }
      if (found) {
        d.tpsa += v;
      } else {
        d.warnings.push_back("atom " + std::to_string(i) + " (" +
                             std::string(element_symbol(a.element)) +
                             ") outside TPSA table");
      }
      ++d.hba;
      if (env.h > 0) ++d.hbd;
    }
  }

  d.aromatic_rings = count_aromatic_rings(m);
  for (const auto& p : detail::acid_patterns())
    d.carboxylic_acids += count_matches(m, p);
  d.rotatable_bonds = count_rotatable_bonds(m);
  for (const auto& [name, p] : detail::alert_patterns())
    if (has_match(m, p)) ++d.alerts;
  return d;
}

inline double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double sample_sd(const std::vector<double>& xs) {
  double mu = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

inline double zscore(double value, const std::vector<double>& population) {
  if (population.size() < 2)
    throw DegeneratePopulation("population size " +
                               std::to_string(population.size()));
  double sd = sample_sd(population);
  if (sd == 0.0) throw DegeneratePopulation("zero variance");
  return (value - mean_of(population)) / sd;
}

}  // namespace screenlab
