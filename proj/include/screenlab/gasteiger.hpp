#pragma once

// Iterative partial equalization of orbital electronegativity
// (Gasteiger & Marsili, Tetrahedron 36 (1980) 3219).
//
// chi(q) = a + b q + c q^2 per atom; each iteration k moves charge across
// every bond in proportion to the electronegativity difference, scaled by
// the cation electronegativity of the less electronegative end and damped
// by 0.5^k. Implicit hydrogens participate as real nodes.

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "elements.hpp"
#include "error.hpp"
#include "molecule.hpp"

namespace screenlab {

struct ChargeAssignment {
  // graph atoms first, then implicit hydrogens grouped by parent
  std::vector<double> charges;
  // parent atom index for charges[atom_count + t]
  std::vector<int> h_parent;
  std::vector<double> iteration_max_change;
  int iterations_used = 0;
  bool converged = false;
};

namespace detail {

struct ChiPoly {
  double a, b, c;
  double operator()(double q) const { return a + b * q + c * q * q; }
  double cation() const { return a + b + c; }
};

inline constexpr ChiPoly kChiH{7.17, 6.24, -0.56};

// hydrogen's chi+ is replaced by 20.02 in the original parameterization
inline constexpr double kChiPlusH = 20.02;

inline ChiPoly gasteiger_poly(const Molecule& m, int i) {
  const Atom& a = m.atom(i);
  int doubles = 0, triples = 0;
  bool arom = false;
  for (int bi : m.bonds_of(i)) {
    switch (m.bond(bi).order) {
      case BondOrder::Double: ++doubles; break;
      case BondOrder::Triple: ++triples; break;
      case BondOrder::Aromatic: arom = true; break;
      default: break;
    }
  }
  bool sp = triples > 0 || doubles >= 2;
  bool sp2 = doubles > 0 || arom;
  switch (a.element) {
    case elem::H: return kChiH;
    case elem::C:
      if (sp) return {10.39, 9.45, 0.73};
      if (sp2) return {8.79, 9.32, 1.51};
      return {7.98, 9.18, 1.88};
    case elem::N:
      if (sp) return {15.68, 11.70, -0.27};
      if (sp2) return {12.87, 11.15, 0.85};
      return {11.54, 10.82, 1.36};
    case elem::O:
      if (sp2) return {17.07, 13.79, 0.47};
      return {14.18, 12.92, 1.39};
    case elem::F: return {14.66, 13.85, 2.31};
    case elem::Cl: return {11.00, 9.69, 1.35};
    case elem::Br: return {10.08, 8.47, 1.16};
    case elem::I: return {9.90, 7.96, 0.96};
    case elem::S: return {10.14, 9.13, 1.38};
    default:
      throw UnparameterizedElement(std::string(element_symbol(a.element)));
  }
}

}  // namespace detail

inline ChargeAssignment gasteiger_charges(const Molecule& m, int iterations = 8) {
  const int n = m.atom_count();
  std::vector<detail::ChiPoly> poly;
  std::vector<bool> is_h;
  std::vector<double> q;
  std::vector<std::pair<int, int>> edges;
  poly.reserve(n);
  for (int i = 0; i < n; ++i) {
    poly.push_back(detail::gasteiger_poly(m, i));
    is_h.push_back(m.atom(i).element == elem::H);
    q.push_back(static_cast<double>(m.atom(i).charge));
  }
  edges.reserve(m.bond_count() + m.total_implicit_h());
  for (const Bond& b : m.bonds()) edges.emplace_back(b.a, b.b);

  ChargeAssignment out;
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < m.atom(i).implicit_h; ++t) {
      out.h_parent.push_back(i);
      poly.push_back(detail::kChiH);
      is_h.push_back(true);
      q.push_back(0.0);
      edges.emplace_back(i, static_cast<int>(q.size()) - 1);
    }

  const std::size_t total = q.size();
  std::vector<double> chi(total), dq(total);
  double last_max = 0.0;
  for (int k = 1; k <= iterations; ++k) {
    double damp = std::pow(0.5, k);
    for (std::size_t i = 0; i < total; ++i) chi[i] = poly[i](q[i]);
    std::fill(dq.begin(), dq.end(), 0.0);
    for (auto [i, j] : edges) {
      int lo = chi[i] <= chi[j] ? i : j;
      double denom = is_h[lo] ? detail::kChiPlusH : poly[lo].cation();
      double t = (chi[j] - chi[i]) / denom * damp;
      dq[i] += t;
      dq[j] -= t;
    }
    last_max = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
      q[i] += dq[i];
      last_max = std::max(last_max, std::abs(dq[i]));
    }
    out.iteration_max_change.push_back(last_max);
  }
  out.charges = std::move(q);
  out.iterations_used = iterations;
  out.converged = last_max < 1e-4;
  return out;
}

}  // namespace screenlab
