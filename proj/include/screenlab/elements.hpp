//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_ELEMENTS_HPP
#define SCREENLAB_ELEMENTS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace screenlab {

// Atomic numbers of the supported element set (SMILES organic subset plus H).
namespace elem {
inline constexpr uint8_t H = 1;
inline constexpr uint8_t B = 5;
inline constexpr uint8_t C = 6;
inline constexpr uint8_t N = 7;
inline constexpr uint8_t O = 8;
inline constexpr uint8_t F = 9;
inline constexpr uint8_t P = 15;
inline constexpr uint8_t S = 16;
inline constexpr uint8_t Cl = 17;
inline constexpr uint8_t Br = 35;
inline constexpr uint8_t I = 53;
}  // namespace elem

inline bool element_supported(int z) {
  switch (z) {
    case elem::H:
    case elem::B:
    case elem::C:
    case elem::N:
    case elem::O:
    case elem::F:
    case elem::P:
    case elem::S:
    case elem::Cl:
    case elem::Br:
    case elem::I:
      return true;
    default:
      return false;
  }
}

inline std::string_view element_symbol(int z) {
  switch (z) {
    case elem::H: return "H";
    case elem::B: return "B";
    case elem::C: return "C";
    case elem::N: return "N";
    case elem::O: return "O";
    case elem::F: return "F";
    case elem::P: return "P";
    case elem::S: return "S";
    case elem::Cl: return "Cl";
    case elem::Br: return "Br";
    case elem::I: return "I";
    default: return "?";
  }
}

inline int element_from_symbol(std::string_view s) {
  if (s == "H") return elem::H;
  if (s == "B") return elem::B;
  if (s == "C") return elem::C;
  if (s == "N") return elem::N;
  if (s == "O") return elem::O;
  if (s == "F") return elem::F;
  if (s == "P") return elem::P;
  if (s == "S") return elem::S;
  if (s == "Cl") return elem::Cl;
  if (s == "Br") return elem::Br;
  if (s == "I") return elem::I;
  return 0;
}

// IUPAC 2021 conventional (average) atomic weights.
inline double average_atomic_weight(int z) {
  switch (z) {
    case elem::H: return 1.008;
    case elem::B: return 10.81;
    case elem::C: return 12.011;
    case elem::N: return 14.007;
    case elem::O: return 15.999;
    case elem::F: return 18.998403163;
    case elem::P: return 30.973761998;
    case elem::S: return 32.06;
    case elem::Cl: return 35.45;
    case elem::Br: return 79.904;
    case elem::I: return 126.90447;
    default: return 0.0;
  }
}

inline bool aromatic_capable(int z) {
  switch (z) {
    case elem::C:
    case elem::N:
    case elem::O:
    case elem::S:
    case elem::P:
    case elem::B:
      return true;
    default:
      return false;
  }
}

inline bool organic_subset(int z) {
  switch (z) {
    case elem::B:
    case elem::C:
    case elem::N:
    case elem::O:
    case elem::F:
    case elem::P:
    case elem::S:
    case elem::Cl:
    case elem::Br:
    case elem::I:
      return true;
    default:
      return false;
  }
}

// Allowed total valences (explicit bonds + implicit H) for an element at a
// given formal charge. Base table: B3, C4, N3, O2, F/Cl/Br/I 1, P{3,5},
// S{2,4,6}, H1. Charge shifts by one per unit charge: lone-pair elements gain
// capacity when positive and lose it when negative; C loses either way; B
// gains a bond when negative (borate) and loses one when positive.
struct ValenceSet {
  std::array<int8_t, 3> v{-1, -1, -1};
  int n = 0;
  void add(int x) {
    if (x >= 0 && n < 3) v[n++] = static_cast<int8_t>(x);
  }
  bool contains(int x) const {
    for (int i = 0; i < n; ++i)
      if (v[i] == x) return true;
    return false;
  }
  // Smallest allowed valence >= needed, or -1.
  int smallest_at_least(int needed) const {
    int best = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] >= needed && (best < 0 || v[i] < best)) best = v[i];
    return best;
  }
};

inline ValenceSet allowed_valences(int z, int charge) {
  ValenceSet out;
  auto shift_lone_pair = [&](std::initializer_list<int> base) {
    for (int v : base) out.add(v + charge);
  };
  switch (z) {
    case elem::H: shift_lone_pair({1}); break;
    case elem::B: out.add(3 - charge); break;  // borate gains a bond
    case elem::C: out.add(4 - (charge < 0 ? -charge : charge)); break;
    case elem::N: shift_lone_pair({3}); break;
    case elem::O: shift_lone_pair({2}); break;
    case elem::F:
    case elem::Cl:
    case elem::Br:
    case elem::I: shift_lone_pair({1}); break;
    case elem::P: shift_lone_pair({3, 5}); break;
    case elem::S: shift_lone_pair({2, 4, 6}); break;
    default: break;
  }
  return out;
}

}  // namespace screenlab

#endif  // SCREENLAB_ELEMENTS_HPP
