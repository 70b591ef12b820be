// Circular-environment fingerprints with FNV-1a hashing and Tanimoto
// similarity. Bit layout and hash are fixed so fingerprints are identical
// across platforms and runs.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "screenlab/elements.hpp"
#include "screenlab/error.hpp"
#include "screenlab/fnv.hpp"
#include "screenlab/molecule.hpp"

namespace screenlab {

struct Fingerprint {
  std::vector<uint64_t> words;
  int radius = 2;
  int width = 2048;
  int popcount = 0;

  bool test(int bit) const {
    return (words[static_cast<size_t>(bit) / 64] >>
            (static_cast<unsigned>(bit) % 64)) & 1u;
  }
  void set(int bit) {
    uint64_t& w = words[static_cast<size_t>(bit) / 64];
    uint64_t mask = uint64_t{1} << (static_cast<unsigned>(bit) % 64);
    if (!(w & mask)) {
      w |= mask;
      ++popcount;
    }
  }
  // Lowest byte first, two hex digits per byte.
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(words.size() * 16);
    for (uint64_t w : words)
      for (int byte = 0; byte < 8; ++byte) {
        uint8_t v = static_cast<uint8_t>(w >> (8 * byte));
        out += digits[v >> 4];
        out += digits[v & 0xf];
      }
    return out;
  }
};

namespace detail {

inline int fp_bond_code(BondOrder o) {
  return o == BondOrder::Aromatic ? 4 : static_cast<int>(o);
}

inline int fp_attached_h(const Molecule& m, int i) {
  int h = m.atom(i).implicit_h;
  for (int bi : m.bonds_of(i))
    if (m.atom(m.bond(bi).other(i)).element == elem::H) ++h;
  return h;
}

// Unfolded environment hashes, result[r][atom] for r in [0, radius].
// Hydrogen atoms keep hash 0 and never seed an environment.
inline std::vector<std::vector<uint64_t>> env_hashes(const Molecule& m,
                                                     int radius) {
  int n = m.atom_count();
  std::vector<std::vector<uint64_t>> out(
      static_cast<size_t>(radius) + 1,
      std::vector<uint64_t>(static_cast<size_t>(n), 0));
  std::vector<int> heavy;
  for (int i = 0; i < n; ++i) {
    if (m.atom(i).element == elem::H) continue;
    heavy.push_back(i);
    const Atom& a = m.atom(i);
    uint64_t h = fnv1a64_word(a.element, fnv1a64_offset);
    h = fnv1a64_word(static_cast<uint64_t>(a.charge + 128), h);
    h = fnv1a64_word(static_cast<uint64_t>(m.degree(i)), h);
    h = fnv1a64_word(static_cast<uint64_t>(fp_attached_h(m, i)), h);
    h = fnv1a64_word(a.aromatic ? 1 : 0, h);
    out[0][static_cast<size_t>(i)] = h;
  }
  for (int r = 1; r <= radius; ++r) {
    const auto& prev = out[static_cast<size_t>(r) - 1];
    for (int i : heavy) {
      std::vector<std::pair<int, uint64_t>> nb;
      for (int bi : m.bonds_of(i)) {
        const Bond& b = m.bond(bi);
        int j = b.other(i);
        if (m.atom(j).element == elem::H) continue;
        nb.emplace_back(fp_bond_code(b.order), prev[static_cast<size_t>(j)]);
      }
      std::sort(nb.begin(), nb.end());
      uint64_t h = fnv1a64_word(static_cast<uint64_t>(r), fnv1a64_offset);
      h = fnv1a64_word(prev[static_cast<size_t>(i)], h);
      for (const auto& [code, v] : nb) {
        h = fnv1a64_word(static_cast<uint64_t>(code), h);
        h = fnv1a64_word(v, h);
      }
      out[static_cast<size_t>(r)][static_cast<size_t>(i)] = h;
    }
  }
  return out;
}

}  // namespace detail

inline Fingerprint fingerprint(const Molecule& m, int radius = 2,
                               int width = 2048) {
  if (radius < 0 || radius > 4)
    throw InputError("fingerprint radius must be in [0, 4]");
  if (width < 256 || width > 65536 || !std::has_single_bit(static_cast<unsigned>(width)))
    throw InputError("fingerprint width must be a power of two in [256, 65536]");

  Fingerprint fp;
  fp.radius = radius;
  fp.width = width;
  fp.words.assign(static_cast<size_t>(width) / 64, 0);

  auto hs = detail::env_hashes(m, radius);
  for (int r = 0; r <= radius; ++r)
    for (int i = 0; i < m.atom_count(); ++i) {
      if (m.atom(i).element == elem::H) continue;
      fp.set(static_cast<int>(hs[static_cast<size_t>(r)][static_cast<size_t>(i)] %
                              static_cast<uint64_t>(width)));
    }
  return fp;
}

inline double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.width != b.width || a.radius != b.radius)
    throw WidthMismatch("fingerprints differ in width or radius");
  int inter = 0, uni = 0;
  for (size_t k = 0; k < a.words.size(); ++k) {
    inter += std::popcount(a.words[k] & b.words[k]);
    uni += std::popcount(a.words[k] | b.words[k]);
  }
  if (uni == 0) return 1.0;  // two featureless inputs are identical
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace screenlab
