//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_FNV_HPP
#define SCREENLAB_FNV_HPP

#include <cstdint>
#include <string_view>

namespace screenlab {

// FNV-1a, 64 bit. Used for fingerprint environment hashing and data-file
// checksums; platform-independent by construction.
inline constexpr uint64_t fnv1a64_offset = 14695981039346656037ull;
inline constexpr uint64_t fnv1a64_prime = 1099511628211ull;

inline constexpr uint64_t fnv1a64(const void* data, size_t len,
                                  uint64_t seed = fnv1a64_offset) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= fnv1a64_prime;
  }
  return h;
}

inline constexpr uint64_t fnv1a64(std::string_view s, uint64_t seed = fnv1a64_offset) {
  uint64_t h = seed;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= fnv1a64_prime;
  }
  return h;
}

// Mix one little-endian encoded 64-bit word.
inline constexpr uint64_t fnv1a64_word(uint64_t word, uint64_t seed) {
  uint64_t h = seed;
  for (int i = 0; i < 8; ++i) {
    h ^= (word >> (8 * i)) & 0xff;
    h *= fnv1a64_prime;
  }
  return h;
}

}  // namespace screenlab

#endif  // SCREENLAB_FNV_HPP
