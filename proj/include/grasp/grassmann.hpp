#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace grasp {

/// A basis word of the rank-m exterior algebra: a subset of generators
/// {e_1,...,e_m} stored as a bit mask (bit i-1 <-> generator e_i). The
/// canonical spelling is by strictly increasing generator index.
struct GrassmannWord {
  uint32_t mask = 0;
  uint32_t rank = 0;  // m

  GrassmannWord() = default;
  GrassmannWord(uint32_t mask_, uint32_t rank_) : mask(mask_), rank(rank_) {
    if (rank_ > 31) throw std::invalid_argument("GrassmannWord: rank > 31");
    if (mask_ >> rank_) throw std::invalid_argument("GrassmannWord: mask outside rank");
  }

  uint32_t length() const { return (uint32_t)std::popcount(mask); }
  uint8_t parity() const { return (uint8_t)(length() & 1u); }
  bool empty() const { return mask == 0; }

  std::string str() const {
    if (mask == 0) return "1";
    std::string s;
    for (uint32_t i = 0; i < rank; ++i)
      if (mask & (1u << i)) {
        if (!s.empty()) s += '*';
        s += 'e';
        s += std::to_string(i + 1);
      }
    return s;
  }

  bool operator==(const GrassmannWord&) const = default;
};

struct SignedWord {
  int sign;  // +1 or -1
  GrassmannWord word;
};

/// Number of inversions between the increasing index lists of a and b:
/// pairs (i in a, j in b) with i > j. This is the transposition count of the
/// merge that interleaves b into a.
inline uint32_t merge_inversions(uint32_t a, uint32_t b) {
  uint32_t inv = 0;
  while (b) {
    uint32_t j = (uint32_t)std::countr_zero(b);
    inv += (uint32_t)std::popcount(a >> (j + 1) << (j + 1));
    b &= b - 1;
  }
  return inv;
}

/// Product of two basis words. Returns nullopt (zero) when the words share a
/// generator; otherwise the union word with the merge sign.
inline std::optional<SignedWord> grassmann_mul(const GrassmannWord& w1, const GrassmannWord& w2) {
  if (w1.rank != w2.rank)
    throw std::invalid_argument("grassmann_mul: words over different ranks");
  if (w1.mask & w2.mask) return std::nullopt;
  int sign = (merge_inversions(w1.mask, w2.mask) & 1u) ? -1 : 1;
  return SignedWord{sign, GrassmannWord(w1.mask | w2.mask, w1.rank)};
}

}  // namespace grasp
