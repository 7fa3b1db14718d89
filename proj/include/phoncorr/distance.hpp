// include/phoncorr/distance.hpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "phoncorr/phoneme.hpp"

namespace phoncorr {

// Unit-cost edit distance over arbitrary token types. Two-row DP; used
// directly for phonemes and, via eval, for word tokens.
template <typename T>
std::uint32_t levenshtein_tokens(std::span<const T> a, std::span<const T> b) {
  if (a.size() > b.size()) std::swap(a, b);  // keep the row short
  std::vector<std::uint32_t> row(a.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) row[i] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 1; j <= b.size(); ++j) {
    std::uint32_t diag = row[0];
    row[0] = static_cast<std::uint32_t>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
      const std::uint32_t up = row[i];
      const std::uint32_t sub = diag + (a[i - 1] == b[j - 1] ? 0u : 1u);
      row[i] = std::min({sub, up + 1u, row[i - 1] + 1u});
      diag = up;
    }
  }
  return row[a.size()];
}

std::uint32_t levenshtein(const PhonemeSequence& a, const PhonemeSequence& b);

// levenshtein(a,b) / max(|a|,|b|); 0 when both sequences are empty.
// Always in [0,1]; 0 iff the token lists are equal.
struct NormalizedDistance {
  double value = 0.0;
  auto operator<=>(const NormalizedDistance&) const = default;
};

NormalizedDistance normalized(const PhonemeSequence& a, const PhonemeSequence& b);

namespace detail {

inline constexpr int kLanes = 16;                 // 16 x u16 = one 256-bit register
inline constexpr std::uint16_t kPadToken = 0xFFFF;  // never equals a phoneme id

// Up to kLanes phrases, token-major/lane-minor: tokens[col * kLanes + lane]
// holds token `col` of phrase `lane`, padded with kPadToken past each
// phrase's own length.
struct PhraseBlock {
  std::vector<std::uint16_t> tokens;
  std::array<std::uint16_t, kLanes> lengths{};
  std::uint32_t max_len = 0;
  int count = 0;
};

void lev_block_scalar(const std::uint16_t* query, std::size_t query_len,
                      const PhraseBlock& block, std::uint16_t* out);
void lev_block_avx2(const std::uint16_t* query, std::size_t query_len,
                    const PhraseBlock& block, std::uint16_t* out);
bool avx2_compiled();  // whether this binary contains the AVX2 kernel

}  // namespace detail

// A set of phoneme sequences packed for batch distance computation.
// Build once per context dictionary, query many times.
class PackedPhrases {
 public:
  void add(const PhonemeSequence& seq);
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::vector<detail::PhraseBlock>& blocks() const { return blocks_; }

 private:
  std::vector<detail::PhraseBlock> blocks_;
  std::size_t size_ = 0;
};

// Distances from `query` to every packed phrase, in insertion order.
// `out` must have room for size() results. Runs on the active backend.
void levenshtein_batch(const PhonemeSequence& query, const PackedPhrases& phrases,
                       std::span<std::uint32_t> out);
std::vector<std::uint32_t> levenshtein_batch(const PhonemeSequence& query,
                                             const PackedPhrases& phrases);

// Kernel selection. The default is picked once at startup from CPU
// features; set_backend can force the scalar path (or AVX2 where
// supported — throws otherwise).
enum class Backend { scalar, avx2 };
Backend active_backend();
bool backend_available(Backend b);
void set_backend(Backend b);
std::string_view backend_name(Backend b);

}  // namespace phoncorr
