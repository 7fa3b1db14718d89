// include/phoncorr/phoneme.hpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phoncorr {

// Closed phoneme inventory (simplified Latin-American Spanish: seseo,
// one flap r and one trill rr). Multi-character symbols (tʃ, rr) are a
// single token each; all distances count tokens, never characters.
enum class Phoneme : std::uint8_t {
  a, e, i, o, u,
  p, b, t, d, k, g,
  f, s, x,
  m, n, ny,   // ny = ɲ
  l, y,       // y = ʝ (voiced palatal fricative)
  r, rr,
  ch,         // tʃ
  w, j,       // glides
};

inline constexpr int kPhonemeCount = 24;

// UTF-8 display symbol, e.g. to_symbol(Phoneme::ch) == "tʃ".
std::string_view to_symbol(Phoneme p);

// Inverse of to_symbol; nullopt for symbols outside the inventory.
std::optional<Phoneme> phoneme_from_symbol(std::string_view symbol);

// Ordered phoneme tokens plus the text they were derived from.
// Token count is the sequence's length; it is unrelated to character count.
struct PhonemeSequence {
  std::vector<Phoneme> tokens;
  std::string source_text;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  // Tokens joined by single spaces, e.g. "tʃ u l e t a".
  std::string symbols() const;
};

inline bool same_tokens(const PhonemeSequence& a, const PhonemeSequence& b) {
  return a.tokens == b.tokens;
}

}  // namespace phoncorr
