// include/phoncorr/g2p.hpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "phoncorr/phoneme.hpp"

namespace phoncorr {

// Raised when the transducer meets a character it has no rule for.
class G2pError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lowercase; fold á é í ó ú → a e i o u and ü → u; keep ñ; drop every
// character outside letters and spaces; collapse whitespace runs; trim.
// Idempotent. Empty output is legal.
std::string normalize_text(std::string_view raw);

// Grapheme-to-phoneme rules, applied left to right with longest-match
// digraph priority. The default table is embedded; a table may also be
// loaded from a file with one rule per line:
//
//   pattern<TAB>context<TAB>phonemes
//
// where context constrains the character following the match:
//   *        any (or end of word)
//   <set>    next character is one of the listed characters ("ei")
//   !<set>   next character is none of them
//   $        end of word
// and phonemes is a space-separated list of inventory symbols, or "-"
// for silence. Among rules matching at a position, longer patterns win;
// equal-length patterns are tried in table order.
class RuleTable {
 public:
  static const RuleTable& default_table();
  static RuleTable load(const std::string& path);

  // word must be normalized and space-free ([a-zñ]+). Throws G2pError on
  // a character no rule covers, naming the character and its position.
  PhonemeSequence word(std::string_view word) const;

  // Per-word transcription concatenated with no boundary token, so
  // "chile ta" and "chuleta" differ only in vowel phonemes.
  PhonemeSequence phrase(std::string_view normalized_phrase) const;

  std::size_t rule_count() const { return rules_.size(); }

 private:
  struct Rule {
    std::u32string pattern;
    std::u32string context;  // empty/"*" = any, "$" = end, chars = set, '!'-prefix = negated set
    std::vector<Phoneme> output;
  };

  RuleTable() = default;
  void add_rule(std::string_view pattern, std::string_view context,
                std::string_view phonemes);
  void sort_rules();

  std::vector<Rule> rules_;
};

// Convenience wrappers over the default table (the spec operations).
PhonemeSequence transcribe_word(std::string_view word);
PhonemeSequence transcribe_phrase(std::string_view normalized_phrase);

}  // namespace phoncorr
