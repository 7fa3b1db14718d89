// include/phoncorr/corrector.hpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phoncorr/distance.hpp"
#include "phoncorr/g2p.hpp"
#include "phoncorr/phoneme.hpp"

namespace phoncorr {

// A domain phrase the corrector may substitute into a transcript.
// `surface` is inserted verbatim on replacement; matching happens on the
// cached phonemes of the normalized form.
struct ContextPhrase {
  std::string surface;
  std::string normalized;
  PhonemeSequence phonemes;
};

ContextPhrase make_context_phrase(std::string_view surface);

// One phrase per line; blank lines and lines starting with '#' are
// ignored, as are lines that normalize to nothing. File order defines
// tie-break priority. Throws std::runtime_error if unreadable.
std::vector<ContextPhrase> load_context_file(const std::string& path);
std::vector<ContextPhrase> make_context(std::span<const std::string> phrases);

struct CorrectionConfig {
  double threshold = 0.4;  // strict upper bound on normalized distance
  int window = 1;          // tokens considered on each side of a pivot
  int min_word_len = 4;    // minimum character length of an OOV pivot

  // Candidates at equal distance prefer the longer span, then the
  // earlier context phrase, then the smaller span start.
  static constexpr std::string_view tie_break =
      "distance, span length desc, context order, span start";

  void validate() const;  // throws std::invalid_argument
};

// Contiguous token span [begin, end) around a pivot, with its joined
// normalized text and phonemes.
struct SubPhrase {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;
  PhonemeSequence phonemes;

  std::size_t length() const { return end - begin; }
};

struct CandidateReplacement {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t context_index = 0;
  std::size_t pivot = 0;
  NormalizedDistance dist;
  std::uint32_t dist_num = 0;  // raw edit count
  std::uint32_t dist_den = 1;  // max token count (1 when both empty)
};

struct AppliedReplacement {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string original;     // joined normalized span text
  std::string replacement;  // context phrase surface
  double dist = 0.0;
};

struct CorrectionResult {
  std::string corrected_text;              // normalized words + surfaces
  std::vector<AppliedReplacement> applied;  // in application order; spans disjoint
  std::vector<AppliedReplacement> skipped;  // rejected by overlap marking
};

// Indices of tokens that do not occur as a whole word inside any context
// phrase and are at least min_word_len characters long.
std::vector<std::size_t> find_oov_words(std::span<const std::string> tokens,
                                        std::span<const ContextPhrase> context,
                                        int min_word_len);

// All spans [pivot-a, pivot+b) with 0 <= a,b <= window, clipped at the
// token range; 4 spans for window=1 at an interior pivot.
std::vector<SubPhrase> build_subphrases(std::span<const std::string> tokens,
                                        std::size_t pivot, int window);

struct BestCandidate {
  SubPhrase sub;
  std::size_t context_index = 0;
  std::uint32_t dist_num = 0;
  std::uint32_t dist_den = 1;
  double dist = 0.0;
};

// argmin of the normalized distance over subphrases x context, ties per
// CorrectionConfig::tie_break. Requires both ranges nonempty.
BestCandidate best_candidate(std::span<const SubPhrase> subphrases,
                             std::span<const ContextPhrase> context,
                             const PackedPhrases& packed);

// Precomputes context phonemes and their packed form once; correct() is
// pure and safe to call concurrently.
class Corrector {
 public:
  explicit Corrector(std::vector<ContextPhrase> context);

  CorrectionResult correct(std::string_view transcript,
                           const CorrectionConfig& cfg) const;

  const std::vector<ContextPhrase>& context() const { return context_; }

 private:
  std::vector<ContextPhrase> context_;
  PackedPhrases packed_;
};

// One-shot form of the same operation.
CorrectionResult correct(std::string_view transcript,
                         std::span<const ContextPhrase> context,
                         const CorrectionConfig& cfg);

}  // namespace phoncorr
