// include/phoncorr/eval.hpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phoncorr/corrector.hpp"

namespace phoncorr {

// Counts from a minimal word-level alignment of hypothesis against
// reference: substitutions, deletions (reference words the hypothesis
// missed), insertions (hypothesis words with no reference counterpart),
// and N, the reference word count. WER = (S+D+I)/N and may exceed 1.
struct WerStats {
  std::uint64_t substitutions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t ref_words = 0;
  bool degenerate = false;  // empty reference; excluded from aggregates

  std::uint64_t edits() const { return substitutions + deletions + insertions; }
  double wer() const {
    return ref_words == 0 ? 0.0
                          : static_cast<double>(edits()) /
                                static_cast<double>(ref_words);
  }

  WerStats& operator+=(const WerStats& other);
};

// Both sides are normalized and whitespace-tokenized before alignment.
// Ambiguous minimal alignments resolve match > substitution > deletion
// > insertion, which fixes the S/D/I split; their sum is alignment-
// invariant.
WerStats wer_counts(std::string_view hypothesis, std::string_view reference);

// Component-wise sum over (hypothesis, reference) pairs; degenerate
// records are skipped. Throws std::invalid_argument when the list is
// empty or every record is degenerate.
WerStats corpus_wer(
    std::span<const std::pair<std::string, std::string>> records);

struct EvalRecord {
  std::string id;
  std::string target;
  std::string hypothesis;
  std::optional<std::string> hypothesis_context;
};

// JSON Lines, one record per line with fields id, target, hypothesis and
// optional hypothesis_context. Malformed lines abort with the line number
// when strict, otherwise are reported to diag and skipped.
std::vector<EvalRecord> load_corpus(const std::string& path, bool strict,
                                    std::ostream& diag);
void save_corpus(std::span<const EvalRecord> records, std::ostream& out);

struct SweepRow {
  double threshold = 0.0;
  double wer = 0.0;              // aggregate WER of corrected hypotheses
  std::uint64_t improved = 0;    // records whose edit count decreased
  std::uint64_t worsened = 0;    // records whose edit count increased
  std::uint64_t total_err = 0;   // records with nonzero baseline edits
};

// Runs the corrector over every hypothesis at each threshold and
// aggregates WER plus improved/worsened counts against the baseline
// (uncorrected) alignment. Thresholds must be ascending, each in [0,1].
std::vector<SweepRow> threshold_sweep(std::span<const EvalRecord> records,
                                      const Corrector& corrector,
                                      const CorrectionConfig& base,
                                      std::span<const double> thresholds);

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

// The four transcript error shapes: substitution garbles characters of
// one word, word_union drops an inner space, separation splits a word,
// wrong_division slides an existing space by one or two characters.
enum class ErrorType { substitution, word_union, separation, wrong_division };

std::string_view error_type_name(ErrorType t);
std::optional<ErrorType> error_type_from_name(std::string_view name);

// Deterministic for a given (phrase, type, seed); the output always
// differs from the input. Throws std::invalid_argument when the phrase
// is too short for the requested type.
std::string synthesize_error(std::string_view phrase, ErrorType type,
                             std::uint32_t seed);

// Seeded corpus of corrupted pizzeria-style utterances: each target
// embeds a context phrase in a filler template; most hypotheses corrupt
// the embedded phrase, some corrupt a filler word, some are clean.
std::vector<EvalRecord> make_synthetic_corpus(
    std::span<const ContextPhrase> context, std::size_t count,
    std::uint32_t seed);

}  // namespace phoncorr
