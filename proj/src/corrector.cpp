// src/corrector.cpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#include "phoncorr/corrector.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace phoncorr {

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto space = text.find(' ', pos);
    if (space == std::string_view::npos) space = text.size();
    if (space > pos) words.emplace_back(text.substr(pos, space - pos));
    pos = space + 1;
  }
  return words;
}

std::string join_words(std::span<const std::string> words, std::size_t begin,
                       std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

// Exact comparison of a/b vs c/d without touching floating point.
bool fraction_less(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d) {
  return a * d < c * b;
}

}  // namespace

ContextPhrase make_context_phrase(std::string_view surface) {
  ContextPhrase p;
  p.surface = std::string(surface);
  p.normalized = normalize_text(surface);
  p.phonemes = transcribe_phrase(p.normalized);
  return p;
}

std::vector<ContextPhrase> load_context_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open context file: " + path);
  std::vector<ContextPhrase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    ContextPhrase p = make_context_phrase(line);
    if (p.normalized.empty()) continue;  // nothing matchable on this line
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ContextPhrase> make_context(std::span<const std::string> phrases) {
  std::vector<ContextPhrase> out;
  out.reserve(phrases.size());
  for (const std::string& s : phrases) {
    ContextPhrase p = make_context_phrase(s);
    if (p.normalized.empty()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

void CorrectionConfig::validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must be in [0,1]");
  }
  if (window < 0) throw std::invalid_argument("window must be >= 0");
  if (min_word_len < 1) throw std::invalid_argument("min word length must be >= 1");
}

std::vector<std::size_t> find_oov_words(std::span<const std::string> tokens,
                                        std::span<const ContextPhrase> context,
                                        int min_word_len) {
  std::unordered_set<std::string> known;
  for (const ContextPhrase& c : context) {
    for (std::string& w : split_words(c.normalized)) known.insert(std::move(w));
  }
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (codepoint_count(tokens[i]) < static_cast<std::size_t>(min_word_len)) continue;
    if (known.count(tokens[i])) continue;
    pivots.push_back(i);
  }
  return pivots;
}

std::vector<SubPhrase> build_subphrases(std::span<const std::string> tokens,
                                        std::size_t pivot, int window) {
  std::vector<SubPhrase> subs;
  const std::size_t max_left = std::min<std::size_t>(window, pivot);
  const std::size_t max_right =
      std::min<std::size_t>(window, tokens.size() - pivot - 1);
  for (std::size_t left = 0; left <= max_left; ++left) {
    for (std::size_t right = 0; right <= max_right; ++right) {
      SubPhrase s;
      s.begin = pivot - left;
      s.end = pivot + right + 1;
      s.text = join_words(tokens, s.begin, s.end);
      s.phonemes = transcribe_phrase(s.text);
      subs.push_back(std::move(s));
    }
  }
  return subs;
}

BestCandidate best_candidate(std::span<const SubPhrase> subphrases,
                             std::span<const ContextPhrase> context,
                             const PackedPhrases& packed) {
  BestCandidate best;
  bool have = false;
  std::vector<std::uint32_t> dists(packed.size());
  for (const SubPhrase& s : subphrases) {
    levenshtein_batch(s.phonemes, packed, dists);
    for (std::size_t ci = 0; ci < context.size(); ++ci) {
      const std::uint32_t num = dists[ci];
      const std::uint32_t den = static_cast<std::uint32_t>(
          std::max<std::size_t>({s.phonemes.size(), context[ci].phonemes.size(), 1}));
      bool better = false;
      if (!have) {
        better = true;
      } else if (fraction_less(num, den, best.dist_num, best.dist_den)) {
        better = true;
      } else if (!fraction_less(best.dist_num, best.dist_den, num, den)) {
        // equal distance: longer span, then earlier context, then lower start
        if (s.length() > best.sub.length()) {
          better = true;
        } else if (s.length() == best.sub.length()) {
          if (ci < best.context_index) {
            better = true;
          } else if (ci == best.context_index && s.begin < best.sub.begin) {
            better = true;
          }
        }
      }
      if (better) {
        best.sub = s;
        best.context_index = ci;
        best.dist_num = num;
        best.dist_den = den;
        best.dist = static_cast<double>(num) / static_cast<double>(den);
        have = true;
      }
    }
  }
  if (!have) throw std::invalid_argument("best_candidate: empty sub-phrase or context set");
  return best;
}

Corrector::Corrector(std::vector<ContextPhrase> context)
    : context_(std::move(context)) {
  for (const ContextPhrase& c : context_) packed_.add(c.phonemes);
}

CorrectionResult Corrector::correct(std::string_view transcript,
                                    const CorrectionConfig& cfg) const {
  cfg.validate();

  const std::string normalized = normalize_text(transcript);
  const std::vector<std::string> tokens = split_words(normalized);

  CorrectionResult result;
  if (tokens.empty() || context_.empty()) {
    result.corrected_text = join_words(tokens, 0, tokens.size());
    return result;
  }

  const std::vector<std::size_t> pivots =
      find_oov_words(tokens, context_, cfg.min_word_len);

  std::vector<CandidateReplacement> candidates;
  for (std::size_t pivot : pivots) {
    const std::vector<SubPhrase> subs =
        build_subphrases(tokens, pivot, cfg.window);
    const BestCandidate best = best_candidate(subs, context_, packed_);
    if (best.dist < cfg.threshold) {
      CandidateReplacement c;
      c.begin = best.sub.begin;
      c.end = best.sub.end;
      c.context_index = best.context_index;
      c.pivot = pivot;
      c.dist = {best.dist};
      c.dist_num = best.dist_num;
      c.dist_den = best.dist_den;
      candidates.push_back(std::move(c));
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CandidateReplacement& a, const CandidateReplacement& b) {
                     if (fraction_less(a.dist_num, a.dist_den, b.dist_num, b.dist_den))
                       return true;
                     if (fraction_less(b.dist_num, b.dist_den, a.dist_num, a.dist_den))
                       return false;
                     const std::size_t alen = a.end - a.begin;
                     const std::size_t blen = b.end - b.begin;
                     if (alen != blen) return alen > blen;
                     if (a.context_index != b.context_index)
                       return a.context_index < b.context_index;
                     return a.begin < b.begin;
                   });

  std::vector<bool> marked(tokens.size(), false);
  for (const CandidateReplacement& c : candidates) {
    bool overlaps = false;
    for (std::size_t i = c.begin; i < c.end; ++i) {
      if (marked[i]) {
        overlaps = true;
        break;
      }
    }
    AppliedReplacement rec;
    rec.begin = c.begin;
    rec.end = c.end;
    rec.original = join_words(tokens, c.begin, c.end);
    rec.replacement = context_[c.context_index].surface;
    rec.dist = c.dist.value;
    if (overlaps) {
      result.skipped.push_back(std::move(rec));
      continue;
    }
    for (std::size_t i = c.begin; i < c.end; ++i) marked[i] = true;
    result.applied.push_back(std::move(rec));
  }

  // Reassemble: unmarked tokens verbatim, each applied span replaced by
  // its context surface at the span start.
  std::vector<const AppliedReplacement*> by_start(tokens.size(), nullptr);
  for (const AppliedReplacement& a : result.applied) by_start[a.begin] = &a;
  std::string out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!out.empty()) out.push_back(' ');
    if (by_start[i] != nullptr) {
      out += by_start[i]->replacement;
      i = by_start[i]->end;
    } else {
      out += tokens[i];
      ++i;
    }
  }
  result.corrected_text = std::move(out);
  return result;
}

CorrectionResult correct(std::string_view transcript,
                         std::span<const ContextPhrase> context,
                         const CorrectionConfig& cfg) {
  return Corrector(std::vector<ContextPhrase>(context.begin(), context.end()))
      .correct(transcript, cfg);
}

}  // namespace phoncorr
