// src/g2p.cpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#include "phoncorr/g2p.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace phoncorr {

namespace {

constexpr std::array<std::string_view, kPhonemeCount> kSymbols = {
    "a", "e", "i", "o", "u",
    "p", "b", "t", "d", "k", "g",
    "f", "s", "x",
    "m", "n", "ɲ",
    "l", "ʝ",
    "r", "rr",
    "tʃ",
    "w", "j",
};

// Minimal UTF-8 decoding; invalid bytes are skipped. The texts handled
// here are plain Spanish, so anything beyond 3-byte sequences is noise.
std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80) {
      out.push_back(b);
      ++i;
    } else if ((b >> 5) == 0x6 && i + 1 < s.size()) {
      out.push_back(((b & 0x1F) << 6) |
                    (static_cast<unsigned char>(s[i + 1]) & 0x3F));
      i += 2;
    } else if ((b >> 4) == 0xE && i + 2 < s.size()) {
      out.push_back(((b & 0x0F) << 12) |
                    ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
                    (static_cast<unsigned char>(s[i + 2]) & 0x3F));
      i += 3;
    } else {
      ++i;  // stray continuation or unsupported sequence
    }
  }
  return out;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(const std::u32string& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) encode_utf8(cp, out);
  return out;
}

constexpr char32_t kEnye = U'ñ';  // ñ

char32_t fold_codepoint(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  switch (cp) {
    case U'á': case U'Á': return U'a';  // á Á
    case U'é': case U'É': return U'e';  // é É
    case U'í': case U'Í': return U'i';  // í Í
    case U'ó': case U'Ó': return U'o';  // ó Ó
    case U'ú': case U'Ú': return U'u';  // ú Ú
    case U'ü': case U'Ü': return U'u';  // ü Ü
    case U'Ñ': return kEnye;                 // Ñ
    default: return cp;
  }
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v';
}

// Doubled identical letters collapse before rule application. rr never
// collapses (the trill is phonemic). ll collapses only in words that also
// carry a foreign gemination marker — a doubled letter other than ll/rr,
// as in "buccellati" or "mozzarella" — otherwise it is left for the
// yeísmo digraph rule.
std::u32string collapse_doubles(const std::u32string& word) {
  bool loanword = false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == word[i + 1] && word[i] != U'l' && word[i] != U'r') {
      loanword = true;
      break;
    }
  }
  std::u32string out;
  out.reserve(word.size());
  std::size_t i = 0;
  while (i < word.size()) {
    if (i + 1 < word.size() && word[i] == word[i + 1] && word[i] != U'r' &&
        (word[i] != U'l' || loanword)) {
      out.push_back(word[i]);
      i += 2;
    } else {
      out.push_back(word[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace

std::string_view to_symbol(Phoneme p) {
  return kSymbols[static_cast<std::size_t>(p)];
}

std::optional<Phoneme> phoneme_from_symbol(std::string_view symbol) {
  for (int i = 0; i < kPhonemeCount; ++i) {
    if (kSymbols[i] == symbol) return static_cast<Phoneme>(i);
  }
  return std::nullopt;
}

std::string PhonemeSequence::symbols() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += to_symbol(tokens[i]);
  }
  return out;
}

std::string normalize_text(std::string_view raw) {
  const std::u32string in = decode_utf8(raw);
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t cp : in) {
    cp = fold_codepoint(cp);
    if (is_space(cp)) {
      pending_space = true;
      continue;
    }
    if ((cp >= U'a' && cp <= U'z') || cp == kEnye) {
      if (pending_space && !out.empty()) out.push_back(U' ');
      pending_space = false;
      out.push_back(cp);
    }
    // everything else (digits, punctuation, other scripts) is dropped
  }
  return encode_utf8(out);
}

void RuleTable::add_rule(std::string_view pattern, std::string_view context,
                         std::string_view phonemes) {
  Rule r;
  r.pattern = decode_utf8(pattern);
  if (r.pattern.empty()) throw G2pError("rule with empty pattern");
  if (context != "*") r.context = decode_utf8(context);
  if (phonemes != "-" && !phonemes.empty()) {
    std::istringstream ss{std::string(phonemes)};
    std::string sym;
    while (ss >> sym) {
      auto p = phoneme_from_symbol(sym);
      if (!p) throw G2pError("rule output '" + sym + "' is not in the phoneme inventory");
      r.output.push_back(*p);
    }
  }
  rules_.push_back(std::move(r));
}

void RuleTable::sort_rules() {
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const Rule& a, const Rule& b) {
                     return a.pattern.size() > b.pattern.size();
                   });
}

const RuleTable& RuleTable::default_table() {
  static const RuleTable table = [] {
    RuleTable t;
    struct Entry { const char* pat; const char* ctx; const char* out; };
    static constexpr Entry kDefault[] = {
        // digraphs
        {"ch", "*", "tʃ"},
        {"ll", "*", "ʝ"},     // yeísmo; geminate loanwords collapse ll first
        {"rr", "*", "rr"},
        {"qu", "ei", "k"},
        {"gu", "ei", "g"},
        {"ea", "*", "i"},     // loanword vowel merger (meat, cheese-style spellings)
        // context-sensitive singles
        {"c", "ei", "s"},     // seseo
        {"c", "*", "k"},
        {"g", "ei", "x"},
        {"g", "*", "g"},
        {"y", "$", "i"},      // word-final or standalone
        {"y", "*", "ʝ"},
        // unconditional singles
        {"h", "*", "-"},
        {"v", "*", "b"},
        {"z", "*", "s"},
        {"j", "*", "x"},
        {"ñ", "*", "ɲ"},
        {"x", "*", "s"},
        {"w", "*", "w"},
        {"k", "*", "k"},
        {"q", "*", "k"},
        // identity
        {"a", "*", "a"}, {"e", "*", "e"}, {"i", "*", "i"}, {"o", "*", "o"},
        {"u", "*", "u"}, {"b", "*", "b"}, {"d", "*", "d"}, {"f", "*", "f"},
        {"l", "*", "l"}, {"m", "*", "m"}, {"n", "*", "n"}, {"p", "*", "p"},
        {"r", "*", "r"}, {"s", "*", "s"}, {"t", "*", "t"},
    };
    for (const auto& e : kDefault) t.add_rule(e.pat, e.ctx, e.out);
    t.sort_rules();
    return t;
  }();
  return table;
}

RuleTable RuleTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw G2pError("cannot open rule table file: " + path);
  RuleTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos
                                                : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw G2pError(path + ":" + std::to_string(lineno) +
                     ": expected pattern<TAB>context<TAB>phonemes");
    }
    t.add_rule(line.substr(0, tab1), line.substr(tab1 + 1, tab2 - tab1 - 1),
               line.substr(tab2 + 1));
  }
  if (t.rules_.empty()) throw G2pError("rule table file has no rules: " + path);
  t.sort_rules();
  return t;
}

namespace {

bool context_matches(const std::u32string& word, std::size_t pos,
                     const std::u32string& ctx) {
  if (ctx.empty()) return true;
  if (ctx == U"$") return pos == word.size();
  if (ctx[0] == U'!') {
    if (pos == word.size()) return true;
    return ctx.find(word[pos], 1) == std::u32string::npos;
  }
  return pos < word.size() && ctx.find(word[pos]) != std::u32string::npos;
}

}  // namespace

PhonemeSequence RuleTable::word(std::string_view word) const {
  PhonemeSequence seq;
  seq.source_text = std::string(word);
  const std::u32string w = collapse_doubles(decode_utf8(word));
  std::size_t i = 0;
  while (i < w.size()) {
    const Rule* hit = nullptr;
    for (const Rule& r : rules_) {
      if (w.compare(i, r.pattern.size(), r.pattern) == 0 &&
          context_matches(w, i + r.pattern.size(), r.context)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      std::string ch;
      encode_utf8(w[i], ch);
      throw G2pError("unknown character '" + ch + "' at position " +
                     std::to_string(i) + " in \"" + std::string(word) + "\"");
    }
    seq.tokens.insert(seq.tokens.end(), hit->output.begin(), hit->output.end());
    i += hit->pattern.size();
  }
  return seq;
}

PhonemeSequence RuleTable::phrase(std::string_view normalized_phrase) const {
  PhonemeSequence seq;
  seq.source_text = std::string(normalized_phrase);
  std::size_t pos = 0;
  while (pos < normalized_phrase.size()) {
    auto space = normalized_phrase.find(' ', pos);
    if (space == std::string_view::npos) space = normalized_phrase.size();
    if (space > pos) {
      const PhonemeSequence w = word(normalized_phrase.substr(pos, space - pos));
      seq.tokens.insert(seq.tokens.end(), w.tokens.begin(), w.tokens.end());
    }
    pos = space + 1;
  }
  return seq;
}

PhonemeSequence transcribe_word(std::string_view word) {
  return RuleTable::default_table().word(word);
}

PhonemeSequence transcribe_phrase(std::string_view normalized_phrase) {
  return RuleTable::default_table().phrase(normalized_phrase);
}

}  // namespace phoncorr
