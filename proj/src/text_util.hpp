// src/text_util.hpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0
//
// Internal text helpers shared by the library sources. The corpus is
// plain Spanish, so UTF-8 handling stops at 3-byte sequences; stray
// bytes are skipped on decode.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phoncorr::detail {

inline std::u32string decode_utf8(std::string_view s) {
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
      ++i;
    }
  }
  return out;
}

inline void encode_utf8(char32_t cp, std::string& out) {
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

inline std::string encode_utf8(const std::u32string& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) encode_utf8(cp, out);
  return out;
}

inline std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

inline std::vector<std::string> split_words(std::string_view text) {
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

inline std::string join_words(std::span<const std::string> words,
                              std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += words[i];
  }
  return out;
}

inline std::string join_words(std::span<const std::string> words) {
  return join_words(words, 0, words.size());
}

}  // namespace phoncorr::detail
