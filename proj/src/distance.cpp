// src/distance.cpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0

#include "phoncorr/distance.hpp"

#include <atomic>
#include <cassert>
#include <stdexcept>

namespace phoncorr {

std::uint32_t levenshtein(const PhonemeSequence& a, const PhonemeSequence& b) {
  return levenshtein_tokens<Phoneme>(a.tokens, b.tokens);
}

NormalizedDistance normalized(const PhonemeSequence& a, const PhonemeSequence& b) {
  const std::size_t denom = std::max(a.size(), b.size());
  if (denom == 0) return {0.0};
  return {static_cast<double>(levenshtein(a, b)) / static_cast<double>(denom)};
}

namespace detail {

void lev_block_scalar(const std::uint16_t* query, std::size_t query_len,
                      const PhraseBlock& block, std::uint16_t* out) {
  std::vector<std::uint16_t> row;
  for (int lane = 0; lane < block.count; ++lane) {
    const std::size_t len = block.lengths[lane];
    row.assign(len + 1, 0);
    for (std::size_t j = 0; j <= len; ++j) row[j] = static_cast<std::uint16_t>(j);
    for (std::size_t i = 1; i <= query_len; ++i) {
      std::uint16_t diag = row[0];
      row[0] = static_cast<std::uint16_t>(i);
      for (std::size_t j = 1; j <= len; ++j) {
        const std::uint16_t up = row[j];
        const std::uint16_t tok = block.tokens[(j - 1) * kLanes + lane];
        const std::uint16_t sub =
            static_cast<std::uint16_t>(diag + (tok == query[i - 1] ? 0 : 1));
        const std::uint16_t ins_del =
            static_cast<std::uint16_t>(std::min(up, row[j - 1]) + 1);
        row[j] = std::min(sub, ins_del);
        diag = up;
      }
    }
    out[lane] = row[len];
  }
}

}  // namespace detail

void PackedPhrases::add(const PhonemeSequence& seq) {
  assert(seq.size() < detail::kPadToken);
  if (blocks_.empty() || blocks_.back().count == detail::kLanes) {
    blocks_.emplace_back();
  }
  detail::PhraseBlock& blk = blocks_.back();
  const int lane = blk.count;
  const auto len = static_cast<std::uint32_t>(seq.size());
  if (len > blk.max_len) {
    blk.tokens.resize(static_cast<std::size_t>(len) * detail::kLanes,
                      detail::kPadToken);
    blk.max_len = len;
  }
  for (std::uint32_t t = 0; t < len; ++t) {
    blk.tokens[t * detail::kLanes + lane] =
        static_cast<std::uint16_t>(seq.tokens[t]);
  }
  blk.lengths[lane] = static_cast<std::uint16_t>(len);
  blk.count = lane + 1;
  ++size_;
}

namespace {

using KernelFn = void (*)(const std::uint16_t*, std::size_t,
                          const detail::PhraseBlock&, std::uint16_t*);

Backend detect_backend() {
#if defined(__x86_64__) || defined(__i386__)
  if (detail::avx2_compiled() && __builtin_cpu_supports("avx2")) {
    return Backend::avx2;
  }
#endif
  return Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

KernelFn kernel_for(Backend b) {
  return b == Backend::avx2 ? detail::lev_block_avx2 : detail::lev_block_scalar;
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return detail::avx2_compiled() && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::runtime_error(std::string("backend not available on this host: ") +
                             std::string(backend_name(b)));
  }
  backend_slot().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void levenshtein_batch(const PhonemeSequence& query, const PackedPhrases& phrases,
                       std::span<std::uint32_t> out) {
  assert(out.size() >= phrases.size());
  const KernelFn kernel = kernel_for(active_backend());

  std::vector<std::uint16_t> q;
  q.reserve(query.size());
  for (Phoneme p : query.tokens) q.push_back(static_cast<std::uint16_t>(p));

  std::size_t base = 0;
  std::uint16_t lane_out[detail::kLanes];
  for (const detail::PhraseBlock& blk : phrases.blocks()) {
    kernel(q.data(), q.size(), blk, lane_out);
    for (int lane = 0; lane < blk.count; ++lane) {
      out[base + static_cast<std::size_t>(lane)] = lane_out[lane];
    }
    base += static_cast<std::size_t>(blk.count);
  }
}

std::vector<std::uint32_t> levenshtein_batch(const PhonemeSequence& query,
                                             const PackedPhrases& phrases) {
  std::vector<std::uint32_t> out(phrases.size());
  levenshtein_batch(query, phrases, out);
  return out;
}

}  // namespace phoncorr
