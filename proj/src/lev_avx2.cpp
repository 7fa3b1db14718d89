// src/lev_avx2.cpp
//
// Copyright 2026 The phoncorr authors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2 batch Levenshtein kernel: one DP over the block's padded column
// count, all 16 candidate lanes advanced per step. The loop-carried
// dependency runs along the candidate axis (sequential j), so each
// vector op handles 16 independent DP cells. Each lane's result is read
// from the final DP row at that lane's own length, so padding never
// leaks into a distance. This translation unit is the only one compiled
// with AVX2 codegen; callers reach it through the runtime dispatcher.

#include "phoncorr/distance.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

#include <cstdlib>

namespace phoncorr::detail {

#if defined(__AVX2__)

bool avx2_compiled() { return true; }

void lev_block_avx2(const std::uint16_t* query, std::size_t query_len,
                    const PhraseBlock& block, std::uint16_t* out) {
  const std::size_t cols = block.max_len;
  std::vector<__m256i> dp(cols + 1);
  const __m256i ones = _mm256_set1_epi16(1);
  for (std::size_t j = 0; j <= cols; ++j) {
    dp[j] = _mm256_set1_epi16(static_cast<short>(j));
  }
  for (std::size_t i = 1; i <= query_len; ++i) {
    __m256i diag = dp[0];
    __m256i cur = _mm256_set1_epi16(static_cast<short>(i));
    dp[0] = cur;
    const __m256i qv = _mm256_set1_epi16(static_cast<short>(query[i - 1]));
    for (std::size_t j = 1; j <= cols; ++j) {
      const __m256i up = dp[j];
      const __m256i cv = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(&block.tokens[(j - 1) * kLanes]));
      const __m256i eq = _mm256_cmpeq_epi16(cv, qv);
      const __m256i sub = _mm256_add_epi16(diag, _mm256_andnot_si256(eq, ones));
      const __m256i ins_del =
          _mm256_add_epi16(_mm256_min_epu16(up, cur), ones);
      cur = _mm256_min_epu16(sub, ins_del);
      dp[j] = cur;
      diag = up;
    }
  }
  alignas(32) std::uint16_t lanes[kLanes];
  for (int lane = 0; lane < block.count; ++lane) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes),
                       dp[block.lengths[lane]]);
    out[lane] = lanes[lane];
  }
}

#else  // !__AVX2__

bool avx2_compiled() { return false; }

void lev_block_avx2(const std::uint16_t*, std::size_t, const PhraseBlock&,
                    std::uint16_t*) {
  std::abort();  // dispatcher never routes here without avx2_compiled()
}

#endif

}  // namespace phoncorr::detail
