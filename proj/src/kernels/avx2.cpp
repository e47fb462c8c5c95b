// Copyright 2026 The tildeiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2 variants of the kernels in scalar.cpp. This translation unit is the
// only one compiled with -mavx2; callers reach it through kernels::active().

#include "tildeiso/kernels.hpp"

#if defined(TILDEISO_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>

namespace tildeiso::kernels {

namespace {

// Per-64-bit-lane popcount via nibble lookup and SAD against zero.
inline __m256i popcount_epi64(__m256i x) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

void tilde_distance_batch_avx2(std::uint64_t u, const std::uint64_t* vs, std::size_t count,
                               unsigned length, std::uint8_t* out) {
  const std::uint64_t mask_bits =
      length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
  const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(mask_bits));
  const __m256i even = _mm256_set1_epi64x(0x5555555555555555LL);
  const __m256i uu = _mm256_set1_epi64x(static_cast<long long>(u));
  const __m256i u_alternation = _mm256_xor_si256(uu, _mm256_srli_epi64(uu, 1));

  std::size_t k = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; k + 4 <= count; k += 4) {
    const __m256i vv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vs + k));
    const __m256i diff = _mm256_and_si256(_mm256_xor_si256(uu, vv), mask);
    const __m256i edges =
        _mm256_and_si256(_mm256_and_si256(diff, _mm256_srli_epi64(diff, 1)), u_alternation);
    const __m256i starts = _mm256_andnot_si256(_mm256_slli_epi64(edges, 1), edges);
    const __m256i carried = _mm256_add_epi64(edges, _mm256_and_si256(starts, even));
    const __m256i even_runs = _mm256_andnot_si256(carried, edges);
    const __m256i odd_runs = _mm256_andnot_si256(even_runs, edges);
    const __m256i paired = _mm256_or_si256(_mm256_and_si256(even_runs, even),
                                           _mm256_andnot_si256(even, odd_runs));
    const __m256i dist = _mm256_sub_epi64(popcount_epi64(diff), popcount_epi64(paired));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), dist);
    for (int i = 0; i < 4; ++i) out[k + i] = static_cast<std::uint8_t>(lanes[i]);
  }
  for (; k < count; ++k) {
    out[k] = static_cast<std::uint8_t>(tilde_distance_code(u, vs[k], length));
  }
}

void hamming_distance_batch_avx2(std::uint64_t u, const std::uint64_t* vs, std::size_t count,
                                 std::uint8_t* out) {
  const __m256i uu = _mm256_set1_epi64x(static_cast<long long>(u));
  std::size_t k = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; k + 4 <= count; k += 4) {
    const __m256i vv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vs + k));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes),
                       popcount_epi64(_mm256_xor_si256(uu, vv)));
    for (int i = 0; i < 4; ++i) out[k + i] = static_cast<std::uint8_t>(lanes[i]);
  }
  for (; k < count; ++k) out[k] = static_cast<std::uint8_t>(hamming_distance_code(u, vs[k]));
}

void scan_windows_avx2(const WindowScan& scan, std::uint32_t first, std::size_t count,
                       std::uint8_t* flags) {
  const std::uint32_t f_mask_bits =
      scan.f_length >= 32 ? ~0U : ((std::uint32_t{1} << scan.f_length) - 1);
  const std::uint32_t f_alternation_bits =
      (scan.f_code ^ (scan.f_code >> 1)) & (f_mask_bits >> 1);
  const unsigned windows =
      scan.word_length >= scan.f_length ? scan.word_length - scan.f_length + 1 : 0;
  const bool tilde = scan.metric == Metric::kTilde;

  const __m256i zero = _mm256_setzero_si256();
  const __m256i f_mask = _mm256_set1_epi32(static_cast<int>(f_mask_bits));
  const __m256i f_code = _mm256_set1_epi32(static_cast<int>(scan.f_code));
  const __m256i f_alternation = _mm256_set1_epi32(static_cast<int>(f_alternation_bits));
  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i near_cap = _mm256_set1_epi32(kNearMax);

  std::size_t k = 0;
  alignas(32) std::uint32_t lanes[8];
  for (; k + 8 <= count; k += 8) {
    const __m256i words = _mm256_add_epi32(
        _mm256_set1_epi32(static_cast<int>(first + static_cast<std::uint32_t>(k))),
        lane_offsets);
    __m256i contains = zero;
    __m256i near = zero;
    for (unsigned s = 0; s < windows; ++s) {
      const __m256i window =
          _mm256_and_si256(_mm256_srl_epi32(words, _mm_cvtsi32_si128(static_cast<int>(s))),
                           f_mask);
      const __m256i x = _mm256_xor_si256(window, f_code);
      const __m256i exact = _mm256_cmpeq_epi32(x, zero);
      contains = _mm256_or_si256(contains, exact);
      const __m256i low = _mm256_and_si256(x, _mm256_sub_epi32(zero, x));
      __m256i hit = _mm256_andnot_si256(exact, _mm256_cmpeq_epi32(x, low));
      if (tilde) {
        const __m256i pair = _mm256_cmpeq_epi32(_mm256_xor_si256(x, low),
                                                _mm256_slli_epi32(low, 1));
        const __m256i alternates =
            _mm256_andnot_si256(_mm256_cmpeq_epi32(_mm256_and_si256(low, f_alternation), zero),
                                _mm256_set1_epi32(-1));
        hit = _mm256_or_si256(hit, _mm256_and_si256(pair, alternates));
      }
      near = _mm256_sub_epi32(near, hit);
    }
    near = _mm256_min_epu32(near, near_cap);
    const __m256i packed = _mm256_or_si256(_mm256_and_si256(contains, _mm256_set1_epi32(1)),
                                           _mm256_slli_epi32(near, kNearShift));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), packed);
    for (int i = 0; i < 8; ++i) flags[k + i] = static_cast<std::uint8_t>(lanes[i]);
  }
  if (k < count) {
    scalar_table().scan_windows(scan, first + static_cast<std::uint32_t>(k), count - k,
                                flags + k);
  }
}

constexpr KernelTable kAvx2Table{
    Isa::kAvx2,
    &tilde_distance_batch_avx2,
    &hamming_distance_batch_avx2,
    &scan_windows_avx2,
};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace tildeiso::kernels

#else

namespace tildeiso::kernels {

const KernelTable* avx2_table() { return nullptr; }

}  // namespace tildeiso::kernels

#endif
