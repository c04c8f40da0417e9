#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstdint>

#include "qpart/kernels.hpp"

namespace qpart::kernels {

namespace {

// product of the 32 byte lanes (pad lanes hold 1); exact for lane products
// up to the caller's width contract
inline unsigned __int128 lane_product(__m256i rows) {
  const __m256i lo16 = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(rows));
  const __m256i hi16 = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(rows, 1));
  const __m256i mask16 = _mm256_set1_epi32(0xFFFF);

  // adjacent u16 pairs -> u32 products (<= 255^2)
  __m256i pa = _mm256_and_si256(_mm256_mullo_epi16(lo16, _mm256_srli_epi32(lo16, 16)), mask16);
  __m256i pb = _mm256_and_si256(_mm256_mullo_epi16(hi16, _mm256_srli_epi32(hi16, 16)), mask16);

  // adjacent u32 pairs -> u64 products (<= 255^4)
  __m256i qa = _mm256_mul_epu32(pa, _mm256_srli_epi64(pa, 32));
  __m256i qb = _mm256_mul_epu32(pb, _mm256_srli_epi64(pb, 32));

  alignas(32) uint64_t q[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(q), qa);
  _mm256_store_si256(reinterpret_cast<__m256i*>(q + 4), qb);

  unsigned __int128 prod = q[0];
  for (int i = 1; i < 8; ++i) prod *= q[i];
  return prod;
}

}  // namespace

int128 ryser_range_avx2(const uint32_t* cols, int n, uint64_t k_begin, uint64_t k_end) {
  // per-column byte vectors (lane i = entry (i, j)); lanes >= n stay 0
  alignas(32) uint8_t colbytes[32][32] = {};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) colbytes[j][i] = (cols[j] >> i) & 1;
  __m256i colvec[32];
  for (int j = 0; j < n; ++j)
    colvec[j] = _mm256_load_si256(reinterpret_cast<const __m256i*>(colbytes[j]));

  // rows start as the pad vector: 0 in live lanes, 1 in pad lanes
  alignas(32) uint8_t pad[32];
  for (int i = 0; i < 32; ++i) pad[i] = i < n ? 0 : 1;
  __m256i rows = _mm256_load_si256(reinterpret_cast<const __m256i*>(pad));

  uint64_t subset = (k_begin - 1) ^ ((k_begin - 1) >> 1);
  for (int j = 0; j < n; ++j)
    if ((subset >> j) & 1) rows = _mm256_add_epi8(rows, colvec[j]);
  int pc = std::popcount(subset);

  const __m256i zero = _mm256_setzero_si256();
  int128 sum = 0;
  for (uint64_t k = k_begin; k < k_end; ++k) {
    int j = std::countr_zero(k);
    subset ^= uint64_t{1} << j;
    if ((subset >> j) & 1) {
      rows = _mm256_add_epi8(rows, colvec[j]);
      ++pc;
    } else {
      rows = _mm256_sub_epi8(rows, colvec[j]);
      --pc;
    }
    // pad lanes are never zero, so any zero byte is a zero row sum
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi8(rows, zero))) continue;
    unsigned __int128 prod = lane_product(rows);
    if ((n - pc) & 1)
      sum -= static_cast<int128>(prod);
    else
      sum += static_cast<int128>(prod);
  }
  return sum;
}

}  // namespace qpart::kernels

#endif  // x86-64
