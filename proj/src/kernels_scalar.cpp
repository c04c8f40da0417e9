#include <bit>
#include <cstdint>

#include "qpart/kernels.hpp"

namespace qpart::kernels {

int128 ryser_range_scalar(const uint32_t* cols, int n, uint64_t k_begin, uint64_t k_end) {
  uint8_t row[32] = {0};
  int zero_rows = n;

  // row sums for the Gray code of k_begin - 1
  uint64_t subset = (k_begin - 1) ^ ((k_begin - 1) >> 1);
  for (int j = 0; j < n; ++j) {
    if (!((subset >> j) & 1)) continue;
    uint32_t m = cols[j];
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      if (row[i]++ == 0) --zero_rows;
    }
  }
  int pc = std::popcount(subset);

  int128 sum = 0;
  for (uint64_t k = k_begin; k < k_end; ++k) {
    int j = std::countr_zero(k);
    subset ^= uint64_t{1} << j;
    uint32_t m = cols[j];
    if ((subset >> j) & 1) {
      ++pc;
      while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (row[i]++ == 0) --zero_rows;
      }
    } else {
      --pc;
      while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (--row[i] == 0) ++zero_rows;
      }
    }
    if (zero_rows) continue;
    unsigned __int128 prod = row[0];
    for (int i = 1; i < n; ++i) prod *= row[i];
    if ((n - pc) & 1)
      sum -= static_cast<int128>(prod);
    else
      sum += static_cast<int128>(prod);
  }
  return sum;
}

}  // namespace qpart::kernels
