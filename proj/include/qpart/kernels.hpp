#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Ryser inclusion-exclusion kernels for permanents of 0/1 matrices, the
// exact engine behind perfect-matching counts. The inner loop is a Gray-code
// walk over column subsets: per step one column is added to or subtracted
// from the n row sums and their product is accumulated with alternating
// sign. The row-sum update and the product reduction are data parallel, so
// next to the scalar reference there is an AVX2 variant selected at runtime;
// both produce bit-identical sums for any range split.

namespace qpart::kernels {

using int128 = __int128;

enum class Kernel { auto_pick, scalar, avx2 };

bool avx2_available();
Kernel resolve(Kernel k);
std::string kernel_name(Kernel k);

// Partial Ryser sum over subset ranks k in [k_begin, k_end), 1 <= k_begin,
// k_end <= 2^n. Matrix columns are bitmasks: bit i of cols[j] is entry
// (i, j). n <= 32.
//
// Width contract: every term is bounded by (max row sum)^n and there are
// fewer than 2^n terms, so the accumulator is exact whenever
// n * (log2(max row sum) + 1) < 126. Callers assert this; for the Q_d
// biadjacency family (row sums <= 6, n <= 32) the bound is ~2^115.
int128 ryser_range_scalar(const uint32_t* cols, int n, uint64_t k_begin, uint64_t k_end);

#if defined(__x86_64__) || defined(_M_X64)
int128 ryser_range_avx2(const uint32_t* cols, int n, uint64_t k_begin, uint64_t k_end);
#endif

// Full permanent; splits the subset range over `threads` workers (0 = one
// chunk per hardware thread). The result is independent of the split.
int128 ryser_permanent(const std::vector<uint32_t>& cols, int threads = 0,
                       Kernel k = Kernel::auto_pick);

}  // namespace qpart::kernels
