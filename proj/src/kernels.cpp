#include "qpart/kernels.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qpart::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel resolve(Kernel k) {
  if (k == Kernel::auto_pick) return avx2_available() ? Kernel::avx2 : Kernel::scalar;
  if (k == Kernel::avx2 && !avx2_available())
    throw std::runtime_error("avx2 kernel requested but not available on this CPU");
  return k;
}

std::string kernel_name(Kernel k) {
  switch (k) {
    case Kernel::scalar: return "scalar";
    case Kernel::avx2: return "avx2";
    default: return "auto";
  }
}

static int128 run_range(Kernel k, const uint32_t* cols, int n, uint64_t b, uint64_t e) {
#if defined(__x86_64__) || defined(_M_X64)
  if (k == Kernel::avx2) return ryser_range_avx2(cols, n, b, e);
#endif
  return ryser_range_scalar(cols, n, b, e);
}

int128 ryser_permanent(const std::vector<uint32_t>& cols, int threads, Kernel k) {
  const int n = static_cast<int>(cols.size());
  if (n == 0) return 1;
  if (n > 32) throw std::invalid_argument("ryser_permanent supports n <= 32");
  k = resolve(k);

  int max_row_sum = 0;
  {
    uint64_t row[32] = {0};
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) row[i] += (cols[j] >> i) & 1;
    for (int i = 0; i < n; ++i)
      max_row_sum = std::max<int>(max_row_sum, static_cast<int>(row[i]));
  }
  // exactness contract for the 128-bit accumulator (see kernels.hpp)
  if (max_row_sum > 0 && n * (std::log2(double(max_row_sum)) + 1.0) >= 126.0)
    throw std::invalid_argument("matrix too large for the fixed-width Ryser accumulator");

  const uint64_t total = (n == 32) ? (uint64_t{1} << 32) : (uint64_t{1} << n);
  if (threads <= 0)
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  uint64_t span = total - 1;  // ranks 1 .. total-1
  int chunks = static_cast<int>(std::min<uint64_t>(threads, std::max<uint64_t>(span, 1)));

  if (chunks <= 1 || span < 1024)
    return run_range(k, cols.data(), n, 1, total);

  std::vector<int128> partial(static_cast<size_t>(chunks), 0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(chunks));
  for (int t = 0; t < chunks; ++t) {
    uint64_t b = 1 + span * t / chunks;
    uint64_t e = 1 + span * (t + 1) / chunks;
    pool.emplace_back([&, t, b, e] { partial[static_cast<size_t>(t)] = run_range(k, cols.data(), n, b, e); });
  }
  for (auto& th : pool) th.join();
  int128 sum = 0;
  for (int128 p : partial) sum += p;
  return sum;
}

}  // namespace qpart::kernels
