#include "qpart/counting.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>

namespace qpart {

namespace {

uint64_t cover_mask(const Subcube& c) {
  uint64_t m = 0;
  uint32_t fm = c.free_mask();
  for (uint32_t x = 0; x < (1u << c.dimension()); ++x)
    m |= uint64_t{1} << (c.fixed_vals | spread_bits(x, fm));
  return m;
}

struct Candidates {
  // cubes through each vertex with dimension in dims, canonical order
  std::vector<std::vector<Subcube>> cubes;
  std::vector<std::vector<uint64_t>> masks;

  Candidates(int d, DimSet dims) {
    size_t nverts = size_t{1} << d;
    cubes.resize(nverts);
    masks.resize(nverts);
    for (uint32_t v = 0; v < nverts; ++v) {
      auto through = subcubes_through(Vertex(v, d), dims);
      std::sort(through.begin(), through.end());
      for (const auto& c : through) {
        cubes[v].push_back(c);
        masks[v].push_back(cover_mask(c));
      }
    }
  }
};

inline uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t s;
  if (__builtin_add_overflow(a, b, &s))
    throw std::overflow_error("partition count exceeded 64 bits");
  return s;
}

// Lossy open-addressing memo for the d = 5 covered-mask space. Keys with a
// smaller covered count sit closer to the root and guard larger subtrees,
// so eviction prefers to keep them; a dropped entry is recomputed, never
// wrong.
class LossyMemo {
 public:
  explicit LossyMemo(int bits) : shift_(64 - bits), slots_(size_t{1} << bits) {}

  bool find(uint32_t key, uint64_t& val) const {
    size_t h = index(key);
    for (size_t i = 0; i < kProbe; ++i) {
      const Slot& s = slots_[(h + i) & (slots_.size() - 1)];
      if (s.key == key) {
        val = s.val;
        return true;
      }
      if (s.key == kEmpty) return false;
    }
    return false;
  }

  void store(uint32_t key, uint64_t val) {
    size_t h = index(key);
    size_t worst = h;
    int worst_pc = -1;
    for (size_t i = 0; i < kProbe; ++i) {
      size_t at = (h + i) & (slots_.size() - 1);
      Slot& s = slots_[at];
      if (s.key == kEmpty || s.key == key) {
        s.key = key;
        s.val = val;
        return;
      }
      int pc = std::popcount(s.key);
      if (pc > worst_pc) {
        worst_pc = pc;
        worst = at;
      }
    }
    if (std::popcount(key) < worst_pc) {
      slots_[worst].key = key;
      slots_[worst].val = val;
    }
  }

 private:
  struct Slot {
    uint32_t key = kEmpty;
    uint64_t val = 0;
  };
  static constexpr uint32_t kEmpty = 0xFFFFFFFFu;  // the full mask is never memoized
  static constexpr size_t kProbe = 8;

  size_t index(uint32_t key) const {
    uint64_t x = key;
    x *= 0x9E3779B97F4A7C15ull;
    x ^= x >> 29;
    x *= 0xBF58476D1CE4E5B9ull;
    return size_t(x >> shift_);
  }

  int shift_;
  std::vector<Slot> slots_;
};

struct DenseMemo {
  std::vector<uint64_t> vals;
  explicit DenseMemo(int d) : vals(size_t{1} << (size_t{1} << d), kUnset) {}
  static constexpr uint64_t kUnset = ~uint64_t{0};
  bool find(uint32_t key, uint64_t& val) const {
    if (vals[key] == kUnset) return false;
    val = vals[key];
    return true;
  }
  void store(uint32_t key, uint64_t val) { vals[key] = val; }
};

template <class Memo>
struct Counter {
  const Candidates& cand;
  Memo memo;
  uint64_t full;
  uint64_t nodes = 0;
  uint64_t node_limit;

  uint64_t run(uint64_t covered) {
    if (covered == full) return 1;
    if (node_limit && ++nodes > node_limit)
      throw resource_limit_error("partition counter exceeded its node budget");
    uint32_t key = static_cast<uint32_t>(covered);
    uint64_t memoized;
    if (memo.find(key, memoized)) return memoized;
    int v = std::countr_one(covered);  // lowest uncovered vertex
    uint64_t total = 0;
    for (uint64_t m : cand.masks[static_cast<size_t>(v)])
      if (!(m & covered)) total = checked_add(total, run(covered | m));
    memo.store(key, total);
    return total;
  }
};

uint64_t count_u64(int d, DimSet dims, const CountOptions& opt) {
  Candidates cand(d, dims);
  const uint64_t full =
      (d == 6) ? ~uint64_t{0} : ((uint64_t{1} << (uint64_t{1} << d)) - 1);

  if (d <= 4) {
    Counter<DenseMemo> c{cand, DenseMemo(d), full, 0, opt.node_limit};
    return c.run(0);
  }

  // d == 5: split the top-level branches (cubes through vertex 0) over
  // workers, each with its own lossy memo; integer partial sums make the
  // result independent of the split.
  const auto& top = cand.masks[0];
  int threads = opt.threads > 0
                    ? opt.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(top.size()));
  if (threads <= 1) {
    Counter<LossyMemo> c{cand, LossyMemo(opt.memo_bits), full, 0, opt.node_limit};
    return c.run(0);
  }

  uint64_t per_branch_limit = opt.node_limit ? opt.node_limit / top.size() : 0;
  std::vector<uint64_t> partial(top.size(), 0);
  std::atomic<size_t> next{0};
  std::atomic<bool> exhausted{false};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      Counter<LossyMemo> c{cand, LossyMemo(opt.memo_bits), full, 0, per_branch_limit};
      for (size_t i = next.fetch_add(1); i < top.size(); i = next.fetch_add(1)) {
        try {
          c.nodes = 0;
          partial[i] = c.run(top[i]);
        } catch (const resource_limit_error&) {
          exhausted = true;
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (exhausted)
    throw resource_limit_error("partition counter exceeded its node budget");
  uint64_t total = 0;
  for (uint64_t p : partial) total = checked_add(total, p);
  return total;
}

}  // namespace

BigCount count_partitions(int d, DimSet dims, const CountOptions& opt) {
  if (dims.empty()) throw std::invalid_argument("empty dimension set");
  if (d == 0) return dims.contains(0) ? 1 : 0;
  if (d < 0 || d > 5)
    throw std::invalid_argument("count_partitions supports 0 <= d <= 5");
  return BigCount(count_u64(d, dims, opt));
}

void enumerate_partitions(int d, DimSet dims,
                          const std::function<bool(const Partition&)>& cb) {
  check_dim(d);
  if (d > 4)
    throw std::invalid_argument("enumerate_partitions supports d <= 4");
  if (dims.empty()) throw std::invalid_argument("empty dimension set");
  Candidates cand(d, dims);
  const uint64_t full = (uint64_t{1} << (uint64_t{1} << d)) - 1;
  std::vector<Subcube> stack;
  bool stop = false;

  auto rec = [&](auto&& self, uint64_t covered) -> void {
    if (stop) return;
    if (covered == full) {
      if (!cb(Partition(d, stack))) stop = true;
      return;
    }
    int v = std::countr_one(covered);
    const auto& masks = cand.masks[static_cast<size_t>(v)];
    const auto& cubes = cand.cubes[static_cast<size_t>(v)];
    for (size_t i = 0; i < masks.size(); ++i) {
      if (masks[i] & covered) continue;
      stack.push_back(cubes[i]);
      self(self, covered | masks[i]);
      stack.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

BigCount count_pm_permanent(int d, const CountOptions& opt) {
  if (d < 1 || d > 6)
    throw std::invalid_argument("count_pm_permanent supports 1 <= d <= 6");
  const uint32_t full = full_mask(d);
  std::vector<uint32_t> evens, odds;
  for (uint32_t v = 0; v <= full; ++v)
    (is_even(v) ? evens : odds).push_back(v);
  const size_t n = evens.size();
  std::vector<uint32_t> cols(n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      if (std::popcount(evens[i] ^ odds[j]) == 1) cols[j] |= uint32_t{1} << i;

  kernels::int128 per = kernels::ryser_permanent(cols, opt.threads, opt.kernel);
  if (per < 0) throw std::logic_error("negative permanent");
  unsigned __int128 u = static_cast<unsigned __int128>(per);
  BigCount out = static_cast<uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<uint64_t>(u);
  return out;
}

std::optional<BigCount> known_value(Quantity q, int d) {
  switch (q) {
    case Quantity::partition_count: {
      static const std::array<const char*, 6> f = {
          "1", "2", "8", "154", "89512", "71319425714"};
      if (d >= 0 && d < static_cast<int>(f.size())) return BigCount(f[static_cast<size_t>(d)]);
      return std::nullopt;
    }
    case Quantity::perfect_matchings: {
      static const std::array<const char*, 7> m = {
          "1", "2", "9", "272", "589185", "16332454526976",
          "391689748492473664721077609089"};
      if (d >= 1 && d <= static_cast<int>(m.size())) return BigCount(m[static_cast<size_t>(d - 1)]);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

VerifyReport verify_known(int d_max, const CountOptions& opt) {
  if (d_max < 0 || d_max > 4)
    throw std::invalid_argument("verify_known supports d_max <= 4");
  VerifyReport rep;

  std::vector<BigCount> f(static_cast<size_t>(d_max) + 1), m1(static_cast<size_t>(d_max) + 1),
      mp(static_cast<size_t>(d_max) + 1), f2(static_cast<size_t>(d_max) + 1);

  for (int d = 0; d <= d_max; ++d) {
    f[static_cast<size_t>(d)] = count_partitions(d, DimSet::full(std::max(d, 1)), opt);
    auto want = known_value(Quantity::partition_count, d);
    bool ok = want && *want == f[static_cast<size_t>(d)];
    rep.add({"f", d, f[static_cast<size_t>(d)].str(), want ? "paper" : "computed",
             ok ? "pass" : "fail", ok});
  }
  for (int d = 1; d <= d_max; ++d) {
    m1[static_cast<size_t>(d)] = count_partitions(d, DimSet::of({1}), opt);
    BigCount viaper = count_pm_permanent(d, opt);
    auto want = known_value(Quantity::perfect_matchings, d);
    bool ok = m1[static_cast<size_t>(d)] == viaper && want && *want == m1[static_cast<size_t>(d)];
    rep.add({"m", d, m1[static_cast<size_t>(d)].str(), "paper", ok ? "pass" : "fail", ok});
  }
  for (int d = 1; d <= d_max; ++d) {
    mp[static_cast<size_t>(d)] = count_partitions(d, DimSet::of({0, 1}), opt);
    rep.add({"m'", d, mp[static_cast<size_t>(d)].str(), "computed", "pass", true});
  }
  for (int d = 1; d <= d_max; ++d) {
    f2[static_cast<size_t>(d)] = count_partitions(d, DimSet::up_to(2), opt);
    rep.add({"f_le2", d, f2[static_cast<size_t>(d)].str(), "computed", "pass", true});
  }
  for (int d = 1; d <= d_max; ++d) {
    bool ok = m1[static_cast<size_t>(d)] <= mp[static_cast<size_t>(d)] &&
              mp[static_cast<size_t>(d)] <= f2[static_cast<size_t>(d)] &&
              f2[static_cast<size_t>(d)] <= f[static_cast<size_t>(d)];
    rep.add({"chain", d, "m<=m'<=f_le2<=f", "computed", ok ? "pass" : "fail", ok});
  }
  return rep;
}

}  // namespace qpart
