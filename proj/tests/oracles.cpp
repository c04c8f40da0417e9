#include "oracles.hpp"

#include <algorithm>
#include <bit>

#include "qpart/rng.hpp"

namespace qpart::oracle {

namespace {

uint64_t cube_vertices(const Subcube& c) {
  uint64_t m = 0;
  uint32_t fm = c.free_mask();
  for (uint32_t x = 0; x < (1u << c.dimension()); ++x)
    m |= uint64_t{1} << (c.fixed_vals | spread_bits(x, fm));
  return m;
}

}  // namespace

uint64_t count_partitions(int d, DimSet dims) {
  std::vector<uint64_t> masks;
  for (const Subcube& c : all_subcubes(d))
    if (dims.contains(c.dimension())) masks.push_back(cube_vertices(c));
  const uint64_t full =
      (d == 6) ? ~uint64_t{0} : ((uint64_t{1} << (uint64_t{1} << d)) - 1);
  uint64_t count = 0;
  auto rec = [&](auto&& self, uint64_t covered) -> void {
    if (covered == full) {
      ++count;
      return;
    }
    uint64_t low = uint64_t{1} << std::countr_one(covered);
    for (uint64_t m : masks)
      if ((m & low) && !(m & covered)) self(self, covered | m);
  };
  rec(rec, 0);
  return count;
}

namespace {

uint64_t count_matchings_impl(int d, bool perfect) {
  const uint32_t full = full_mask(d);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v <= full; ++v)
    for (int i = 1; i <= d; ++i) {
      uint32_t w = v ^ coord_bit(d, i);
      if (v < w) edges.emplace_back(v, w);
    }
  uint64_t count = 0;
  // process vertices in order; each is either skipped (non-perfect only) or
  // matched to a larger unused neighbor
  auto rec = [&](auto&& self, uint64_t used, uint32_t v) -> void {
    while (v <= full && (used >> v) & 1) ++v;
    if (v > full) {
      ++count;
      return;
    }
    if (!perfect) self(self, used | (uint64_t{1} << v), v + 1);
    for (int i = 1; i <= d; ++i) {
      uint32_t w = v ^ coord_bit(d, i);
      if (w > v && !((used >> w) & 1))
        self(self, used | (uint64_t{1} << v) | (uint64_t{1} << w), v + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace

uint64_t count_matchings(int d) { return count_matchings_impl(d, false); }
uint64_t count_perfect_matchings(int d) { return count_matchings_impl(d, true); }

bool is_irreducible_subfamily(const Partition& p) {
  const size_t k = p.size();
  if (k > 20) throw std::invalid_argument("subfamily oracle supports <= 20 parts");
  std::vector<uint64_t> vm(k);
  for (size_t i = 0; i < k; ++i) vm[i] = cube_vertices(p.cubes[i]);
  const uint32_t dfull = full_mask(p.d);

  for (uint32_t sub = 1; sub < (1u << k); ++sub) {
    int members = std::popcount(sub);
    if (members < 2 || members == static_cast<int>(k)) continue;
    uint64_t u = 0;
    for (uint32_t s = sub; s;) {
      int i = std::countr_zero(s);
      s &= s - 1;
      u |= vm[static_cast<size_t>(i)];
    }
    // is u exactly the vertex set of some subcube?
    int sz = std::popcount(u);
    if (sz & (sz - 1)) continue;
    uint32_t lo = static_cast<uint32_t>(std::countr_zero(u));
    uint32_t xorm = 0;
    for (uint64_t rest = u; rest;) {
      uint32_t v = static_cast<uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      xorm |= v ^ lo;
    }
    if ((1 << std::popcount(xorm)) != sz) continue;
    Subcube cand(dfull & ~xorm, lo & ~xorm, p.d);
    if (cube_vertices(cand) == u) return false;
  }
  return true;
}

uint64_t permanent_naive(const std::vector<uint32_t>& cols, int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  uint64_t total = 0;
  do {
    uint64_t prod = 1;
    for (int j = 0; j < n; ++j)
      prod *= (cols[static_cast<size_t>(j)] >> perm[static_cast<size_t>(j)]) & 1u;
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Partition random_partition(int d, DimSet dims, std::mt19937_64& gen) {
  if (!dims.contains(0))
    throw std::invalid_argument("random_partition needs 0-cubes to always terminate");
  const uint64_t full = (uint64_t{1} << (uint64_t{1} << d)) - 1;
  std::vector<Subcube> chosen;
  uint64_t covered = 0;
  while (covered != full) {
    uint32_t v = static_cast<uint32_t>(std::countr_one(covered));
    auto cands = subcubes_through(Vertex(v, d), dims);
    std::vector<Subcube> fitting;
    for (const auto& c : cands)
      if (!(cube_vertices(c) & covered)) fitting.push_back(c);
    const Subcube& pick = fitting[rng::uniform_below(gen, fitting.size())];
    covered |= cube_vertices(pick);
    chosen.push_back(pick);
  }
  return Partition(d, std::move(chosen));
}

}  // namespace qpart::oracle
