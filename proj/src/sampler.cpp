#include "qpart/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "qpart/matching.hpp"
#include "qpart/rng.hpp"

namespace qpart {

namespace {

std::vector<uint32_t> coordinate_pairs(int d) {
  std::vector<uint32_t> pairs;
  pairs.reserve(static_cast<size_t>(d) * (d - 1) / 2);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      pairs.push_back(coord_bit(d, i) | coord_bit(d, j));
  return pairs;
}

void mark_cube(const Subcube& c, std::vector<char>& covered) {
  uint32_t fm = c.free_mask();
  for (uint32_t x = 0; x < (1u << c.dimension()); ++x)
    covered[c.fixed_vals | spread_bits(x, fm)] = 1;
}

bool cube_clashes(const Subcube& c, const std::vector<char>& covered) {
  uint32_t fm = c.free_mask();
  for (uint32_t x = 0; x < (1u << c.dimension()); ++x)
    if (covered[c.fixed_vals | spread_bits(x, fm)]) return true;
  return false;
}

}  // namespace

C4Family sample_c4_family(const SamplerConfig& cfg, int trial) {
  check_dim(cfg.d);
  if (cfg.d < 2) throw std::invalid_argument("sample_c4_family requires d >= 2");
  if (cfg.alpha < 0.0 || cfg.alpha >= 0.5)
    throw std::invalid_argument("alpha must lie in [0, 0.5)");
  auto gen = rng::trial_stream(cfg.seed, static_cast<uint64_t>(trial));
  const auto pairs = coordinate_pairs(cfg.d);
  const uint32_t full = full_mask(cfg.d);

  C4Family fam;
  std::vector<char> covered(size_t{1} << cfg.d, 0);
  for (uint32_t u = 0; u <= full; ++u) {
    if (is_even(u)) continue;
    if (rng::uniform01(gen) >= cfg.alpha) continue;
    ++fam.chosen;
    uint32_t free = pairs[rng::uniform_below(gen, pairs.size())];
    Subcube c(full & ~free, u & ~free, cfg.d);
    if (cube_clashes(c, covered)) continue;  // drop the later cube
    mark_cube(c, covered);
    fam.kept.push_back(c);
  }
  return fam;
}

double degree_stats(const std::vector<Subcube>& b, int d, double beta) {
  check_dim(d);
  std::vector<char> covered(size_t{1} << d, 0);
  for (const auto& c : b) mark_cube(c, covered);
  double lo = (1.0 - 2.0 * beta) * d - std::cbrt(double(d) * d);
  double hi = (1.0 - 2.0 * beta) * d + std::cbrt(double(d) * d);
  uint64_t verts = 0, outliers = 0;
  for (uint32_t v = 0; v <= full_mask(d); ++v) {
    if (covered[v]) continue;
    ++verts;
    int deg = 0;
    for (int i = 1; i <= d; ++i)
      if (!covered[v ^ coord_bit(d, i)]) ++deg;
    if (deg < lo || deg > hi) ++outliers;
  }
  return verts ? double(outliers) / double(verts) : 0.0;
}

SampleReport complete_partition(const std::vector<Subcube>& b, int d) {
  check_dim(d);
  std::vector<char> covered(size_t{1} << d, 0);
  for (const auto& c : b) {
    if (c.dim_ambient != d || c.dimension() != 2)
      throw std::invalid_argument("complete_partition expects disjoint 2-cubes");
    if (cube_clashes(c, covered))
      throw std::invalid_argument("complete_partition expects disjoint 2-cubes");
    mark_cube(c, covered);
  }

  // bipartite remainder H
  std::vector<uint32_t> evens, odds;
  std::vector<int32_t> odd_index(size_t{1} << d, -1);
  for (uint32_t v = 0; v <= full_mask(d); ++v) {
    if (covered[v]) continue;
    if (is_even(v)) {
      evens.push_back(v);
    } else {
      odd_index[v] = static_cast<int32_t>(odds.size());
      odds.push_back(v);
    }
  }
  std::vector<std::vector<int>> adj(evens.size());
  for (size_t i = 0; i < evens.size(); ++i)
    for (int c = 1; c <= d; ++c) {
      uint32_t w = evens[i] ^ coord_bit(d, c);
      if (!covered[w]) adj[i].push_back(odd_index[w]);
    }

  const bool exact = d <= 14;
  BipartiteMatching m =
      exact ? hopcroft_karp(static_cast<int>(evens.size()), static_cast<int>(odds.size()), adj)
            : greedy_matching(static_cast<int>(evens.size()), static_cast<int>(odds.size()), adj);

  std::vector<Subcube> parts = b;
  const uint32_t full = full_mask(d);
  uint64_t zero_cubes = 0;
  for (size_t i = 0; i < evens.size(); ++i) {
    if (m.mate_left[i] >= 0) {
      uint32_t other = odds[static_cast<size_t>(m.mate_left[i])];
      uint32_t freebit = evens[i] ^ other;
      parts.emplace_back(full & ~freebit, evens[i] & ~freebit, d);
    } else {
      parts.emplace_back(full, evens[i], d);
      ++zero_cubes;
    }
  }
  for (size_t j = 0; j < odds.size(); ++j)
    if (m.mate_right[j] < 0) {
      parts.emplace_back(full, odds[j], d);
      ++zero_cubes;
    }

  SampleReport rep;
  rep.chosen = rep.kept = b.size();
  rep.matched = static_cast<uint64_t>(m.size);
  rep.zero_cubes = zero_cubes;
  rep.matching_exact = exact;
  rep.partition = Partition(d, std::move(parts));
  ValidationReport v = validate(rep.partition);
  if (!v.ok()) throw std::logic_error("completed partition failed validation: " + v.message());
  double n = double(uint64_t{1} << (d - 1));
  rep.degree_outlier_fraction = degree_stats(b, d, double(b.size()) / n);
  return rep;
}

SampleReport run_two_cubes_trial(const SamplerConfig& cfg, int trial) {
  C4Family fam = sample_c4_family(cfg, trial);
  SampleReport rep = complete_partition(fam.kept, cfg.d);
  rep.chosen = fam.chosen;
  rep.removal_fraction =
      fam.chosen ? double(fam.chosen - fam.kept.size()) / double(fam.chosen) : 0.0;
  return rep;
}

NibbleResult nibble_cover(int d, int r, const SamplerConfig& cfg, int trial) {
  check_dim(d);
  if (r < 2 || r > d) throw std::invalid_argument("nibble_cover requires 2 <= r <= d");
  auto gen = rng::trial_stream(cfg.seed, static_cast<uint64_t>(trial));
  const uint32_t full = full_mask(d);
  const uint64_t cube_size = uint64_t{1} << r;

  // all r-subcubes, canonical order
  std::vector<Subcube> cubes;
  for (const Subcube& c : all_subcubes(d))
    if (c.dimension() == r) cubes.push_back(c);

  std::vector<char> covered(size_t{1} << d, 0);
  const uint64_t total = uint64_t{1} << d;
  uint64_t remaining = total;
  NibbleResult out;

  // Nibble rounds: sample ~5% of the remaining vertices' worth of cubes per
  // round. The random phase is capped at the first 15% of vertices: at desk
  // scale the codegree C(d-1,r-1) is a sizable fraction of the degree
  // C(d,r), so long random phases strand vertices that the structured sweep
  // below would have tiled.
  int stalled = 0;
  while (stalled < 3 && double(remaining) > 0.85 * double(total)) {
    uint64_t want = uint64_t(std::llround(0.05 * double(remaining) / double(cube_size)));
    if (want < 2) break;
    std::vector<size_t> avail;
    for (size_t i = 0; i < cubes.size(); ++i)
      if (!cube_clashes(cubes[i], covered)) avail.push_back(i);
    if (avail.empty()) break;
    size_t k = std::min<size_t>(want, avail.size());
    for (size_t i = 0; i < k; ++i) {
      size_t j = i + rng::uniform_below(gen, avail.size() - i);
      std::swap(avail[i], avail[j]);
    }
    size_t accepted = 0;
    for (size_t i = 0; i < k; ++i) {
      const Subcube& c = cubes[avail[i]];
      if (cube_clashes(c, covered)) continue;  // within-round clash
      mark_cube(c, covered);
      out.cubes.push_back(c);
      remaining -= cube_size;
      ++accepted;
    }
    stalled = accepted ? 0 : stalled + 1;
  }

  // greedy sweep: lowest uncovered vertex gets its first available cube,
  // then a canonical-order pass mops up to a maximal family
  for (uint32_t v = 0; v <= full; ++v) {
    if (covered[v]) continue;
    for (const auto& c : subcubes_through(Vertex(v, d), DimSet::of({r})))
      if (!cube_clashes(c, covered)) {
        mark_cube(c, covered);
        out.cubes.push_back(c);
        remaining -= cube_size;
        break;
      }
  }
  for (const auto& c : cubes)
    if (!cube_clashes(c, covered)) {
      mark_cube(c, covered);
      out.cubes.push_back(c);
      remaining -= cube_size;
    }

  out.coverage = 1.0 - double(remaining) / double(total);
  std::vector<Subcube> parts = out.cubes;
  for (uint32_t v = 0; v <= full; ++v)
    if (!covered[v]) parts.emplace_back(full, v, d);
  out.partition = Partition(d, std::move(parts));
  ValidationReport v = validate(out.partition);
  if (!v.ok()) throw std::logic_error("nibble partition failed validation: " + v.message());
  return out;
}

}  // namespace qpart
