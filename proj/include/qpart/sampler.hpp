#pragma once

#include <cstdint>
#include <vector>

#include "qpart/partition.hpp"

// Seeded randomized constructions: a random family of disjoint 2-cubes
// anchored at odd vertices, completed to a {0,1,2}-partition by a maximum
// matching on the rest of the hypercube, plus a nibble-style disjoint
// r-cube cover. Every trial draws from an independent stream derived from
// (seed, trial index), so reruns are bit-identical and trial t does not
// depend on how many trials run.

namespace qpart {

struct SamplerConfig {
  int d = 0;
  double alpha = 0.01;  // odd-vertex selection probability, in (0, 0.5)
  int r = 2;            // cube dimension for the nibble sampler
  uint64_t seed = 0;
  int trials = 1;
};

struct C4Family {
  std::vector<Subcube> kept;  // pairwise disjoint 2-cubes
  uint64_t chosen = 0;        // |A|, before overlap removal
};

struct SampleReport {
  uint64_t chosen = 0;  // |A|
  uint64_t kept = 0;    // |B|
  double removal_fraction = 0.0;
  uint64_t matched = 0;
  uint64_t zero_cubes = 0;
  double degree_outlier_fraction = 0.0;
  bool matching_exact = true;
  Partition partition;
};

// Each odd vertex joins A independently with probability alpha; each u in A
// picks a partner at Hamming distance 2 uniformly over the C(d,2) choices,
// spanning a 2-cube. Overlaps are resolved by dropping the later cube in
// draw order.
C4Family sample_c4_family(const SamplerConfig& cfg, int trial);

// Maximum matching (Hopcroft-Karp for d <= 14, greedy above, labeled in the
// report) on Q_d minus the 2-cube family; matched edges become 1-cubes and
// leftovers 0-cubes.
SampleReport complete_partition(const std::vector<Subcube>& b, int d);

// Fraction of vertices of H = Q_d - V(B) whose H-degree falls outside
// J = [(1-2beta)d - d^(2/3), (1-2beta)d + d^(2/3)].
double degree_stats(const std::vector<Subcube>& b, int d, double beta);

SampleReport run_two_cubes_trial(const SamplerConfig& cfg, int trial);

struct NibbleResult {
  std::vector<Subcube> cubes;  // disjoint r-cubes
  double coverage = 0.0;
  Partition partition;  // cubes plus 0-cube fill; spectrum within {0, r}
};

// Rounds sample ~5% of the remaining vertices' worth of available r-cubes
// and discard within-round clashes; a greedy sweep then extends the family
// to a maximal one. The random phase is capped at the first 15% of vertices
// (see the implementation note on desk-scale codegrees).
NibbleResult nibble_cover(int d, int r, const SamplerConfig& cfg, int trial = 0);

}  // namespace qpart
