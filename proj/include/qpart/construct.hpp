#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qpart/partition.hpp"

// Recursive doubling construction of irreducible tight partitions: two
// distinct partitions of Q_d sharing a subcube embed into the two
// hyperplanes of Q_{d+1}, and every part present in both gets merged across
// the new free coordinate. Starting from x_d seed partitions this yields
// x_{d+1} = x_d * (x_d - 1) partitions one dimension up.

namespace qpart {

struct seed_not_found_error : std::runtime_error {
  seed_not_found_error(int d0_, uint64_t ti, uint64_t grp, const std::string& msg)
      : std::runtime_error(msg), d0(d0_), tight_irreducible(ti), max_group(grp) {}
  int d0;
  uint64_t tight_irreducible;  // how many tight irreducible partitions exist
  uint64_t max_group;          // largest family sharing one subcube
};

struct SeedFamily {
  int d0 = 0;
  Subcube anchor;
  std::vector<Partition> members;  // >= 3, sorted, all contain anchor
};

// Exhaustively enumerates the partitions of Q_{d0}, keeps the tight
// irreducible ones, groups them by contained subcube, and returns the
// lexicographically smallest anchor among the groups of maximal size.
// Throws seed_not_found_error when no group reaches size 3. d0 <= 4.
SeedFamily find_seed(int d0 = 3);

// find_seed(3), falling back to find_seed(4) when Q_3 has no family of
// three sharing a cube (which is what actually happens: its eight tight
// irreducible partitions pair up two per cube).
SeedFamily default_seed();

// One doubling step. Preconditions: same ambient dimension, b1 != b2, both
// valid and both containing `anchor` as a part. Returns the partition of
// Q_{d+1} and the merged anchor. The new coordinate is appended in the
// least significant position.
std::pair<Partition, Subcube> double_partitions(const Partition& b1,
                                                const Partition& b2,
                                                const Subcube& anchor);

// Full next level: every ordered pair (i, j), i != j, in row-major order.
std::pair<std::vector<Partition>, Subcube> expand_level(
    const std::vector<Partition>& members, const Subcube& anchor);

// Up to `limit` partitions of Q_{d_target} from the seed, deterministic
// given (seed, limit). Intermediate levels are expanded only as far as the
// requested prefix needs.
std::vector<Partition> generate(int d_target, size_t limit, const SeedFamily& seed);

}  // namespace qpart
