#pragma once

#include <vector>

namespace qpart {

struct BipartiteMatching {
  std::vector<int> mate_left;   // -1 = unmatched
  std::vector<int> mate_right;
  int size = 0;
};

// Hopcroft-Karp maximum matching; adj[l] lists right-side neighbors of l.
BipartiteMatching hopcroft_karp(int n_left, int n_right,
                                const std::vector<std::vector<int>>& adj);

// Single greedy pass, used where an exact matching is too expensive.
BipartiteMatching greedy_matching(int n_left, int n_right,
                                  const std::vector<std::vector<int>>& adj);

}  // namespace qpart
