#include "qpart/matching.hpp"

#include <limits>
#include <queue>

namespace qpart {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatching hopcroft_karp(int n_left, int n_right,
                                const std::vector<std::vector<int>>& adj) {
  BipartiteMatching m;
  m.mate_left.assign(static_cast<size_t>(n_left), -1);
  m.mate_right.assign(static_cast<size_t>(n_right), -1);
  std::vector<int> dist(static_cast<size_t>(n_left));

  auto bfs = [&]() -> bool {
    std::queue<int> q;
    bool found = false;
    for (int l = 0; l < n_left; ++l) {
      if (m.mate_left[static_cast<size_t>(l)] < 0) {
        dist[static_cast<size_t>(l)] = 0;
        q.push(l);
      } else {
        dist[static_cast<size_t>(l)] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj[static_cast<size_t>(l)]) {
        int l2 = m.mate_right[static_cast<size_t>(r)];
        if (l2 < 0) {
          found = true;
        } else if (dist[static_cast<size_t>(l2)] == kInf) {
          dist[static_cast<size_t>(l2)] = dist[static_cast<size_t>(l)] + 1;
          q.push(l2);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int l) -> bool {
    for (int r : adj[static_cast<size_t>(l)]) {
      int l2 = m.mate_right[static_cast<size_t>(r)];
      if (l2 < 0 || (dist[static_cast<size_t>(l2)] == dist[static_cast<size_t>(l)] + 1 &&
                     self(self, l2))) {
        m.mate_left[static_cast<size_t>(l)] = r;
        m.mate_right[static_cast<size_t>(r)] = l;
        return true;
      }
    }
    dist[static_cast<size_t>(l)] = kInf;
    return false;
  };

  while (bfs())
    for (int l = 0; l < n_left; ++l)
      if (m.mate_left[static_cast<size_t>(l)] < 0 && dfs(dfs, l)) ++m.size;
  return m;
}

BipartiteMatching greedy_matching(int n_left, int n_right,
                                  const std::vector<std::vector<int>>& adj) {
  BipartiteMatching m;
  m.mate_left.assign(static_cast<size_t>(n_left), -1);
  m.mate_right.assign(static_cast<size_t>(n_right), -1);
  for (int l = 0; l < n_left; ++l)
    for (int r : adj[static_cast<size_t>(l)])
      if (m.mate_right[static_cast<size_t>(r)] < 0) {
        m.mate_left[static_cast<size_t>(l)] = r;
        m.mate_right[static_cast<size_t>(r)] = l;
        ++m.size;
        break;
      }
  return m;
}

}  // namespace qpart
