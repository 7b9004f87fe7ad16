// Copyright 2026 The incontest Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "incontest/matching.hpp"

#include <limits>
#include <queue>

namespace incontest {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_l, match_r, dist;

  HopcroftKarp(int n_left, int n_right, const std::vector<std::vector<int>>& adj)
      : adj(adj), match_l(n_left, -1), match_r(n_right, -1), dist(n_left, 0) {}

  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < static_cast<int>(match_l.size()); ++u) {
      if (match_l[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reachable = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        const int w = match_r[v];
        if (w == -1) {
          reachable = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      const int w = match_r[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  int run() {
    int size = 0;
    while (bfs())
      for (int u = 0; u < static_cast<int>(match_l.size()); ++u)
        if (match_l[u] == -1 && dfs(u)) ++size;
    return size;
  }
};

}  // namespace

int max_bipartite_matching(int n_left, int n_right,
                           const std::vector<std::vector<int>>& adj,
                           std::vector<int>* match_left) {
  HopcroftKarp hk(n_left, n_right, adj);
  const int size = hk.run();
  if (match_left != nullptr) *match_left = hk.match_l;
  return size;
}

}  // namespace incontest
