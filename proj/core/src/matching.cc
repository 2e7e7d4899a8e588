// Copyright 2026 The Parity Factor Kit Authors.
//
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

#include "pfk/matching.h"

#include <algorithm>
#include <queue>
#include <string>

#include "pfk/errors.h"

namespace pfk {
namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& graph)
      : n_(graph.num_vertices()),
        adjacency_(n_),
        mate_(n_, -1),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_) {
    for (const Edge& e : graph.edges()) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  // Starts from `initial` instead of an empty matching.
  void Seed(const std::vector<int>& initial) { mate_ = initial; }

  std::vector<int> Solve() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int w : adjacency_[v]) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int v = FindAugmentingPath(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  int LowestCommonAncestor(int a, int b) const {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(int v, int blossom_base, int child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Grows an alternating tree from `root`; returns the exposed endpoint of an
  // augmenting path (walk back through parent_/mate_), or -1.
  int FindAugmentingPath(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    in_tree_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adjacency_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Odd cycle: contract the blossom onto its base.
          const int blossom_base = LowestCommonAncestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          MarkPath(v, blossom_base, to);
          MarkPath(to, blossom_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = blossom_base;
            if (!in_tree_[i]) {
              in_tree_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          in_tree_[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

int BestFrom(int v, const std::vector<std::vector<bool>>& adjacent,
             std::vector<bool>& used) {
  const int n = static_cast<int>(used.size());
  while (v < n && used[v]) ++v;
  if (v >= n) return 0;
  used[v] = true;
  int best = BestFrom(v + 1, adjacent, used);  // v stays exposed
  for (int w = v + 1; w < n; ++w) {
    if (used[w] || !adjacent[v][w]) continue;
    used[w] = true;
    best = std::max(best, 1 + BestFrom(v + 1, adjacent, used));
    used[w] = false;
  }
  used[v] = false;
  return best;
}

}  // namespace

Matching MaxMatching(const Graph& graph) {
  return MaxMatchingFrom(graph, std::vector<int>(graph.num_vertices(), -1));
}

Matching MaxMatchingFrom(const Graph& graph, const std::vector<int>& initial) {
  const int n = graph.num_vertices();
  if (static_cast<int>(initial.size()) != n) {
    throw InvalidArgumentError("initial matching has " +
                               std::to_string(initial.size()) +
                               " entries for a graph of order " +
                               std::to_string(n));
  }
  std::vector<std::vector<int>> neighbours(n);
  for (const Edge& e : graph.edges()) {
    neighbours[e.u].push_back(e.v);
    neighbours[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    const int w = initial[v];
    if (w == -1) continue;
    if (w < 0 || w >= n || initial[w] != v ||
        std::find(neighbours[v].begin(), neighbours[v].end(), w) ==
            neighbours[v].end()) {
      throw InvalidArgumentError("initial assignment is not a matching at vertex " +
                                 std::to_string(v));
    }
  }
  BlossomMatcher matcher(graph);
  matcher.Seed(initial);
  Matching matching;
  matching.mate = matcher.Solve();
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (matching.mate[v] > v) matching.edges.push_back({v, matching.mate[v]});
  }
  return matching;
}

bool HasPerfectMatching(const Graph& graph) {
  const int n = graph.num_vertices();
  return n % 2 == 0 && 2 * MaxMatching(graph).size() == n;
}

int BruteForceMatchingSize(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n > kBruteForceMatchingMaxVertices) {
    throw CapExceededError("brute-force matching supports at most " +
                           std::to_string(kBruteForceMatchingMaxVertices) +
                           " vertices");
  }
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const Edge& e : graph.edges()) {
    adjacent[e.u][e.v] = true;
    adjacent[e.v][e.u] = true;
  }
  std::vector<bool> used(n, false);
  return BestFrom(0, adjacent, used);
}

}  // namespace pfk
