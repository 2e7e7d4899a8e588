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

#include "pfk/connectivity.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "pfk/errors.h"

namespace pfk {
namespace {

// Dinic's algorithm on the undirected unit-capacity network of a multigraph:
// every edge becomes one arc pair with capacity 1 in each direction.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(const Graph& graph)
      : n_(graph.num_vertices()), head_(n_), level_(n_), next_arc_(n_) {
    arcs_.reserve(2 * graph.num_edges());
    for (const Edge& e : graph.edges()) {
      head_[e.u].push_back(static_cast<int>(arcs_.size()));
      arcs_.push_back({e.v, 1});
      head_[e.v].push_back(static_cast<int>(arcs_.size()));
      arcs_.push_back({e.u, 1});
    }
  }

  int MaxFlow(int source, int sink) {
    for (Arc& arc : arcs_) arc.residual = 1;
    int flow = 0;
    while (BuildLevels(source, sink)) {
      std::fill(next_arc_.begin(), next_arc_.end(), 0);
      while (int pushed = Push(source, sink, std::numeric_limits<int>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

  // Vertices reachable from `source` in the residual graph of the last flow.
  VertexSet SourceSide(int source) const {
    VertexSet side(n_);
    std::vector<int> stack = {source};
    side.Insert(source);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int id : head_[v]) {
        const Arc& arc = arcs_[id];
        if (arc.residual > 0 && !side.Contains(arc.to)) {
          side.Insert(arc.to);
          stack.push_back(arc.to);
        }
      }
    }
    return side;
  }

 private:
  struct Arc {
    int to;
    int residual;
  };

  bool BuildLevels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int id : head_[v]) {
        const Arc& arc = arcs_[id];
        if (arc.residual > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  int Push(int v, int sink, int limit) {
    if (v == sink) return limit;
    for (int& i = next_arc_[v]; i < static_cast<int>(head_[v].size()); ++i) {
      const int id = head_[v][i];
      Arc& arc = arcs_[id];
      if (arc.residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
      if (int pushed = Push(arc.to, sink, std::min(limit, arc.residual))) {
        arc.residual -= pushed;
        arcs_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<int> next_arc_;
};

}  // namespace

CutCertificate EdgeConnectivity(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n < 2) {
    throw InvalidArgumentError("edge connectivity needs at least 2 vertices");
  }
  UnitFlowNetwork network(graph);
  CutCertificate best;
  std::vector<int> best_members;
  for (int sink = 1; sink < n; ++sink) {
    const int value = network.MaxFlow(0, sink);
    if (!best_members.empty() && value > best.value) continue;
    VertexSet side = network.SourceSide(0);
    std::vector<int> members = side.Members();
    if (best_members.empty() || value < best.value || members < best_members) {
      best.value = value;
      best.side = std::move(side);
      best_members = std::move(members);
    }
  }
  return best;
}

bool IsKEdgeConnected(const Graph& graph, int k) {
  return EdgeConnectivity(graph).value >= k;
}

bool HasBridge(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<int> order(n, -1);
  std::vector<int> low(n, 0);
  int clock = 0;
  // Iterative DFS; the parent edge is skipped by id so that a parallel copy
  // still counts as a back edge.
  struct Frame {
    int vertex;
    int parent_edge;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<Frame> stack = {{root, -1, 0}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const auto incident = graph.IncidentEdges(frame.vertex);
      if (frame.next < incident.size()) {
        const int id = incident[frame.next++];
        if (id == frame.parent_edge) continue;
        const int w = graph.Opposite(id, frame.vertex);
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, id, 0});
        } else {
          low[frame.vertex] = std::min(low[frame.vertex], order[w]);
        }
        continue;
      }
      const Frame done = frame;
      stack.pop_back();
      if (!stack.empty()) {
        const int parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > order[parent]) return true;
      }
    }
  }
  return false;
}

}  // namespace pfk
