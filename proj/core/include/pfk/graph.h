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

#ifndef PFK_GRAPH_H_
#define PFK_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pfk {

// An unordered vertex pair. Graph::Build stores every edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of the vertex range [0, universe). Membership is order-free; two sets
// compare equal iff they have the same universe and the same members.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet Of(int universe, std::initializer_list<int> members);
  static VertexSet FromMembers(int universe, std::span<const int> members);
  // Bit i of `mask` selects vertex i. Requires universe <= 64.
  static VertexSet FromMask(int universe, uint64_t mask);
  static VertexSet All(int universe);

  int universe() const { return static_cast<int>(in_.size()); }
  bool Contains(int v) const;
  void Insert(int v);
  void Erase(int v);
  int Size() const;
  bool Empty() const { return Size() == 0; }

  // Members in increasing order.
  std::vector<int> Members() const;
  // Requires universe <= 64.
  uint64_t ToMask() const;

  VertexSet Complement() const;
  VertexSet Union(const VertexSet& other) const;
  bool IsDisjoint(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> in_;
};

// A connected component of G - X. `edges_to_t` is filled in by callers that
// evaluate a criterion relative to a set T (e_G(V(C), T)); it is 0 otherwise.
struct Component {
  std::vector<int> vertices;
  int edges_to_t = 0;

  friend bool operator==(const Component&, const Component&) = default;
};

// Immutable undirected multigraph on vertices 0..n-1. Parallel edges are kept
// with multiplicity; self-loops are rejected.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgumentError on a negative count, an out-of-range endpoint
  // or a self-loop.
  static Graph Build(int num_vertices, std::span<const Edge> edges);
  static Graph Build(int num_vertices, std::initializer_list<Edge> edges) {
    return Build(num_vertices, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // d_G(v), counting parallel edges. Throws on an out-of-range vertex.
  int Degree(int v) const;
  // Both return 0 on the empty graph.
  int MinDegree() const;
  int MaxDegree() const;

  // Ids of the edges incident to v, increasing.
  std::span<const int> IncidentEdges(int v) const;
  // The endpoint of edge `id` that is not `v`.
  int Opposite(int id, int v) const;

  std::vector<int> Degrees() const;

 private:
  void CheckVertex(int v) const;

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// e_G(A, B): edges with one endpoint in A and the other in B. A and B must be
// disjoint and drawn over the graph's vertex range.
int EdgesBetween(const Graph& graph, const VertexSet& a, const VertexSet& b);

// Connected components of the subgraph induced on V - removed, ordered by their
// smallest vertex. Each component lists its vertices increasingly.
std::vector<Component> ComponentsAfterRemoval(const Graph& graph,
                                              const VertexSet& removed);

}  // namespace pfk

#endif  // PFK_GRAPH_H_
