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

#ifndef PFK_GENERATORS_H_
#define PFK_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pfk/graph.h"

namespace pfk {

// m + 1 disjoint copies of K_{2m} plus m + 1 hub vertices; one chosen vertex
// per copy is joined to every hub. Copies occupy consecutive id blocks of size
// 2m (the chosen vertex is the first of its block) and hubs take the last
// m + 1 ids.
struct HubbedCliques {
  Graph graph;
  VertexSet hubs;
  int m = 0;
  std::vector<int> chosen_vertices;
};

// The construction above for any m >= 1.
HubbedCliques MakeHubbedCliques(int m);
// The even-m family that shows the even-factor connectivity bound is tight.
// Throws InvalidArgumentError unless m is even and >= 2.
HubbedCliques TightnessFamily(int m);

Graph CompleteGraph(int n);
Graph CycleGraph(int n);   // n >= 3
Graph PathGraph(int n);    // n vertices, n - 1 edges
Graph StarGraph(int leaves);  // centre 0
Graph PetersenGraph();

// Parses "complete(n)", "cycle(n)", "path(n)", "star(k)" or "petersen".
// Throws InvalidArgumentError on an unknown name or bad parameter.
Graph NamedGraph(const std::string& name);

// Harary graph H_{k,n}: a k-edge-connected simple graph with
// ceil(k n / 2) edges. Requires n >= k + 1.
Graph HararyGraph(int n, int k);

// Simple graph with lambda >= k built from a Harary backbone, random extra
// edges and a random relabelling, all drawn from `seed`. The result is
// checked with EdgeConnectivity. Throws InvalidArgumentError when n < k + 1.
Graph RandomKEdgeConnected(int n, int k, uint64_t seed);

// As RandomKEdgeConnected, then edges are added at vertices below
// `min_degree` until every degree reaches it. Requires n > min_degree.
Graph RandomConnectedWithMinDegree(int n, int k, int min_degree, uint64_t seed);

// G(n, p) on labelled vertices.
Graph RandomSimpleGraph(int n, double edge_probability, uint64_t seed);

// All 2^(n choose 2) labelled simple graphs on n vertices. Graph i has pair j
// present iff bit j of i is set, pairs listed as (0,1), (0,2), ..., (n-2,n-1).
class SmallGraphEnumeration {
 public:
  static constexpr int kMaxVertices = 7;

  // Throws InvalidArgumentError when n is negative or above kMaxVertices.
  explicit SmallGraphEnumeration(int n);

  uint64_t size() const { return uint64_t{1} << pairs_.size(); }
  Graph At(uint64_t index) const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (uint64_t i = 0; i < size(); ++i) fn(At(i));
  }

 private:
  int n_;
  std::vector<Edge> pairs_;
};

}  // namespace pfk

#endif  // PFK_GENERATORS_H_
