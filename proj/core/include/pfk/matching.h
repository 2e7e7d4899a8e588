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

#ifndef PFK_MATCHING_H_
#define PFK_MATCHING_H_

#include <vector>

#include "pfk/graph.h"

namespace pfk {

struct Matching {
  // mate[v] is v's partner, or -1 when v is exposed.
  std::vector<int> mate;
  // Matched pairs with u < v, sorted.
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

// Maximum-cardinality matching by Edmonds' blossom algorithm. Parallel edges
// are collapsed first. Vertices are scanned in increasing id order, so the
// result is reproducible.
Matching MaxMatching(const Graph& graph);

// Maximum matching grown from `initial` (mate array, -1 for exposed). Vertices
// matched in `initial` stay matched, though possibly to other partners. Throws
// InvalidArgumentError if `initial` is not a matching of the graph.
Matching MaxMatchingFrom(const Graph& graph, const std::vector<int>& initial);

bool HasPerfectMatching(const Graph& graph);

// Exhaustive maximum matching size, branching on the lowest undecided vertex.
// Test oracle; throws CapExceededError above kBruteForceMatchingMaxVertices.
inline constexpr int kBruteForceMatchingMaxVertices = 14;
int BruteForceMatchingSize(const Graph& graph);

}  // namespace pfk

#endif  // PFK_MATCHING_H_
