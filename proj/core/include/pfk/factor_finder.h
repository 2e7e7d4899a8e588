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

// Parity factors through a per-vertex gadget reduction to perfect matching.
//
// For a vertex v of degree d with window [g(v), f(v)], f(v) <= d, the gadget
// holds
//   - d edge-vertices, one per incident edge; the two edge-vertices of an
//     original edge are joined by an "external" edge,
//   - d - f(v) core vertices, each adjacent to all d edge-vertices,
//   - (f(v) - g(v)) / 2 slack pairs {a, b}: a-b is an edge and both are
//     adjacent to all d edge-vertices.
// In a perfect matching the cores absorb d - f(v) edge-vertices and each slack
// pair absorbs 0 or 2, so the externally matched edges form a factor with
// d_F(v) = f(v) - 2k for some 0 <= k <= (f(v) - g(v)) / 2.

#ifndef PFK_FACTOR_FINDER_H_
#define PFK_FACTOR_FINDER_H_

#include <optional>
#include <span>
#include <vector>

#include "pfk/degree_spec.h"
#include "pfk/graph.h"
#include "pfk/matching.h"

namespace pfk {

struct GadgetGraph {
  enum class Role { kEdge, kCore, kSlack };

  struct Node {
    int owner = 0;     // vertex of G whose gadget holds this node
    Role role = Role::kEdge;
    int edge_id = -1;  // kEdge only: the G edge this node stands for
  };

  Graph h;
  std::vector<Node> nodes;
  // H edge ids 0..|E(G)|-1 are the external edges: H edge i joins the two
  // edge-vertices of G edge i. All later H edges are internal.
  int num_external_edges = 0;
  std::vector<std::vector<int>> edge_vertices;  // per G vertex
  std::vector<std::vector<int>> core_vertices;  // per G vertex
  std::vector<std::vector<Edge>> slack_pairs;   // per G vertex, {a, b}
};

struct ParityFactor {
  // Ids into G's edge list, ordered by (edge, id).
  std::vector<int> edge_ids;
  std::vector<Edge> edges;
  std::vector<int> degrees;
};

struct FactorViolation {
  enum class Kind { kBelowLower, kAboveUpper, kParity };

  int vertex = 0;
  int degree = 0;
  Kind kind = Kind::kParity;

  friend bool operator==(const FactorViolation&, const FactorViolation&) = default;
};

// Largest f*(v) <= d_G(v) with f*(v) = g(v) (mod 2). Returns nullopt when
// f*(v) < g(v) somewhere. A factor never exceeds d_G(v), so (g, f*) has a
// parity factor iff G has one with d_F >= g and matching parity.
std::optional<DegreeSpec> CapUpperBounds(const Graph& graph,
                                         const std::vector<int>& g);

// Throws InvalidArgumentError on an invalid spec or f(v) > d_G(v).
GadgetGraph BuildGadget(const Graph& graph, const DegreeSpec& spec);

struct GadgetSolution {
  GadgetGraph gadget;
  Matching matching;
  std::optional<ParityFactor> factor;
};

// Builds the gadget, matches it and pulls the factor back. Upper bounds above
// d_G(v) are first lowered to the largest value <= d_G(v) of the same parity.
GadgetSolution SolveGadget(const Graph& graph, const DegreeSpec& spec);

std::optional<ParityFactor> FindParityFactor(const Graph& graph,
                                             const DegreeSpec& spec);

// Builds the factor record for a sub-multiset of G's edges. Throws
// InvalidArgumentError when an edge is not available in G.
ParityFactor MakeFactor(const Graph& graph, std::span<const Edge> edges);

// Every bound and parity violation, in vertex order. Throws
// InvalidArgumentError when `edges` is not a sub-multiset of E(G).
std::vector<FactorViolation> VerifyFactor(const Graph& graph,
                                          std::span<const Edge> edges,
                                          const DegreeSpec& spec);

// First valid factor over edge subsets in increasing size, then increasing
// bitmask (bit i = edge i). Test oracle; throws CapExceededError above
// kBruteForceFactorMaxEdges edges.
inline constexpr int kBruteForceFactorMaxEdges = 22;
std::optional<ParityFactor> BruteForceFactor(const Graph& graph,
                                             const DegreeSpec& spec);

}  // namespace pfk

#endif  // PFK_FACTOR_FINDER_H_
