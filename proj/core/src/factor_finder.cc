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

#include "pfk/factor_finder.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "pfk/errors.h"

namespace pfk {
namespace {

void RequireSized(const Graph& graph, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != graph.num_vertices()) {
    throw InvalidArgumentError("per-vertex bounds have " +
                               std::to_string(values.size()) +
                               " entries for a graph of order " +
                               std::to_string(graph.num_vertices()));
  }
}

std::vector<int> DegreesOf(const Graph& graph, std::span<const int> edge_ids) {
  std::vector<int> degrees(graph.num_vertices(), 0);
  for (int id : edge_ids) {
    ++degrees[graph.edge(id).u];
    ++degrees[graph.edge(id).v];
  }
  return degrees;
}

ParityFactor FactorFromIds(const Graph& graph, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end(), [&](int a, int b) {
    return std::pair(graph.edge(a), a) < std::pair(graph.edge(b), b);
  });
  ParityFactor factor;
  factor.degrees = DegreesOf(graph, edge_ids);
  for (int id : edge_ids) factor.edges.push_back(graph.edge(id));
  factor.edge_ids = std::move(edge_ids);
  return factor;
}

bool Satisfies(const std::vector<int>& degrees, const DegreeSpec& spec) {
  for (size_t v = 0; v < degrees.size(); ++v) {
    const int d = degrees[v];
    if (d < spec.g[v] || d > spec.f[v] || (d - spec.f[v]) % 2 != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<DegreeSpec> CapUpperBounds(const Graph& graph,
                                         const std::vector<int>& g) {
  RequireSized(graph, g);
  DegreeSpec spec{g, std::vector<int>(graph.num_vertices())};
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (g[v] < 0) {
      throw InvalidArgumentError("degree lower bounds must be non-negative");
    }
    const int d = graph.Degree(v);
    spec.f[v] = (d - g[v]) % 2 == 0 ? d : d - 1;
    if (spec.f[v] < g[v]) return std::nullopt;
  }
  return spec;
}

GadgetGraph BuildGadget(const Graph& graph, const DegreeSpec& spec) {
  RequireValidSpec(graph, spec);
  const int n = graph.num_vertices();
  for (int v = 0; v < n; ++v) {
    if (spec.f[v] > graph.Degree(v)) {
      throw InvalidArgumentError(
          "gadget needs f(v) <= d_G(v); vertex " + std::to_string(v) +
          " has f = " + std::to_string(spec.f[v]) +
          " and degree " + std::to_string(graph.Degree(v)));
    }
  }

  GadgetGraph gadget;
  gadget.num_external_edges = graph.num_edges();
  gadget.edge_vertices.resize(n);
  gadget.core_vertices.resize(n);
  gadget.slack_pairs.resize(n);
  // Edge-vertex of (v, edge id).
  std::map<std::pair<int, int>, int> port;
  const auto add_node = [&](int owner, GadgetGraph::Role role, int edge_id) {
    gadget.nodes.push_back({owner, role, edge_id});
    return static_cast<int>(gadget.nodes.size()) - 1;
  };
  for (int v = 0; v < n; ++v) {
    const int d = graph.Degree(v);
    for (int id : graph.IncidentEdges(v)) {
      const int node = add_node(v, GadgetGraph::Role::kEdge, id);
      gadget.edge_vertices[v].push_back(node);
      port[{v, id}] = node;
    }
    for (int i = 0; i < d - spec.f[v]; ++i) {
      gadget.core_vertices[v].push_back(
          add_node(v, GadgetGraph::Role::kCore, -1));
    }
    for (int i = 0; i < (spec.f[v] - spec.g[v]) / 2; ++i) {
      const int a = add_node(v, GadgetGraph::Role::kSlack, -1);
      const int b = add_node(v, GadgetGraph::Role::kSlack, -1);
      gadget.slack_pairs[v].push_back({a, b});
    }
  }

  std::vector<Edge> h_edges;
  for (int id = 0; id < graph.num_edges(); ++id) {
    const Edge& e = graph.edge(id);
    h_edges.push_back({port[{e.u, id}], port[{e.v, id}]});
  }
  for (int v = 0; v < n; ++v) {
    for (int hub : gadget.edge_vertices[v]) {
      for (int core : gadget.core_vertices[v]) h_edges.push_back({hub, core});
      for (const Edge& pair : gadget.slack_pairs[v]) {
        h_edges.push_back({hub, pair.u});
        h_edges.push_back({hub, pair.v});
      }
    }
    for (const Edge& pair : gadget.slack_pairs[v]) h_edges.push_back(pair);
  }
  gadget.h = Graph::Build(static_cast<int>(gadget.nodes.size()), h_edges);
  return gadget;
}

GadgetSolution SolveGadget(const Graph& graph, const DegreeSpec& spec) {
  RequireValidSpec(graph, spec);
  DegreeSpec capped = spec;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const int d = graph.Degree(v);
    if (capped.f[v] > d) capped.f[v] = (capped.f[v] - d) % 2 == 0 ? d : d - 1;
  }
  GadgetSolution solution;
  if (!ValidateSpec(graph, capped).empty()) return solution;

  solution.gadget = BuildGadget(graph, capped);
  const Graph& h = solution.gadget.h;
  // Seed: cores, then slack pairs, take the leading edge-vertices of their
  // gadget, so augmentation starts from degree g(v) and the factor tends to
  // stay close to its lower bounds.
  std::vector<int> seed(h.num_vertices(), -1);
  const auto pair_up = [&seed](int a, int b) {
    seed[a] = b;
    seed[b] = a;
  };
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const GadgetGraph& gadget = solution.gadget;
    size_t next = 0;
    for (int core : gadget.core_vertices[v]) {
      pair_up(core, gadget.edge_vertices[v][next++]);
    }
    for (const Edge& pair : gadget.slack_pairs[v]) {
      pair_up(pair.u, gadget.edge_vertices[v][next++]);
      pair_up(pair.v, gadget.edge_vertices[v][next++]);
    }
  }
  solution.matching = MaxMatchingFrom(h, seed);
  if (2 * solution.matching.size() != h.num_vertices()) return solution;

  std::vector<int> chosen;
  for (int id = 0; id < solution.gadget.num_external_edges; ++id) {
    const Edge& link = h.edge(id);
    if (solution.matching.mate[link.u] == link.v) chosen.push_back(id);
  }
  solution.factor = FactorFromIds(graph, std::move(chosen));
  return solution;
}

std::optional<ParityFactor> FindParityFactor(const Graph& graph,
                                             const DegreeSpec& spec) {
  return SolveGadget(graph, spec).factor;
}

ParityFactor MakeFactor(const Graph& graph, std::span<const Edge> edges) {
  std::map<Edge, std::vector<int>> available;
  for (int id = graph.num_edges() - 1; id >= 0; --id) {
    available[graph.edge(id)].push_back(id);
  }
  std::vector<int> ids;
  for (const Edge& raw : edges) {
    const Edge e{std::min(raw.u, raw.v), std::max(raw.u, raw.v)};
    auto it = available.find(e);
    if (it == available.end() || it->second.empty()) {
      throw InvalidArgumentError("edge {" + std::to_string(raw.u) + "," +
                                 std::to_string(raw.v) +
                                 "} is not available in the graph");
    }
    ids.push_back(it->second.back());
    it->second.pop_back();
  }
  return FactorFromIds(graph, std::move(ids));
}

std::vector<FactorViolation> VerifyFactor(const Graph& graph,
                                          std::span<const Edge> edges,
                                          const DegreeSpec& spec) {
  RequireSized(graph, spec.g);
  RequireSized(graph, spec.f);
  const ParityFactor factor = MakeFactor(graph, edges);
  std::vector<FactorViolation> out;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const int d = factor.degrees[v];
    if (d < spec.g[v]) out.push_back({v, d, FactorViolation::Kind::kBelowLower});
    if (d > spec.f[v]) out.push_back({v, d, FactorViolation::Kind::kAboveUpper});
    if ((d - spec.f[v]) % 2 != 0) {
      out.push_back({v, d, FactorViolation::Kind::kParity});
    }
  }
  return out;
}

std::optional<ParityFactor> BruteForceFactor(const Graph& graph,
                                             const DegreeSpec& spec) {
  RequireSized(graph, spec.g);
  RequireSized(graph, spec.f);
  const int m = graph.num_edges();
  if (m > kBruteForceFactorMaxEdges) {
    throw CapExceededError("brute-force factor search supports at most " +
                           std::to_string(kBruteForceFactorMaxEdges) +
                           " edges");
  }
  const uint64_t limit = uint64_t{1} << m;
  std::vector<int> degrees(graph.num_vertices());
  for (int size = 0; size <= m; ++size) {
    // Gosper's hack walks the size-k masks in increasing order.
    for (uint64_t mask = (uint64_t{1} << size) - 1; mask < limit;) {
      std::fill(degrees.begin(), degrees.end(), 0);
      for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const Edge& e = graph.edge(std::countr_zero(rest));
        ++degrees[e.u];
        ++degrees[e.v];
      }
      if (Satisfies(degrees, spec)) {
        std::vector<int> ids;
        for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          ids.push_back(std::countr_zero(rest));
        }
        return FactorFromIds(graph, std::move(ids));
      }
      if (mask == 0) break;
      const uint64_t low = mask & (~mask + 1);
      const uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

}  // namespace pfk
