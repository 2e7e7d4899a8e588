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

#include "pfk/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>

#include "pfk/connectivity.h"
#include "pfk/errors.h"

namespace pfk {
namespace {

using EdgeSet = std::set<std::pair<int, int>>;

void AddSimple(EdgeSet& edges, int a, int b) {
  if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
}

Graph FromEdgeSet(int n, const EdgeSet& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) list.push_back({a, b});
  return Graph::Build(n, list);
}

EdgeSet HararyEdges(int n, int k) {
  EdgeSet edges;
  if (k == 1) {
    for (int i = 0; i + 1 < n; ++i) AddSimple(edges, i, i + 1);
    return edges;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k / 2; ++j) AddSimple(edges, i, (i + j) % n);
  }
  if (k % 2 == 1) {
    if (n % 2 == 0) {
      for (int i = 0; i < n / 2; ++i) AddSimple(edges, i, i + n / 2);
    } else {
      for (int i = 0; i <= (n - 1) / 2; ++i) {
        AddSimple(edges, i, (i + (n + 1) / 2) % n);
      }
    }
  }
  return edges;
}

// Adds `count` uniformly chosen absent pairs (fewer if the graph fills up).
void AddRandomEdges(EdgeSet& edges, int n, int count, std::mt19937_64& rng) {
  const int64_t capacity = int64_t{n} * (n - 1) / 2;
  std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
  for (int added = 0; added < count &&
                      static_cast<int64_t>(edges.size()) < capacity;) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a == b || edges.count({std::min(a, b), std::max(a, b)})) continue;
    AddSimple(edges, a, b);
    ++added;
  }
}

EdgeSet Relabel(const EdgeSet& edges, int n, std::mt19937_64& rng) {
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  EdgeSet out;
  for (const auto& [a, b] : edges) AddSimple(out, label[a], label[b]);
  return out;
}

int ParseParameter(const std::string& text, const std::string& name) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw InvalidArgumentError("bad parameter '" + text + "' for " + name);
}

}  // namespace

HubbedCliques MakeHubbedCliques(int m) {
  if (m < 1) throw InvalidArgumentError("m must be at least 1");
  const int copies = m + 1;
  const int clique = 2 * m;
  const int n = copies * clique + copies;
  HubbedCliques out;
  out.m = m;
  out.hubs = VertexSet(n);
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c) {
    const int first = c * clique;
    for (int a = 0; a < clique; ++a) {
      for (int b = a + 1; b < clique; ++b) {
        edges.push_back({first + a, first + b});
      }
    }
    out.chosen_vertices.push_back(first);
  }
  for (int h = 0; h < copies; ++h) {
    const int hub = copies * clique + h;
    out.hubs.Insert(hub);
    for (int chosen : out.chosen_vertices) edges.push_back({chosen, hub});
  }
  out.graph = Graph::Build(n, edges);
  return out;
}

HubbedCliques TightnessFamily(int m) {
  if (m < 2 || m % 2 != 0) {
    throw InvalidArgumentError("tightness family needs an even m >= 2, got " +
                               std::to_string(m));
  }
  return MakeHubbedCliques(m);
}

Graph CompleteGraph(int n) {
  if (n < 0) throw InvalidArgumentError("complete graph needs n >= 0");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph::Build(n, edges);
}

Graph CycleGraph(int n) {
  if (n < 3) throw InvalidArgumentError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::Build(n, edges);
}

Graph PathGraph(int n) {
  if (n < 1) throw InvalidArgumentError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::Build(n, edges);
}

Graph StarGraph(int leaves) {
  if (leaves < 0) throw InvalidArgumentError("star needs k >= 0");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::Build(leaves + 1, edges);
}

Graph PetersenGraph() {
  // Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::Build(10, edges);
}

Graph NamedGraph(const std::string& name) {
  if (name == "petersen") return PetersenGraph();
  static const std::regex kCall(R"(^([a-z]+)\(([^)]*)\)$)");
  std::smatch match;
  if (!std::regex_match(name, match, kCall)) {
    throw InvalidArgumentError("unknown graph name '" + name + "'");
  }
  const std::string kind = match[1];
  const int arg = ParseParameter(match[2], kind);
  if (kind == "complete") return CompleteGraph(arg);
  if (kind == "cycle") return CycleGraph(arg);
  if (kind == "path") return PathGraph(arg);
  if (kind == "star") return StarGraph(arg);
  throw InvalidArgumentError("unknown graph name '" + name + "'");
}

Graph HararyGraph(int n, int k) {
  if (k < 0 || n < k + 1) {
    throw InvalidArgumentError("Harary graph needs 0 <= k and n >= k + 1 (n=" +
                               std::to_string(n) + ", k=" + std::to_string(k) +
                               ")");
  }
  return FromEdgeSet(n, HararyEdges(n, k));
}

Graph RandomKEdgeConnected(int n, int k, uint64_t seed) {
  const Graph backbone = HararyGraph(n, k);
  std::mt19937_64 rng(seed);
  EdgeSet edges;
  for (const Edge& e : backbone.edges()) AddSimple(edges, e.u, e.v);
  std::uniform_int_distribution<int> extra(0, n);
  AddRandomEdges(edges, n, extra(rng), rng);
  Graph graph = FromEdgeSet(n, Relabel(edges, n, rng));
  if (n >= 2 && !IsKEdgeConnected(graph, k)) {
    throw std::logic_error("generated graph fell below the requested "
                           "edge connectivity");
  }
  return graph;
}

Graph RandomConnectedWithMinDegree(int n, int k, int min_degree,
                                   uint64_t seed) {
  if (min_degree >= n) {
    throw InvalidArgumentError("minimum degree " + std::to_string(min_degree) +
                               " impossible on " + std::to_string(n) +
                               " vertices");
  }
  const Graph base = RandomKEdgeConnected(n, k, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  EdgeSet edges;
  std::vector<int> degree(n, 0);
  for (const Edge& e : base.edges()) {
    AddSimple(edges, e.u, e.v);
    ++degree[e.u];
    ++degree[e.v];
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int v = 0; v < n; ++v) {
    while (degree[v] < min_degree) {
      const int w = pick(rng);
      if (w == v || edges.count({std::min(v, w), std::max(v, w)})) continue;
      AddSimple(edges, v, w);
      ++degree[v];
      ++degree[w];
    }
  }
  return FromEdgeSet(n, edges);
}

Graph RandomSimpleGraph(int n, double edge_probability, uint64_t seed) {
  if (n < 0) throw InvalidArgumentError("graph order must be non-negative");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return Graph::Build(n, edges);
}

SmallGraphEnumeration::SmallGraphEnumeration(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgumentError("exhaustive enumeration supports 0 <= n <= " +
                               std::to_string(kMaxVertices));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs_.push_back({a, b});
  }
}

Graph SmallGraphEnumeration::At(uint64_t index) const {
  std::vector<Edge> edges;
  for (size_t j = 0; j < pairs_.size(); ++j) {
    if ((index >> j) & 1) edges.push_back(pairs_[j]);
  }
  return Graph::Build(n_, edges);
}

}  // namespace pfk
