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

#include "pfk/graph.h"

#include <algorithm>
#include <string>

#include "pfk/errors.h"

namespace pfk {

VertexSet::VertexSet(int universe) {
  if (universe < 0) {
    throw InvalidArgumentError("vertex set universe must be non-negative");
  }
  in_.assign(universe, false);
}

VertexSet VertexSet::Of(int universe, std::initializer_list<int> members) {
  return FromMembers(universe,
                     std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::FromMembers(int universe, std::span<const int> members) {
  VertexSet set(universe);
  for (int v : members) set.Insert(v);
  return set;
}

VertexSet VertexSet::FromMask(int universe, uint64_t mask) {
  if (universe > 64) {
    throw InvalidArgumentError("bitmask vertex sets need universe <= 64");
  }
  if (universe < 64 && (mask >> universe) != 0) {
    throw InvalidArgumentError("bitmask has bits outside the universe");
  }
  VertexSet set(universe);
  for (int v = 0; v < universe; ++v) set.in_[v] = (mask >> v) & 1;
  return set;
}

VertexSet VertexSet::All(int universe) {
  VertexSet set(universe);
  set.in_.assign(universe, true);
  return set;
}

bool VertexSet::Contains(int v) const {
  return v >= 0 && v < universe() && in_[v];
}

void VertexSet::Insert(int v) {
  if (v < 0 || v >= universe()) {
    throw InvalidArgumentError("vertex " + std::to_string(v) +
                               " outside universe of size " +
                               std::to_string(universe()));
  }
  in_[v] = true;
}

void VertexSet::Erase(int v) {
  if (v >= 0 && v < universe()) in_[v] = false;
}

int VertexSet::Size() const {
  return static_cast<int>(std::count(in_.begin(), in_.end(), true));
}

std::vector<int> VertexSet::Members() const {
  std::vector<int> out;
  for (int v = 0; v < universe(); ++v) {
    if (in_[v]) out.push_back(v);
  }
  return out;
}

uint64_t VertexSet::ToMask() const {
  if (universe() > 64) {
    throw InvalidArgumentError("bitmask vertex sets need universe <= 64");
  }
  uint64_t mask = 0;
  for (int v = 0; v < universe(); ++v) {
    if (in_[v]) mask |= uint64_t{1} << v;
  }
  return mask;
}

VertexSet VertexSet::Complement() const {
  VertexSet out(universe());
  for (int v = 0; v < universe(); ++v) out.in_[v] = !in_[v];
  return out;
}

VertexSet VertexSet::Union(const VertexSet& other) const {
  if (other.universe() != universe()) {
    throw InvalidArgumentError("vertex sets over different universes");
  }
  VertexSet out(universe());
  for (int v = 0; v < universe(); ++v) out.in_[v] = in_[v] || other.in_[v];
  return out;
}

bool VertexSet::IsDisjoint(const VertexSet& other) const {
  const int common = std::min(universe(), other.universe());
  for (int v = 0; v < common; ++v) {
    if (in_[v] && other.in_[v]) return false;
  }
  return true;
}

Graph Graph::Build(int num_vertices, std::span<const Edge> edges) {
  if (num_vertices < 0) {
    throw InvalidArgumentError("vertex count must be non-negative");
  }
  Graph graph;
  graph.num_vertices_ = num_vertices;
  graph.incident_.resize(num_vertices);
  graph.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices) {
      throw InvalidArgumentError("edge {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) +
                                 "} has an endpoint outside 0.." +
                                 std::to_string(num_vertices - 1));
    }
    if (e.u == e.v) {
      throw InvalidArgumentError("self-loop at vertex " + std::to_string(e.u));
    }
    const int id = static_cast<int>(graph.edges_.size());
    graph.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    graph.incident_[e.u].push_back(id);
    graph.incident_[e.v].push_back(id);
  }
  return graph;
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= num_vertices_) {
    throw InvalidArgumentError("vertex " + std::to_string(v) +
                               " out of range for graph of order " +
                               std::to_string(num_vertices_));
  }
}

int Graph::Degree(int v) const {
  CheckVertex(v);
  return static_cast<int>(incident_[v].size());
}

int Graph::MinDegree() const {
  int best = 0;
  for (int v = 0; v < num_vertices_; ++v) {
    const int d = Degree(v);
    if (v == 0 || d < best) best = d;
  }
  return best;
}

int Graph::MaxDegree() const {
  int best = 0;
  for (int v = 0; v < num_vertices_; ++v) best = std::max(best, Degree(v));
  return best;
}

std::span<const int> Graph::IncidentEdges(int v) const {
  CheckVertex(v);
  return incident_[v];
}

int Graph::Opposite(int id, int v) const {
  const Edge& e = edges_.at(id);
  return e.u == v ? e.v : e.u;
}

std::vector<int> Graph::Degrees() const {
  std::vector<int> out(num_vertices_);
  for (int v = 0; v < num_vertices_; ++v) out[v] = Degree(v);
  return out;
}

int EdgesBetween(const Graph& graph, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != graph.num_vertices() ||
      b.universe() != graph.num_vertices()) {
    throw InvalidArgumentError("vertex set does not match graph order");
  }
  if (!a.IsDisjoint(b)) {
    throw InvalidArgumentError("edges_between needs disjoint vertex sets");
  }
  int count = 0;
  for (const Edge& e : graph.edges()) {
    if ((a.Contains(e.u) && b.Contains(e.v)) ||
        (a.Contains(e.v) && b.Contains(e.u))) {
      ++count;
    }
  }
  return count;
}

std::vector<Component> ComponentsAfterRemoval(const Graph& graph,
                                              const VertexSet& removed) {
  const int n = graph.num_vertices();
  if (removed.universe() != n) {
    throw InvalidArgumentError("vertex set does not match graph order");
  }
  std::vector<Component> components;
  std::vector<bool> seen(n, false);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (seen[root] || removed.Contains(root)) continue;
    Component component;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      component.vertices.push_back(v);
      for (int id : graph.IncidentEdges(v)) {
        const int w = graph.Opposite(id, v);
        if (!seen[w] && !removed.Contains(w)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.vertices.begin(), component.vertices.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace pfk
