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

#include "pfk/parity_criteria.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <string>
#include <thread>

#include "mask_graph.h"
#include "pfk/errors.h"

namespace pfk {
namespace {

void RequireSized(const Graph& graph, const VertexSet& set) {
  if (set.universe() != graph.num_vertices()) {
    throw InvalidArgumentError("vertex set does not match graph order");
  }
}

void RequireSized(const Graph& graph, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != graph.num_vertices()) {
    throw InvalidArgumentError("per-vertex bounds have " +
                               std::to_string(values.size()) +
                               " entries for a graph of order " +
                               std::to_string(graph.num_vertices()));
  }
}

int SumOver(const std::vector<int>& values, const VertexSet& set) {
  int total = 0;
  for (int v : set.Members()) total += values[v];
  return total;
}

// Sum over x in T of d_{G-S}(x).
int DegreeIntoRest(const Graph& graph, const VertexSet& s, const VertexSet& t) {
  int total = 0;
  for (int x : t.Members()) {
    for (int id : graph.IncidentEdges(x)) {
      if (!s.Contains(graph.Opposite(id, x))) ++total;
    }
  }
  return total;
}

std::vector<Component> ComponentsWithBoundary(const Graph& graph,
                                              const VertexSet& s,
                                              const VertexSet& t) {
  std::vector<Component> components =
      ComponentsAfterRemoval(graph, s.Union(t));
  for (Component& c : components) {
    c.edges_to_t = EdgesBetween(
        graph, VertexSet::FromMembers(graph.num_vertices(), c.vertices), t);
  }
  return components;
}

// Best candidate seen so far. Candidates arrive in increasing encoding order,
// so replacing only on a strictly larger value keeps the smallest encoding
// among maximizers.
struct Best {
  bool found = false;
  int value = 0;
  uint64_t s = 0;
  uint64_t t = 0;

  void Offer(int candidate, uint64_t cs, uint64_t ct) {
    if (!found || candidate > value) {
      found = true;
      value = candidate;
      s = cs;
      t = ct;
    }
  }
};

int ResolveWorkers(const EnumerationLimits& limits) {
  if (limits.workers > 0) return limits.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, total) into contiguous chunks, runs `search` on each and folds
// the results in chunk order.
Best SearchInChunks(uint64_t total, const EnumerationLimits& limits,
                    const std::function<Best(uint64_t, uint64_t)>& search) {
  constexpr uint64_t kMinPerWorker = 1 << 12;
  const uint64_t workers = std::clamp<uint64_t>(
      total / kMinPerWorker, 1, static_cast<uint64_t>(ResolveWorkers(limits)));
  if (workers == 1) return search(0, total);
  std::vector<std::future<Best>> parts;
  const uint64_t step = (total + workers - 1) / workers;
  for (uint64_t begin = 0; begin < total; begin += step) {
    const uint64_t end = std::min(total, begin + step);
    parts.push_back(std::async(std::launch::async, search, begin, end));
  }
  Best best;
  for (auto& part : parts) {
    const Best chunk = part.get();
    if (chunk.found) best.Offer(chunk.value, chunk.s, chunk.t);
  }
  return best;
}

// Spreads the low bits of `index` over the set bits of `pool`, preserving
// order: increasing indices map to increasing submasks.
uint64_t Deposit(uint64_t index, const std::vector<int>& pool_bits) {
  uint64_t mask = 0;
  for (size_t i = 0; i < pool_bits.size(); ++i) {
    if ((index >> i) & 1) mask |= uint64_t{1} << pool_bits[i];
  }
  return mask;
}

void CheckPairCap(int n, const EnumerationLimits& limits) {
  if (n > limits.max_pair_vertices || n > 63) {
    throw CapExceededError("pair enumeration over " + std::to_string(n) +
                           " vertices exceeds the cap of " +
                           std::to_string(std::min(limits.max_pair_vertices, 63)));
  }
}

void CheckSubsetCap(int n, const EnumerationLimits& limits) {
  if (n > limits.max_subset_vertices || n > 63) {
    throw CapExceededError(
        "subset enumeration over " + std::to_string(n) +
        " vertices exceeds the cap of " +
        std::to_string(std::min(limits.max_subset_vertices, 63)));
  }
}

}  // namespace

EnumerationLimits EnumerationLimits::FromEnvironment() {
  EnumerationLimits limits;
  if (const char* raw = std::getenv("PFK_MAX_N"); raw != nullptr) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0 && value <= 63) {
      limits.max_pair_vertices = static_cast<int>(value);
      limits.max_subset_vertices = static_cast<int>(value);
    }
  }
  return limits;
}

std::vector<Component> OddComponents(const Graph& graph, const VertexSet& s,
                                     const VertexSet& t, const DegreeSpec& spec,
                                     TauRule rule) {
  RequireSized(graph, s);
  RequireSized(graph, t);
  RequireSized(graph, spec.g);
  RequireSized(graph, spec.f);
  if (!s.IsDisjoint(t)) {
    throw InvalidArgumentError("S and T must be disjoint");
  }
  const std::vector<int>& bound = rule == TauRule::kFParity ? spec.f : spec.g;
  std::vector<Component> odd;
  for (Component& c : ComponentsWithBoundary(graph, s, t)) {
    int weight = c.edges_to_t;
    for (int v : c.vertices) weight += bound[v];
    if (weight % 2 != 0) odd.push_back(std::move(c));
  }
  return odd;
}

int Tau(const Graph& graph, const VertexSet& s, const VertexSet& t,
        const DegreeSpec& spec, TauRule rule) {
  return static_cast<int>(OddComponents(graph, s, t, spec, rule).size());
}

DeficiencyCertificate EvaluateEta(const Graph& graph, const VertexSet& s,
                                  const VertexSet& t, const DegreeSpec& spec) {
  RequireValidSpec(graph, spec);
  DeficiencyCertificate cert{s, t, 0,
                             OddComponents(graph, s, t, spec, TauRule::kFParity)};
  cert.value = SumOver(spec.g, t) - DegreeIntoRest(graph, s, t) -
               SumOver(spec.f, s) +
               static_cast<int>(cert.odd_components.size());
  return cert;
}

int Eta(const Graph& graph, const VertexSet& s, const VertexSet& t,
        const DegreeSpec& spec) {
  return EvaluateEta(graph, s, t, spec).value;
}

DeficiencyCertificate EvaluateMinDegreeDeficiency(const Graph& graph,
                                                  const VertexSet& t,
                                                  const std::vector<int>& g) {
  RequireSized(graph, g);
  RequireSized(graph, t);
  if (std::any_of(g.begin(), g.end(), [](int x) { return x < 0; })) {
    throw InvalidArgumentError("degree lower bounds must be non-negative");
  }
  const VertexSet none(graph.num_vertices());
  DeficiencyCertificate cert{none, t, 0,
                             OddComponents(graph, none, t, DegreeSpec{g, g},
                                           TauRule::kGParity)};
  cert.value = SumOver(g, t) - DegreeIntoRest(graph, none, t) +
               static_cast<int>(cert.odd_components.size());
  return cert;
}

int MinDegreeDeficiency(const Graph& graph, const VertexSet& t,
                        const std::vector<int>& g) {
  return EvaluateMinDegreeDeficiency(graph, t, g).value;
}

int CorollaryTau(const Graph& graph, const VertexSet& t, FactorParity parity) {
  RequireSized(graph, t);
  int count = 0;
  for (const Component& c :
       ComponentsWithBoundary(graph, VertexSet(graph.num_vertices()), t)) {
    const int weight =
        parity == FactorParity::kEven
            ? c.edges_to_t
            : c.edges_to_t + static_cast<int>(c.vertices.size());
    if (weight % 2 != 0) ++count;
  }
  return count;
}

DeficiencyCertificate MaxEta(const Graph& graph, const DegreeSpec& spec,
                             const EnumerationLimits& limits) {
  const int n = graph.num_vertices();
  CheckPairCap(n, limits);
  RequireValidSpec(graph, spec);
  const internal::MaskGraph mg(graph);
  const uint64_t full = mg.full();

  const auto search = [&](uint64_t begin, uint64_t end) {
    Best best;
    for (uint64_t s = begin; s < end; ++s) {
      const int f_of_s = internal::MaskGraph::Sum(spec.f, s);
      const uint64_t free = full & ~s;
      uint64_t t = 0;
      do {
        const int degree_sum = [&] {
          int total = 0;
          for (uint64_t rest = t; rest != 0; rest &= rest - 1) {
            total += mg.degree(std::countr_zero(rest));
          }
          return total - mg.EdgesBetween(t, s);
        }();
        int tau = 0;
        mg.ForEachComponent(free & ~t, [&](uint64_t c) {
          tau += (mg.EdgesParity(c, t) + internal::MaskGraph::Sum(spec.f, c)) & 1;
        });
        best.Offer(internal::MaskGraph::Sum(spec.g, t) - degree_sum - f_of_s + tau,
                   s, t);
        t = (t - free) & free;
      } while (t != 0);
    }
    return best;
  };
  const Best best = SearchInChunks(uint64_t{1} << n, limits, search);
  return EvaluateEta(graph, VertexSet::FromMask(n, best.s),
                     VertexSet::FromMask(n, best.t), spec);
}

ExistenceVerdict LovaszExists(const Graph& graph, const DegreeSpec& spec,
                              const EnumerationLimits& limits) {
  DeficiencyCertificate cert = MaxEta(graph, spec, limits);
  if (cert.value <= 0) return {true, std::nullopt};
  return {false, std::move(cert)};
}

DeficiencyCertificate MaxMinDegreeDeficiencyWithin(
    const Graph& graph, const std::vector<int>& g, const VertexSet& pool,
    const EnumerationLimits& limits) {
  const int n = graph.num_vertices();
  RequireSized(graph, g);
  RequireSized(graph, pool);
  CheckSubsetCap(pool.Size(), limits);
  if (std::any_of(g.begin(), g.end(), [](int x) { return x < 0; })) {
    throw InvalidArgumentError("degree lower bounds must be non-negative");
  }
  const internal::MaskGraph mg(graph);
  const std::vector<int> pool_bits = pool.Members();
  const std::vector<int>& degrees = graph.Degrees();

  const auto search = [&](uint64_t begin, uint64_t end) {
    Best best;
    for (uint64_t index = begin; index < end; ++index) {
      const uint64_t t = Deposit(index, pool_bits);
      int tau = 0;
      mg.ForEachComponent(mg.full() & ~t, [&](uint64_t c) {
        tau += (mg.EdgesParity(c, t) + internal::MaskGraph::Sum(g, c)) & 1;
      });
      best.Offer(internal::MaskGraph::Sum(g, t) -
                     internal::MaskGraph::Sum(degrees, t) + tau,
                 0, t);
    }
    return best;
  };
  const Best best =
      SearchInChunks(uint64_t{1} << pool_bits.size(), limits, search);
  return EvaluateMinDegreeDeficiency(graph, VertexSet::FromMask(n, best.t), g);
}

DeficiencyCertificate MaxMinDegreeDeficiency(const Graph& graph,
                                             const std::vector<int>& g,
                                             const EnumerationLimits& limits) {
  CheckSubsetCap(graph.num_vertices(), limits);
  return MaxMinDegreeDeficiencyWithin(
      graph, g, VertexSet::All(graph.num_vertices()), limits);
}

DeficiencyCertificate ClimbMinDegreeDeficiency(const Graph& graph,
                                               const std::vector<int>& g,
                                               VertexSet start) {
  DeficiencyCertificate best = EvaluateMinDegreeDeficiency(graph, start, g);
  for (bool improved = true; improved;) {
    improved = false;
    for (int v = 0; v < graph.num_vertices(); ++v) {
      VertexSet next = best.t;
      if (next.Contains(v)) {
        next.Erase(v);
      } else {
        next.Insert(v);
      }
      DeficiencyCertificate candidate =
          EvaluateMinDegreeDeficiency(graph, next, g);
      if (candidate.value > best.value) {
        best = std::move(candidate);
        improved = true;
      }
    }
  }
  return best;
}

ExistenceVerdict MinParityExists(const Graph& graph, const std::vector<int>& g,
                                 const EnumerationLimits& limits) {
  DeficiencyCertificate cert = MaxMinDegreeDeficiency(graph, g, limits);
  if (cert.value <= 0) return {true, std::nullopt};
  return {false, std::move(cert)};
}

ExistenceVerdict CorollaryExists(const Graph& graph, int m, FactorParity parity,
                                 const EnumerationLimits& limits) {
  if (m <= 0) throw InvalidArgumentError("m must be positive");
  if ((m % 2 == 0) != (parity == FactorParity::kEven)) {
    throw InvalidArgumentError(parity == FactorParity::kEven
                                   ? "even factors need an even m"
                                   : "odd factors need an odd m");
  }
  return MinParityExists(graph, std::vector<int>(graph.num_vertices(), m),
                         limits);
}

}  // namespace pfk
