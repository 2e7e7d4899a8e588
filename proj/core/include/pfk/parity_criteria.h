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

// Exhaustive deficiency criteria for parity factors.
//
// Two quantities are evaluated here:
//
//   eta(S, T) = g(T) - sum_{x in T} d_{G-S}(x) - f(S) + tau(S, T)
//
// for disjoint S, T, where tau counts the components C of G - (S u T) with
// e_G(V(C), T) + f(V(C)) odd. G has a (g,f)-parity factor iff eta(S, T) <= 0
// for every disjoint pair.
//
//   delta(T) = g(T) - sum_{x in T} d_G(x) + tau(T)
//
// where tau(T) counts components C of G - T with e_G(V(C), T) + g(V(C)) odd.
// G has a factor F with d_F(v) >= g(v) and d_F(v) = g(v) (mod 2) iff
// delta(T) <= 0 for every T.
//
// The Max* functions enumerate every candidate (3^n pairs or 2^n sets) and
// return the maximizer with the smallest bitmask encoding, so results do not
// depend on how the search is split across workers.

#ifndef PFK_PARITY_CRITERIA_H_
#define PFK_PARITY_CRITERIA_H_

#include <optional>
#include <vector>

#include "pfk/degree_spec.h"
#include "pfk/graph.h"

namespace pfk {

// Which per-vertex bound decides whether a component is odd.
enum class TauRule { kFParity, kGParity };

enum class FactorParity { kEven, kOdd };

struct DeficiencyCertificate {
  VertexSet s;
  VertexSet t;
  int value = 0;
  // Exactly the components counted by tau, with edges_to_t filled in.
  std::vector<Component> odd_components;
};

struct ExistenceVerdict {
  bool exists = false;
  // Present iff !exists; its value is then positive.
  std::optional<DeficiencyCertificate> certificate;
};

struct EnumerationLimits {
  // 3^n pair enumeration.
  int max_pair_vertices = 16;
  // 2^n set enumeration.
  int max_subset_vertices = 20;
  // 0 picks std::thread::hardware_concurrency().
  int workers = 0;

  // Defaults, with both caps replaced by $PFK_MAX_N when it is set to a
  // positive integer.
  static EnumerationLimits FromEnvironment();
};

// Components of G - (S u T) whose e_G(V(C), T) + x(V(C)) is odd, where x is f
// or g per `rule`. Throws if S and T overlap.
std::vector<Component> OddComponents(const Graph& graph, const VertexSet& s,
                                     const VertexSet& t, const DegreeSpec& spec,
                                     TauRule rule);
int Tau(const Graph& graph, const VertexSet& s, const VertexSet& t,
        const DegreeSpec& spec, TauRule rule);

// Throws on an invalid spec or overlapping S, T.
int Eta(const Graph& graph, const VertexSet& s, const VertexSet& t,
        const DegreeSpec& spec);
DeficiencyCertificate EvaluateEta(const Graph& graph, const VertexSet& s,
                                  const VertexSet& t, const DegreeSpec& spec);

// delta(T) with the g-parity rule. `g` must be sized to the graph.
int MinDegreeDeficiency(const Graph& graph, const VertexSet& t,
                        const std::vector<int>& g);
DeficiencyCertificate EvaluateMinDegreeDeficiency(const Graph& graph,
                                                  const VertexSet& t,
                                                  const std::vector<int>& g);

// tau(T) as each min-degree corollary states it for constant g = m: for even
// factors a component is odd iff e_G(V(C), T) is odd; for odd factors iff
// e_G(V(C), T) + |V(C)| is odd. Only the parity of m matters.
int CorollaryTau(const Graph& graph, const VertexSet& t, FactorParity parity);

// Maximum eta over all disjoint (S, T). Throws CapExceededError above
// limits.max_pair_vertices.
DeficiencyCertificate MaxEta(const Graph& graph, const DegreeSpec& spec,
                             const EnumerationLimits& limits = {});
ExistenceVerdict LovaszExists(const Graph& graph, const DegreeSpec& spec,
                              const EnumerationLimits& limits = {});

// Maximum delta over all T. Throws CapExceededError above
// limits.max_subset_vertices.
DeficiencyCertificate MaxMinDegreeDeficiency(
    const Graph& graph, const std::vector<int>& g,
    const EnumerationLimits& limits = {});
// Same, restricted to T contained in `pool`; the cap applies to |pool|.
DeficiencyCertificate MaxMinDegreeDeficiencyWithin(
    const Graph& graph, const std::vector<int>& g, const VertexSet& pool,
    const EnumerationLimits& limits = {});
// Hill-climbs delta(T) from `start` by single-vertex insertions and removals
// (first improvement, vertices in increasing order) until no flip increases
// it. Polynomial, for graphs beyond the enumeration caps; the result is a
// local maximum only.
DeficiencyCertificate ClimbMinDegreeDeficiency(const Graph& graph,
                                               const std::vector<int>& g,
                                               VertexSet start);

ExistenceVerdict MinParityExists(const Graph& graph, const std::vector<int>& g,
                                 const EnumerationLimits& limits = {});

// Even (odd) factor with every degree >= m. Throws InvalidArgumentError when
// m <= 0 or m's parity does not match `parity`.
ExistenceVerdict CorollaryExists(const Graph& graph, int m, FactorParity parity,
                                 const EnumerationLimits& limits = {});

}  // namespace pfk

#endif  // PFK_PARITY_CRITERIA_H_
