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

#ifndef PFK_SRC_MASK_GRAPH_H_
#define PFK_SRC_MASK_GRAPH_H_

#include <bit>
#include <cstdint>
#include <vector>

#include "pfk/graph.h"

namespace pfk::internal {

// Bitmask view of a graph with at most 63 vertices, for the inner loops of
// subset enumeration. Parallel edges are stored as stacked adjacency layers:
// layer k holds the neighbours joined by more than k parallel edges.
class MaskGraph {
 public:
  explicit MaskGraph(const Graph& graph);

  int num_vertices() const { return n_; }
  uint64_t full() const { return full_; }
  uint64_t adjacency(int v) const { return layers_[0][v]; }
  int degree(int v) const { return degree_[v]; }

  // e_G({v}, set).
  int EdgesTo(int v, uint64_t set) const {
    int count = 0;
    for (const auto& layer : layers_) count += std::popcount(layer[v] & set);
    return count;
  }
  // e_G(a, b) for disjoint a, b.
  int EdgesBetween(uint64_t a, uint64_t b) const {
    int count = 0;
    for (uint64_t rest = a; rest != 0; rest &= rest - 1) {
      count += EdgesTo(std::countr_zero(rest), b);
    }
    return count;
  }
  // Parity of e_G(component, set).
  int EdgesParity(uint64_t component, uint64_t set) const {
    int parity = 0;
    for (uint64_t rest = component; rest != 0; rest &= rest - 1) {
      parity ^= std::popcount(odd_adjacency_[std::countr_zero(rest)] & set);
    }
    return parity & 1;
  }

  // Calls fn(component_mask) for every component of the subgraph induced on
  // `alive`, in order of smallest vertex.
  template <typename Fn>
  void ForEachComponent(uint64_t alive, Fn&& fn) const {
    while (alive != 0) {
      uint64_t component = alive & (~alive + 1);
      uint64_t frontier = component;
      while (frontier != 0) {
        uint64_t reach = 0;
        for (uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
          reach |= layers_[0][std::countr_zero(rest)];
        }
        frontier = reach & alive & ~component;
        component |= frontier;
      }
      alive &= ~component;
      fn(component);
    }
  }

  static int Sum(const std::vector<int>& values, uint64_t set) {
    int total = 0;
    for (uint64_t rest = set; rest != 0; rest &= rest - 1) {
      total += values[std::countr_zero(rest)];
    }
    return total;
  }

 private:
  int n_;
  uint64_t full_;
  std::vector<int> degree_;
  std::vector<uint64_t> odd_adjacency_;
  std::vector<std::vector<uint64_t>> layers_;
};

}  // namespace pfk::internal

#endif  // PFK_SRC_MASK_GRAPH_H_
