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

#include "mask_graph.h"

#include "pfk/errors.h"

namespace pfk::internal {

MaskGraph::MaskGraph(const Graph& graph) : n_(graph.num_vertices()) {
  if (n_ > 63) {
    throw CapExceededError("bitmask evaluation supports at most 63 vertices");
  }
  full_ = n_ == 0 ? 0 : (uint64_t{1} << n_) - 1;
  degree_ = graph.Degrees();
  odd_adjacency_.assign(n_, 0);
  std::vector<std::vector<int>> multiplicity(n_, std::vector<int>(n_, 0));
  for (const Edge& e : graph.edges()) {
    ++multiplicity[e.u][e.v];
    ++multiplicity[e.v][e.u];
  }
  layers_.assign(1, std::vector<uint64_t>(n_, 0));
  for (int v = 0; v < n_; ++v) {
    for (int w = 0; w < n_; ++w) {
      const int count = multiplicity[v][w];
      if (count % 2 == 1) odd_adjacency_[v] |= uint64_t{1} << w;
      for (int k = 0; k < count; ++k) {
        if (k >= static_cast<int>(layers_.size())) {
          layers_.emplace_back(n_, 0);
        }
        layers_[k][v] |= uint64_t{1} << w;
      }
    }
  }
}

}  // namespace pfk::internal
