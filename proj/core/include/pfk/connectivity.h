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

#ifndef PFK_CONNECTIVITY_H_
#define PFK_CONNECTIVITY_H_

#include "pfk/graph.h"

namespace pfk {

// One shore of an edge cut; `value` edges cross between `side` and its
// complement.
struct CutCertificate {
  int value = 0;
  VertexSet side;
};

// Global edge connectivity lambda(G) with a minimum cut. Computed as the
// minimum over t != 0 of the unit-capacity max flow from vertex 0 to t; the
// shore is the source side of the residual graph, and ties keep the
// lexicographically smallest shore. A disconnected graph yields 0 with the
// component of vertex 0 as shore. Throws InvalidArgumentError when n < 2.
CutCertificate EdgeConnectivity(const Graph& graph);

bool IsKEdgeConnected(const Graph& graph, int k);

// True iff removing some single edge increases the number of components.
bool HasBridge(const Graph& graph);

}  // namespace pfk

#endif  // PFK_CONNECTIVITY_H_
