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

// Text formats shared by the command-line tool.
//
// Graph: '#' comment lines and blank lines are ignored. The first data line is
// "n m", followed by exactly m lines "u v" with 0-based endpoints; repeated
// lines are parallel edges.
//
// Degree bounds: one line "v g f" per vertex, or "v g" for every vertex when
// the upper bound is left open. Each vertex appears exactly once.

#ifndef PFK_GRAPH_IO_H_
#define PFK_GRAPH_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfk/graph.h"

namespace pfk {

// Throws ParseError with the offending line number.
Graph ParseGraph(std::istream& in);
// Throws IoError when the file cannot be read, ParseError on bad content.
Graph ReadGraphFile(const std::filesystem::path& path);

std::string FormatGraph(const Graph& graph,
                        const std::vector<std::string>& comments = {});

struct DegreeBounds {
  std::vector<int> g;
  // Absent when the file uses the two-column form.
  std::optional<std::vector<int>> f;
};

DegreeBounds ParseDegreeBounds(std::istream& in, int num_vertices);
DegreeBounds ReadDegreeBoundsFile(const std::filesystem::path& path,
                                  int num_vertices);

}  // namespace pfk

#endif  // PFK_GRAPH_IO_H_
