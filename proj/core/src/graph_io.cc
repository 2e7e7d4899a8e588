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

#include "pfk/graph_io.h"

#include <fstream>
#include <istream>
#include <sstream>

#include "pfk/errors.h"

namespace pfk {
namespace {

// Reads the next non-comment, non-blank line; false at end of input.
bool NextDataLine(std::istream& in, std::string& line, int& line_number) {
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<long long> Integers(const std::string& line, int line_number) {
  std::istringstream fields(line);
  std::vector<long long> out;
  std::string token;
  while (fields >> token) {
    try {
      size_t used = 0;
      const long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError(line_number, "expected an integer, found '" + token + "'");
    }
  }
  return out;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

}  // namespace

Graph ParseGraph(std::istream& in) {
  std::string line;
  int line_number = 0;
  if (!NextDataLine(in, line, line_number)) {
    throw ParseError(0, "missing header line 'n m'");
  }
  const std::vector<long long> header = Integers(line, line_number);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0 ||
      header[0] > (1 << 24) || header[1] > (1 << 26)) {
    throw ParseError(line_number, "header must be 'n m' with n, m >= 0");
  }
  const int n = static_cast<int>(header[0]);
  const int m = static_cast<int>(header[1]);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!NextDataLine(in, line, line_number)) {
      throw ParseError(0, "expected " + std::to_string(m) + " edges, found " +
                              std::to_string(i));
    }
    const std::vector<long long> pair = Integers(line, line_number);
    if (pair.size() != 2) {
      throw ParseError(line_number, "edge line must be 'u v'");
    }
    if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n) {
      throw ParseError(line_number, "endpoint outside 0.." + std::to_string(n - 1));
    }
    if (pair[0] == pair[1]) throw ParseError(line_number, "self-loop");
    edges.push_back({static_cast<int>(pair[0]), static_cast<int>(pair[1])});
  }
  if (NextDataLine(in, line, line_number)) {
    throw ParseError(line_number, "unexpected data after " + std::to_string(m) +
                                      " edges");
  }
  return Graph::Build(n, edges);
}

Graph ReadGraphFile(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseGraph(in);
}

std::string FormatGraph(const Graph& graph,
                        const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& comment : comments) out << "# " << comment << '\n';
  out << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DegreeBounds ParseDegreeBounds(std::istream& in, int num_vertices) {
  std::vector<int> g(num_vertices, 0);
  std::vector<int> f(num_vertices, 0);
  std::vector<bool> seen(num_vertices, false);
  int columns = 0;
  std::string line;
  int line_number = 0;
  while (NextDataLine(in, line, line_number)) {
    const std::vector<long long> row = Integers(line, line_number);
    if (row.size() != 2 && row.size() != 3) {
      throw ParseError(line_number, "bound line must be 'v g' or 'v g f'");
    }
    if (columns == 0) columns = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != columns) {
      throw ParseError(line_number, "mixed 'v g' and 'v g f' lines");
    }
    if (row[0] < 0 || row[0] >= num_vertices) {
      throw ParseError(line_number, "vertex outside 0.." +
                                        std::to_string(num_vertices - 1));
    }
    const int v = static_cast<int>(row[0]);
    if (seen[v]) {
      throw ParseError(line_number, "vertex " + std::to_string(v) + " repeated");
    }
    for (size_t k = 1; k < row.size(); ++k) {
      if (row[k] < 0 || row[k] > (1 << 24)) {
        throw ParseError(line_number, "bounds must be non-negative");
      }
    }
    seen[v] = true;
    g[v] = static_cast<int>(row[1]);
    if (columns == 3) f[v] = static_cast<int>(row[2]);
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (!seen[v]) {
      throw ParseError(0, "no bounds given for vertex " + std::to_string(v));
    }
  }
  DegreeBounds bounds{std::move(g), std::nullopt};
  if (columns == 3) bounds.f = std::move(f);
  return bounds;
}

DegreeBounds ReadDegreeBoundsFile(const std::filesystem::path& path,
                                  int num_vertices) {
  std::ifstream in = OpenOrThrow(path);
  return ParseDegreeBounds(in, num_vertices);
}

}  // namespace pfk
