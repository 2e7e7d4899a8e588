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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "pfk/errors.h"
#include "pfk/generators.h"

namespace pfk {
namespace {

Graph Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

int ParseErrorLine(const std::string& text) {
  try {
    Parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseGraphTest, Basic) {
  const Graph g = Parse("# triangle plus pendant\n4 4\n0 1\n1 2\n\n2 0\n2 3\n");
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(g.Degree(2), 3);
}

TEST(ParseGraphTest, ParallelEdgesKept) {
  const Graph g = Parse("2 3\n0 1\n1 0\n0 1\n");
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.Degree(0), 3);
}

TEST(ParseGraphTest, Errors) {
  EXPECT_EQ(ParseErrorLine(""), 0);
  EXPECT_EQ(ParseErrorLine("3\n"), 1);
  EXPECT_EQ(ParseErrorLine("3 1\n0 0\n"), 2);
  EXPECT_EQ(ParseErrorLine("3 1\n0 3\n"), 2);
  EXPECT_EQ(ParseErrorLine("3 2\n0 1\n"), 0);
  EXPECT_EQ(ParseErrorLine("3 1\n0 1\n1 2\n"), 3);
  EXPECT_EQ(ParseErrorLine("# c\n3 1\n0 x\n"), 3);
  EXPECT_EQ(ParseErrorLine("3 1\n0 1 2\n"), 2);
  EXPECT_EQ(ParseErrorLine("-1 0\n"), 1);
}

TEST(FormatGraphTest, RoundTrip) {
  for (const Graph& g : {PetersenGraph(), TightnessFamily(2).graph,
                         Graph::Build(3, {{0, 1}, {0, 1}}), Graph::Build(0, {})}) {
    const std::string text = FormatGraph(g, {"a comment"});
    EXPECT_EQ(text.rfind("# a comment\n", 0), 0u);
    const Graph back = Parse(text);
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_TRUE(std::equal(back.edges().begin(), back.edges().end(),
                           g.edges().begin(), g.edges().end()));
  }
}

TEST(ReadGraphFileTest, MissingFile) {
  EXPECT_THROW(ReadGraphFile("/nonexistent/graph.txt"), IoError);
}

TEST(ReadGraphFileTest, ReadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "pfk_graph_io_test.txt";
  {
    std::ofstream out(path);
    out << FormatGraph(CompleteGraph(4));
  }
  EXPECT_EQ(ReadGraphFile(path).num_edges(), 6);
  std::filesystem::remove(path);
}

DegreeBounds Bounds(const std::string& text, int n) {
  std::istringstream in(text);
  return ParseDegreeBounds(in, n);
}

TEST(ParseDegreeBoundsTest, TwoAndThreeColumns) {
  const DegreeBounds lower = Bounds("1 2\n0 4\n# c\n2 0\n", 3);
  EXPECT_EQ(lower.g, (std::vector<int>{4, 2, 0}));
  EXPECT_FALSE(lower.f.has_value());

  const DegreeBounds both = Bounds("0 1 3\n1 2 2\n", 2);
  EXPECT_EQ(both.g, (std::vector<int>{1, 2}));
  EXPECT_EQ(*both.f, (std::vector<int>{3, 2}));
}

TEST(ParseDegreeBoundsTest, Errors) {
  EXPECT_THROW(Bounds("0 1\n", 2), ParseError);
  EXPECT_THROW(Bounds("0 1\n0 1\n", 2), ParseError);
  EXPECT_THROW(Bounds("0 1\n1 1 1\n", 2), ParseError);
  EXPECT_THROW(Bounds("0 1\n2 1\n", 2), ParseError);
  EXPECT_THROW(Bounds("0 -1\n1 1\n", 2), ParseError);
  EXPECT_THROW(Bounds("0\n1 1\n", 2), ParseError);
}

}  // namespace
}  // namespace pfk
