// Copyright 2026 The orient2 Authors
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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

#include "orient2/error.hpp"
#include "orient2/extremal.hpp"
#include "orient2/graph.hpp"
#include "test_graphs.hpp"

namespace orient2 {
namespace {

using testing::complete_graph;
using testing::mixed_triangle;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(MixedGraphTest, ValidMixedTriangle) {
  MixedGraph g = mixed_triangle();
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.undirected_edges().size(), 1u);
  EXPECT_EQ(g.arcs().size(), 2u);
  EXPECT_TRUE(g.has_undirected(1, 0));
  EXPECT_TRUE(g.has_arc(1, 2));
  EXPECT_FALSE(g.has_arc(2, 1));
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(MixedGraphTest, RejectsParallelConnection) {
  EXPECT_EQ(code_of([] { MixedGraph::validate(2, {{0, 1}}, {{0, 1}}); }),
            ErrorCode::kParallelEdge);
}

TEST(MixedGraphTest, RejectsDigon) {
  EXPECT_EQ(code_of([] { MixedGraph::validate(2, {}, {{0, 1}, {1, 0}}); }),
            ErrorCode::kParallelEdge);
}

TEST(MixedGraphTest, RejectsLoop) {
  EXPECT_EQ(code_of([] { MixedGraph::validate(1, {}, {{0, 0}}); }), ErrorCode::kLoopEdge);
  EXPECT_EQ(code_of([] { MixedGraph::validate(2, {{1, 1}}, {}); }), ErrorCode::kLoopEdge);
}

TEST(MixedGraphTest, RejectsOutOfRange) {
  EXPECT_EQ(code_of([] { MixedGraph::validate(2, {{0, 2}}, {}); }),
            ErrorCode::kVertexOutOfRange);
}

TEST(MixedGraphTest, DeduplicatesAndOrders) {
  MixedGraph g = MixedGraph::validate(3, {{1, 0}, {0, 1}, {2, 1}}, {{2, 0}, {2, 0}});
  ASSERT_EQ(g.undirected_edges().size(), 2u);
  EXPECT_EQ(g.undirected_edges()[0], (VertexPair{0, 1}));
  EXPECT_EQ(g.undirected_edges()[1], (VertexPair{1, 2}));
  EXPECT_EQ(g.arcs().size(), 1u);
  EXPECT_EQ(g.undirected_index(2, 1), 1u);
  EXPECT_FALSE(g.undirected_index(0, 2).has_value());
}

TEST(MixedRatioTest, RejectsOutsideUnitInterval) {
  EXPECT_THROW(MixedRatio(Rational(-1, 2), Rational(0)), Error);
  EXPECT_THROW(MixedRatio(Rational(0), Rational(3, 2)), Error);
  EXPECT_NO_THROW(MixedRatio(Rational(1), Rational(1)));
}

TEST(DegreesTest, MixedTriangleVertex) {
  EXPECT_EQ(degrees(mixed_triangle(), 1), (DegreeSummary{1, 0, 1, 2}));
}

TEST(DegreesTest, IsolatedVertex) {
  MixedGraph g = MixedGraph::validate(2, {}, {});
  EXPECT_EQ(degrees(g, 0), (DegreeSummary{0, 0, 0, 0}));
}

TEST(DegreesTest, ExtremalX2Row) {
  ExtremalLayout layout = build_extremal({MixedRatio(Rational(2, 5), Rational(2, 5)), 1});
  std::size_t seen = 0;
  for (Vertex x = 0; x < layout.graph.order(); ++x) {
    if (layout.class_of[x] != VertexClass::kX2) continue;
    ++seen;
    EXPECT_EQ(degrees(layout.graph, x), (DegreeSummary{0, 9, 50, 59}));
  }
  EXPECT_EQ(seen, 16u);
}

TEST(DegreesTest, StatsOnComplete) {
  DegreeStats s = degree_stats(complete_graph(5));
  EXPECT_EQ(s.min_degree, 4u);
  EXPECT_EQ(s.max_degree, 4u);
}

TEST(MinMixedRatioTest, Examples) {
  EXPECT_EQ(min_mixed_ratio(mixed_triangle()), MixedRatio(Rational(1, 2), Rational(1, 2)));
  EXPECT_EQ(min_mixed_ratio(complete_graph(6)), MixedRatio(Rational(0), Rational(0)));
  MixedGraph star = MixedGraph::validate(4, {}, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(min_mixed_ratio(star).c1(), Rational(1));
  // leaves have in-degree = degree
  EXPECT_EQ(min_mixed_ratio(star).c2(), Rational(1));
}

TEST(CheckMixedRatioTest, Examples) {
  EXPECT_TRUE(check_mixed_ratio(mixed_triangle(), {Rational(1, 2), Rational(1, 2)}).empty());
  auto v = check_mixed_ratio(mixed_triangle(), {Rational(1, 3), Rational(1, 2)});
  ASSERT_FALSE(v.empty());
  for (const RatioViolation& x : v) {
    EXPECT_TRUE(x.exceeds_c1);
    EXPECT_FALSE(x.exceeds_c2);
    EXPECT_EQ(x.out_ratio, Rational(1, 2));
  }
  EXPECT_TRUE(check_mixed_ratio(complete_graph(4), {Rational(0), Rational(0)}).empty());
}

TEST(MgFormatTest, ParsesMixedTriangle) {
  EXPECT_EQ(parse_mg("mgraph 1\nn 3\ne 0 1\na 1 2\na 2 0\n"), mixed_triangle());
}

TEST(MgFormatTest, SerializesMixedTriangle) {
  EXPECT_EQ(serialize_mg(mixed_triangle()), "mgraph 1\nn 3\ne 0 1\na 1 2\na 2 0\n");
  EXPECT_EQ(serialize_mg(MixedGraph::validate(0, {}, {})), "mgraph 1\nn 0\n");
}

TEST(MgFormatTest, UnknownDirectiveReportsLine) {
  try {
    parse_mg("mgraph 1\nn 2\nx 0 1\n");
    FAIL() << "expected SyntaxError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(MgFormatTest, CommentsAndBlankLines) {
  MixedGraph g = parse_mg("mgraph 1   # header\n\n# c\nn 3\n  e 1 0\na 1 2 # x\na 2 0\n");
  EXPECT_EQ(g, mixed_triangle());
}

TEST(MgFormatTest, Errors) {
  EXPECT_EQ(code_of([] { parse_mg("graph 1\nn 2\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { parse_mg("mgraph 1\ne 0 1\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { parse_mg("mgraph 1\nn 2\ne 0\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { parse_mg("mgraph 1\nn 2\ne 0 -1\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { parse_mg("mgraph 1\nn 2\ne 0 5\n"); }), ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(code_of([] { parse_mg("mgraph 1\nn 2\ne 1 1\n"); }), ErrorCode::kLoopEdge);
  EXPECT_EQ(code_of([] { parse_mg("mgraph 1\nn 2\ne 0 1\na 1 0\n"); }),
            ErrorCode::kParallelEdge);
}

TEST(MgFormatTest, StreamOverload) {
  std::istringstream in("mgraph 1\nn 3\ne 0 1\na 1 2\na 2 0\n");
  EXPECT_EQ(parse_mg(in), mixed_triangle());
}

TEST(MgFormatTest, RoundTripProperty) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 12;
    MixedGraph g = testing::random_small_graph(rng, n, 40);
    std::string text = serialize_mg(g);
    MixedGraph back = parse_mg(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_mg(back), text);
    EXPECT_EQ(graph_hash(back), graph_hash(g));
  }
}

TEST(GraphHashTest, DistinguishesGraphs) {
  EXPECT_NE(graph_hash(mixed_triangle()), graph_hash(testing::directed_triangle()));
  EXPECT_NE(graph_hash(complete_graph(3)), graph_hash(complete_graph(4)));
}

}  // namespace
}  // namespace orient2
