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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "orient2/error.hpp"
#include "orient2/extremal.hpp"
#include "orient2/prob_orient.hpp"

namespace orient2 {
namespace {

ExtremalParams params(long p1, long q1, long p2, long q2, unsigned m) {
  return {MixedRatio(Rational(p1, q1), Rational(p2, q2)), m};
}

std::size_t sz(const ClassSizes& s, VertexClass c) { return s[c].get_ui(); }

TEST(CardinalitiesTest, UndirectedShareFamily) {
  ClassSizes s = cardinalities(params(2, 5, 2, 5, 1));
  EXPECT_EQ(s.family, ExtremalFamily::kUndirectedShareScaled);
  EXPECT_EQ(s.a_m, 4);
  EXPECT_EQ(sz(s, VertexClass::kB1), 3u);
  EXPECT_EQ(sz(s, VertexClass::kB2), 3u);
  EXPECT_EQ(sz(s, VertexClass::kB3), 3u);
  EXPECT_EQ(sz(s, VertexClass::kX1), 4u);
  EXPECT_EQ(sz(s, VertexClass::kX2), 16u);
  EXPECT_EQ(sz(s, VertexClass::kX3), 11u);
  EXPECT_EQ(sz(s, VertexClass::kX4), 16u);
  EXPECT_EQ(sz(s, VertexClass::kX5), 4u);
  EXPECT_EQ(s.order, 60);
}

TEST(CardinalitiesTest, MinRatioFamily) {
  ClassSizes s = cardinalities(params(1, 4, 1, 4, 2));
  EXPECT_EQ(s.family, ExtremalFamily::kMinRatioScaled);
  EXPECT_EQ(s.a_m, 18);
  EXPECT_EQ(sz(s, VertexClass::kB1), 15u);
  EXPECT_EQ(sz(s, VertexClass::kB2), 6u);
  EXPECT_EQ(sz(s, VertexClass::kB3), 15u);
  EXPECT_EQ(sz(s, VertexClass::kX1), 30u);
  EXPECT_EQ(sz(s, VertexClass::kX2), 24u);
  EXPECT_EQ(sz(s, VertexClass::kX3), 7u);
  EXPECT_EQ(sz(s, VertexClass::kX4), 24u);
  EXPECT_EQ(sz(s, VertexClass::kX5), 30u);
  EXPECT_EQ(s.order, 151);
  // (2/c)(C(3m,m) + 2m) - m + 1
  EXPECT_EQ(s.order, 8 * (15 + 4) - 2 + 1);
}

TEST(CardinalitiesTest, Errors) {
  auto code = [](const ExtremalParams& p) {
    try {
      cardinalities(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code(params(0, 1, 1, 2, 1)), ErrorCode::kZeroC);
  EXPECT_EQ(code(params(1, 2, 1, 2, 1)), ErrorCode::kInfeasibleRatio);
  EXPECT_EQ(code(params(1, 4, 1, 4, 1)), ErrorCode::kNonIntegral);
  try {
    cardinalities(params(1, 4, 1, 4, 1));
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("X1=20/3", 0), 0u) << e.what();
  }
  EXPECT_EQ(smallest_integral_m(MixedRatio(Rational(1, 4), Rational(1, 4))), 2u);
  EXPECT_EQ(smallest_integral_m(MixedRatio(Rational(2, 5), Rational(2, 5))), 1u);
}

TEST(ColexTest, EnumerationOrderAndInverse) {
  for (unsigned n = 1; n <= 9; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      // colex order: compare reversed sorted tuples
      std::vector<std::vector<unsigned>> subsets;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
        std::vector<unsigned> s;
        for (unsigned i = 0; i < n; ++i)
          if (mask >> i & 1) s.push_back(i);
        subsets.push_back(s);
      }
      std::sort(subsets.begin(), subsets.end(), [](auto a, auto b) {
        std::reverse(a.begin(), a.end());
        std::reverse(b.begin(), b.end());
        return a < b;
      });
      for (std::size_t r = 0; r < subsets.size(); ++r) {
        ASSERT_EQ(colex_rank(subsets[r]), r);
        ASSERT_EQ(colex_unrank(r, k), subsets[r]);
      }
    }
  }
}

TEST(BuildExtremalTest, EdgeCountsAndDegree) {
  ExtremalLayout layout = build_extremal(params(2, 5, 2, 5, 1));
  const MixedGraph& g = layout.graph;
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(g.undirected_edges().size(), 1344u);
  EXPECT_EQ(g.arcs().size(), 288u);
  EXPECT_EQ(degree_stats(g).min_degree, 40u);
  for (Vertex v = 0; v < g.order(); ++v) {
    bool b13 = layout.class_of[v] == VertexClass::kB1 || layout.class_of[v] == VertexClass::kB3;
    EXPECT_EQ(degrees(g, v).total == 40, b13) << v;
  }
  EXPECT_TRUE(min_mixed_ratio(g).dominated_by(MixedRatio(Rational(2, 5), Rational(2, 5))));
  EXPECT_TRUE(check_mixed_ratio(g, MixedRatio(Rational(2, 5), Rational(2, 5))).empty());
}

TEST(BuildExtremalTest, GadgetStructure) {
  ExtremalLayout layout = build_extremal(params(1, 4, 1, 4, 2));
  const MixedGraph& g = layout.graph;
  ASSERT_EQ(layout.b1_of_rank.size(), 15u);
  for (std::size_t r = 0; r < layout.b1_of_rank.size(); ++r) {
    std::vector<unsigned> s = colex_unrank(r, 4);
    for (unsigned local = 0; local < layout.b2.size(); ++local) {
      bool in_s = std::find(s.begin(), s.end(), local) != s.end();
      EXPECT_EQ(g.has_undirected(layout.b1_of_rank[r], layout.b2[local]), in_s);
      EXPECT_EQ(g.has_undirected(layout.b3_of_rank[r], layout.b2[local]), in_s);
    }
    EXPECT_EQ(layout.gadget_rank[layout.b1_of_rank[r]], static_cast<std::int64_t>(r));
  }
}

TEST(BuildExtremalTest, TooLarge) {
  ClassSizes s = cardinalities(params(2, 5, 2, 5, 6));
  EXPECT_GT(s.order, static_cast<long>(kMaxOrder));
  try {
    build_extremal(params(2, 5, 2, 5, 6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(DegreeTableTest, Rows) {
  EXPECT_EQ(expected_degree_row(params(2, 5, 2, 5, 1), VertexClass::kB1),
            (DegreeSummary{16, 16, 8, 40}));
  EXPECT_EQ(expected_degree_row(params(1, 4, 1, 4, 2), VertexClass::kB2),
            (DegreeSummary{24, 24, 85, 133}));
  EXPECT_EQ(expected_degree_row(params(2, 5, 2, 5, 1), VertexClass::kX2),
            (DegreeSummary{0, 9, 50, 59}));
}

TEST(DegreeTableTest, BuiltInstancesMatch) {
  for (const auto& p : {params(2, 5, 2, 5, 1), params(2, 5, 2, 5, 2), params(1, 4, 1, 4, 2)}) {
    ExtremalLayout layout = build_extremal(p);
    EXPECT_TRUE(verify_degree_table(layout).empty());
  }
}

TEST(DegreeTableTest, DetectsDeletedGadgetEdge) {
  ExtremalLayout layout = build_extremal(params(2, 5, 2, 5, 1));
  const Vertex u = layout.b1_of_rank[0];
  const Vertex b = layout.b2[colex_unrank(0, 2)[0]];
  std::vector<VertexPair> e(layout.graph.undirected_edges().begin(),
                            layout.graph.undirected_edges().end());
  std::erase(e, VertexPair{std::min(u, b), std::max(u, b)});
  std::vector<VertexPair> a(layout.graph.arcs().begin(), layout.graph.arcs().end());
  const std::string classes = serialize_classes(layout);
  layout.graph = MixedGraph::validate(layout.graph.order(), e, a);
  std::vector<DegreeMismatch> bad = verify_degree_table(layout);
  ASSERT_EQ(bad.size(), 2u);
  EXPECT_EQ(bad[0].vertex, std::min(u, b));
  EXPECT_EQ(bad[1].vertex, std::max(u, b));
  for (const DegreeMismatch& d : bad) EXPECT_EQ(d.actual.un + 1, d.expected.un);

  try {
    layout_from_classes(layout.graph, classes);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotExtremal);
  }
}

TEST(ClassesFileTest, RoundTrip) {
  ExtremalLayout layout = build_extremal(params(1, 4, 1, 4, 2));
  std::string text = serialize_classes(layout);
  EXPECT_EQ(text.rfind("# extremal c1=1/4 c2=1/4 m=2\n", 0), 0u);
  ExtremalLayout back = layout_from_classes(layout.graph, text);
  EXPECT_EQ(back.m, 2u);
  ASSERT_TRUE(back.ratio.has_value());
  EXPECT_EQ(*back.ratio, layout.ratio);
  EXPECT_EQ(back.class_of, layout.class_of);
  EXPECT_EQ(back.gadget_rank, layout.gadget_rank);
  EXPECT_EQ(back.b1_of_rank, layout.b1_of_rank);
  EXPECT_EQ(back.b3_of_rank, layout.b3_of_rank);
  EXPECT_EQ(serialize_classes(back), text);
}

TEST(ClosedFormsTest, Identities) {
  ClosedForms a = closed_forms(params(2, 5, 2, 5, 1));
  EXPECT_EQ(a.order, 60);
  EXPECT_EQ(a.delta, Rational(40));
  EXPECT_TRUE(a.identity_holds);
  EXPECT_TRUE(a.order_matches);
  EXPECT_EQ(a.identity_rhs, Rational(40));

  ClosedForms b = closed_forms(params(1, 4, 1, 4, 2));
  EXPECT_EQ(b.order, 151);
  EXPECT_EQ(b.delta, Rational(96));
  EXPECT_TRUE(b.identity_holds);
  EXPECT_TRUE(b.order_matches);

  for (const auto& p : {params(2, 5, 2, 5, 1), params(1, 4, 1, 4, 2)}) {
    ExtremalLayout layout = build_extremal(p);
    EXPECT_EQ(Rational(static_cast<long>(degree_stats(layout.graph).min_degree)),
              closed_forms(p).delta);
  }
}

TEST(AsymptoticReportTest, ReportsBothSides) {
  AsymptoticReport r = asymptotic_report(params(2, 5, 2, 5, 1));
  EXPECT_DOUBLE_EQ(r.delta, 40.0);
  double rhs = 60 / 1.2 + (2 / 1.2) * std::log(60.0) / (2 * std::log(27.0 / 4));
  EXPECT_NEAR(r.rhs, rhs, 1e-9);
  EXPECT_EQ(r.holds, r.delta >= r.rhs);
}

TEST(RobbinsTest, Intervals) {
  RobbinsInterval one = robbins_interval(1);
  EXPECT_NEAR(one.lower, 2.990, 1e-3);
  EXPECT_NEAR(one.upper, 3.017, 1e-3);
  RobbinsInterval two = robbins_interval(2);
  EXPECT_GE(two.lower, 14.9);
  EXPECT_LE(two.upper, 15.1);
  for (unsigned m = 1; m <= 12; ++m) {
    RobbinsInterval r = robbins_interval(m);
    double c = binomial(3 * m, m).get_d();
    EXPECT_LT(r.lower, c) << m;
    EXPECT_GT(r.upper, c) << m;
    EXPECT_NEAR(std::exp(r.log_lower), r.lower, 1e-9 * r.lower);
  }
}

TEST(CertifyTest, SeedSevenOutOrIn) {
  ExtremalLayout layout = build_extremal(params(2, 5, 2, 5, 1));
  Witness w = certify_diameter_ge3(layout, sample_orientation(layout.graph, 7));
  EXPECT_GE(w.distance, 3u);
  EXPECT_EQ(w.blocked.size(), 2u);
}

TEST(CertifyTest, InSideBranch) {
  ExtremalLayout layout = build_extremal(params(2, 5, 2, 5, 1));
  const MixedGraph& g = layout.graph;
  Orientation o = sample_orientation(g, 3);
  Vertex u = 0;
  while (layout.class_of[u] != VertexClass::kB1) ++u;
  for (Vertex b : layout.b2) {
    if (auto e = g.undirected_index(u, b); e && o.directed(*e).u != u) o.flip(*e);
  }
  Witness w = certify_diameter_ge3(layout, o);
  EXPECT_EQ(w.side, WitnessSide::kIn);
  EXPECT_EQ(w.to, u);
  EXPECT_EQ(layout.class_of[w.from], VertexClass::kB3);
  EXPECT_GE(w.distance, 3u);
}

TEST(CertifyTest, OutSideBranch) {
  ExtremalLayout layout = build_extremal(params(2, 5, 2, 5, 1));
  const MixedGraph& g = layout.graph;
  Orientation o = sample_orientation(g, 3);
  Vertex u = 0;
  while (layout.class_of[u] != VertexClass::kB1) ++u;
  for (Vertex b : layout.b2) {
    if (auto e = g.undirected_index(u, b); e && o.directed(*e).u == u) o.flip(*e);
  }
  Witness w = certify_diameter_ge3(layout, o);
  EXPECT_EQ(w.side, WitnessSide::kOut);
  EXPECT_EQ(w.from, u);
}

TEST(CertifyTest, ManyRandomOrientations) {
  ExtremalLayout layout = build_extremal(params(1, 4, 1, 4, 2));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    EXPECT_NO_THROW(certify_diameter_ge3(layout, sample_orientation(layout.graph, seed)));
  }
}

}  // namespace
}  // namespace orient2
