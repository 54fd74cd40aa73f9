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

// Extremal (c1,c2)-mixed graphs G_m with minimum degree n/(2-c1-c2) +
// Theta(ln n) and no orientation of diameter <= 2.
//
// Vertex classes: cliques B1, B2, B3 and a clique X = X1 u ... u X5.
//   |B1| = |B3| = C(3m,m), |B2| = 3m.
//   every B vertex -> every X2 vertex; every X4 vertex -> every B vertex.
//   (B1 u B2) x X1 and (B2 u B3) x X5 undirected.
//   for each 2m-subset S of B2, u_S in B1 and v_S in B3 are joined to S.
// X-class sizes come from one of two families, chosen by whether
// (1-s)/(c(2-s)) >= 1 with s = c1 + c2 and c = min(c1, c2).

#ifndef ORIENT2_EXTREMAL_HPP_
#define ORIENT2_EXTREMAL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orient2/graph.hpp"
#include "orient2/metrics.hpp"
#include "orient2/rational.hpp"

namespace orient2 {

enum class VertexClass : std::uint8_t { kB1, kB2, kB3, kX1, kX2, kX3, kX4, kX5 };

inline constexpr std::array<VertexClass, 8> kVertexClasses = {
    VertexClass::kB1, VertexClass::kB2, VertexClass::kB3, VertexClass::kX1,
    VertexClass::kX2, VertexClass::kX3, VertexClass::kX4, VertexClass::kX5};

std::string_view class_name(VertexClass cls);
std::optional<VertexClass> parse_class_name(std::string_view name);
inline bool is_x_class(VertexClass cls) { return cls >= VertexClass::kX1; }

enum class ExtremalFamily {
  kMinRatioScaled,        // (1-s)/(c(2-s)) >= 1: X sizes scale with 1/c
  kUndirectedShareScaled, // otherwise: X sizes scale with 1/(1-s)
};

std::string_view family_name(ExtremalFamily family);

struct ExtremalParams {
  MixedRatio ratio;
  unsigned m = 1;
};

struct ClassSizes {
  ExtremalFamily family = ExtremalFamily::kMinRatioScaled;
  BigInt binom;  // C(3m, m)
  BigInt a_m;    // C(3m, m) + 2m - 1
  std::array<BigInt, 8> size;  // indexed by VertexClass
  BigInt order;

  const BigInt& operator[](VertexClass cls) const { return size[static_cast<std::size_t>(cls)]; }
};

// Throws kZeroC when min(c1,c2) = 0, kInfeasibleRatio when a denominator
// vanishes, kNegativeSize, or kNonIntegral listing every fractional class.
ClassSizes cardinalities(const ExtremalParams& p);

// Smallest m in [1, limit] for which all class sizes are integers.
std::optional<unsigned> smallest_integral_m(const MixedRatio& r, unsigned limit = 64);

// Colexicographic rank of a sorted k-subset of {0, 1, ...}:
// sum_i C(s_i, i + 1).
std::uint64_t colex_rank(std::span<const unsigned> subset);
std::vector<unsigned> colex_unrank(std::uint64_t rank, unsigned k);

struct ExtremalLayout {
  MixedGraph graph;
  unsigned m = 0;
  std::optional<MixedRatio> ratio;  // unknown when loaded without a header
  std::vector<VertexClass> class_of;
  std::vector<std::int64_t> gadget_rank;  // -1 outside B1 u B3
  std::vector<Vertex> b2;                 // ascending; subsets index into this
  std::vector<Vertex> b1_of_rank;         // u_S by colex rank of S
  std::vector<Vertex> b3_of_rank;         // v_S by colex rank of S
};

ExtremalLayout build_extremal(const ExtremalParams& p);

// `.classes` sidecar: optional `# extremal c1=<r> c2=<r> m=<m>` header,
// then `<vertex> <class> [<rank>]` per vertex.
std::string serialize_classes(const ExtremalLayout& layout);

// Rebuilds a layout from a graph and its sidecar, checking the class sizes
// and the gadget adjacency. Throws kNotExtremal or kSyntaxError.
ExtremalLayout layout_from_classes(MixedGraph graph, std::string_view classes_text);

// Out/in/un/total degree that every vertex of the class must have.
DegreeSummary expected_degree_row(const ExtremalParams& p, VertexClass cls);

struct DegreeMismatch {
  Vertex vertex = 0;
  VertexClass cls = VertexClass::kB1;
  DegreeSummary expected;
  DegreeSummary actual;
};

// Requires layout.ratio. Empty when every vertex matches its class row.
std::vector<DegreeMismatch> verify_degree_table(const ExtremalLayout& layout);

struct ClosedForms {
  BigInt order;               // sum of class sizes
  Rational order_closed_form;
  Rational delta;             // minimum degree, attained on B1 u B3
  Rational identity_rhs;      // n/(2-s) + m/(2-s) - constant
  bool identity_holds = false;
  bool order_matches = false;
};

ClosedForms closed_forms(const ExtremalParams& p);

// Both sides of delta(G_m) >= n/(2-s) + (2/(2-s)) ln n / (2 ln(27/4)),
// which is only claimed for sufficiently large m.
struct AsymptoticReport {
  double delta = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

AsymptoticReport asymptotic_report(const ExtremalParams& p);

// C(3m,m) = sqrt(3)/(2 sqrt(pi m)) (27/4)^m e^(g1 - g2 - g3) with Robbins'
// remainders 1/(36m+1) < g1 < 1/(36m), 1/(12m+1) < g2 < 1/(12m),
// 1/(24m+1) < g3 < 1/(24m).
struct RobbinsInterval {
  double lower = 0.0;
  double upper = 0.0;
  double log_lower = 0.0;
  double log_upper = 0.0;
};

RobbinsInterval robbins_interval(unsigned m);

enum class WitnessSide { kOut, kIn };

// An ordered pair proven to be at directed distance >= 3.
struct Witness {
  Vertex from = 0;
  Vertex to = 0;
  Vertex anchor = 0;             // the B1 vertex u
  std::vector<Vertex> blocked;   // R, a 2m-subset of B2
  WitnessSide side = WitnessSide::kOut;
  Hops distance = kUnreachable;  // confirmed directed distance
};

// Throws kNotExtremal on an inconsistent layout, kInvalidArgument if `d`
// does not orient layout.graph, kCertificateFailed if confirmation fails.
Witness certify_diameter_ge3(const ExtremalLayout& layout, const Orientation& d);

}  // namespace orient2

#endif  // ORIENT2_EXTREMAL_HPP_
