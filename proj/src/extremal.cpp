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

#include "orient2/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "orient2/error.hpp"

namespace orient2 {
namespace {

constexpr std::size_t idx(VertexClass cls) { return static_cast<std::size_t>(cls); }

Rational min_ratio(const MixedRatio& r) { return r.c1() < r.c2() ? r.c1() : r.c2(); }

ExtremalFamily select_family(const MixedRatio& r) {
  const Rational c = min_ratio(r);
  if (c == 0) {
    throw Error(ErrorCode::kZeroC, "min(c1,c2) = 0 has no extremal construction here");
  }
  const Rational s = r.sum();
  if (s >= 2) throw Error(ErrorCode::kInfeasibleRatio, "c1 + c2 must be below 2");
  return (Rational(1) - s) / (c * (Rational(2) - s)) >= 1 ? ExtremalFamily::kMinRatioScaled
                                                         : ExtremalFamily::kUndirectedShareScaled;
}

struct RationalSizes {
  ExtremalFamily family;
  BigInt binom;
  BigInt a_m;
  std::array<Rational, 8> size;
};

RationalSizes rational_sizes(const ExtremalParams& p) {
  if (p.m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  RationalSizes rs;
  rs.family = select_family(p.ratio);
  const Rational c1 = p.ratio.c1();
  const Rational c2 = p.ratio.c2();
  const Rational c = min_ratio(p.ratio);
  const Rational s = c1 + c2;
  const unsigned m = p.m;
  rs.binom = binomial(3ULL * m, m);
  rs.a_m = rs.binom + 2 * m - 1;
  const Rational a(rs.a_m);
  const Rational binom(rs.binom);
  rs.size[idx(VertexClass::kB1)] = binom;
  rs.size[idx(VertexClass::kB3)] = binom;
  rs.size[idx(VertexClass::kB2)] = Rational(3 * m);
  if (rs.family == ExtremalFamily::kMinRatioScaled) {
    const Rational k = c * (Rational(2) - s);
    rs.size[idx(VertexClass::kX1)] = ((Rational(2) - 2 * s) / k - 1) * a;
    rs.size[idx(VertexClass::kX2)] = (2 * c1 / k) * a;
    rs.size[idx(VertexClass::kX3)] = Rational(2) / c - 1;
    rs.size[idx(VertexClass::kX4)] = (2 * c2 / k) * a;
  } else {
    const Rational w = Rational(1) - s;
    if (w <= 0) {
      throw Error(ErrorCode::kInfeasibleRatio,
                  "c1 + c2 = " + to_string(s) + " leaves no room for undirected degree");
    }
    rs.size[idx(VertexClass::kX1)] = a;
    rs.size[idx(VertexClass::kX2)] = (2 * c1 / w) * a;
    rs.size[idx(VertexClass::kX3)] = Rational(2) / w + 1;
    rs.size[idx(VertexClass::kX4)] = (2 * c2 / w) * a;
  }
  rs.size[idx(VertexClass::kX5)] = rs.size[idx(VertexClass::kX1)];
  for (auto& x : rs.size) x.canonicalize();
  return rs;
}

// Binomials for colex ranking; the subsets involved are small.
std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return binomial(n, k).get_ui();
}

}  // namespace

std::string_view class_name(VertexClass cls) {
  static constexpr std::array<std::string_view, 8> names = {"B1", "B2", "B3", "X1",
                                                            "X2", "X3", "X4", "X5"};
  return names[idx(cls)];
}

std::optional<VertexClass> parse_class_name(std::string_view name) {
  for (auto cls : kVertexClasses) {
    if (class_name(cls) == name) return cls;
  }
  return std::nullopt;
}

std::string_view family_name(ExtremalFamily family) {
  return family == ExtremalFamily::kMinRatioScaled ? "min-ratio" : "undirected-share";
}

ClassSizes cardinalities(const ExtremalParams& p) {
  const RationalSizes rs = rational_sizes(p);
  std::string negative;
  std::string fractional;
  for (auto cls : kVertexClasses) {
    const Rational& x = rs.size[idx(cls)];
    if (x < 0) negative += (negative.empty() ? "" : " ") + std::string(class_name(cls)) + "=" + to_string(x);
    else if (!is_integral(x)) fractional += (fractional.empty() ? "" : " ") + std::string(class_name(cls)) + "=" + to_string(x);
  }
  if (!negative.empty()) throw Error(ErrorCode::kNegativeSize, negative);
  if (!fractional.empty()) {
    if (const auto hint = smallest_integral_m(p.ratio)) {
      fractional += "; smallest integral m=" + std::to_string(*hint);
    }
    throw Error(ErrorCode::kNonIntegral, fractional);
  }
  ClassSizes out;
  out.family = rs.family;
  out.binom = rs.binom;
  out.a_m = rs.a_m;
  out.order = 0;
  for (auto cls : kVertexClasses) {
    out.size[idx(cls)] = rs.size[idx(cls)].get_num();
    out.order += out.size[idx(cls)];
  }
  return out;
}

std::optional<unsigned> smallest_integral_m(const MixedRatio& r, unsigned limit) {
  for (unsigned m = 1; m <= limit; ++m) {
    const RationalSizes rs = rational_sizes({r, m});
    if (std::all_of(rs.size.begin(), rs.size.end(),
                    [](const Rational& x) { return x >= 0 && is_integral(x); })) {
      return m;
    }
  }
  return std::nullopt;
}

std::uint64_t colex_rank(std::span<const unsigned> subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) rank += small_binomial(subset[i], i + 1);
  return rank;
}

std::vector<unsigned> colex_unrank(std::uint64_t rank, unsigned k) {
  std::vector<unsigned> subset(k);
  for (unsigned i = k; i >= 1; --i) {
    unsigned s = i - 1;
    while (small_binomial(s + 1, i) <= rank) ++s;
    subset[i - 1] = s;
    rank -= small_binomial(s, i);
  }
  return subset;
}

ExtremalLayout build_extremal(const ExtremalParams& p) {
  const ClassSizes sizes = cardinalities(p);
  if (sizes.order > static_cast<unsigned long>(kMaxOrder)) {
    throw Error(ErrorCode::kTooLarge,
                "G_m has " + to_string(sizes.order) + " vertices, above " + std::to_string(kMaxOrder));
  }
  ExtremalLayout layout;
  layout.m = p.m;
  layout.ratio = p.ratio;
  std::array<std::vector<Vertex>, 8> members;
  Vertex next = 0;
  for (auto cls : kVertexClasses) {
    const auto count = sizes[cls].get_ui();
    for (unsigned long i = 0; i < count; ++i) {
      members[idx(cls)].push_back(next++);
      layout.class_of.push_back(cls);
    }
  }
  const std::size_t n = next;
  layout.gadget_rank.assign(n, -1);
  layout.b2 = members[idx(VertexClass::kB2)];
  layout.b1_of_rank = members[idx(VertexClass::kB1)];
  layout.b3_of_rank = members[idx(VertexClass::kB3)];
  for (std::size_t r = 0; r < layout.b1_of_rank.size(); ++r) {
    layout.gadget_rank[layout.b1_of_rank[r]] = static_cast<std::int64_t>(r);
    layout.gadget_rank[layout.b3_of_rank[r]] = static_cast<std::int64_t>(r);
  }

  std::vector<VertexPair> undirected;
  std::vector<VertexPair> arcs;
  auto clique = [&](const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) undirected.push_back({vs[i], vs[j]});
    }
  };
  auto join = [&](const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
    for (Vertex a : left) {
      for (Vertex b : right) undirected.push_back({a, b});
    }
  };
  clique(members[idx(VertexClass::kB1)]);
  clique(members[idx(VertexClass::kB2)]);
  clique(members[idx(VertexClass::kB3)]);
  std::vector<Vertex> x_all;
  for (auto cls : kVertexClasses) {
    if (is_x_class(cls)) x_all.insert(x_all.end(), members[idx(cls)].begin(), members[idx(cls)].end());
  }
  clique(x_all);
  for (auto cls : {VertexClass::kB1, VertexClass::kB2, VertexClass::kB3}) {
    for (Vertex b : members[idx(cls)]) {
      for (Vertex x : members[idx(VertexClass::kX2)]) arcs.push_back({b, x});
      for (Vertex x : members[idx(VertexClass::kX4)]) arcs.push_back({x, b});
    }
  }
  join(members[idx(VertexClass::kB1)], members[idx(VertexClass::kX1)]);
  join(members[idx(VertexClass::kB2)], members[idx(VertexClass::kX1)]);
  join(members[idx(VertexClass::kB2)], members[idx(VertexClass::kX5)]);
  join(members[idx(VertexClass::kB3)], members[idx(VertexClass::kX5)]);
  for (std::size_t r = 0; r < layout.b1_of_rank.size(); ++r) {
    for (unsigned local : colex_unrank(r, 2 * p.m)) {
      undirected.push_back({layout.b1_of_rank[r], layout.b2[local]});
      undirected.push_back({layout.b3_of_rank[r], layout.b2[local]});
    }
  }
  layout.graph = MixedGraph::validate(n, std::move(undirected), std::move(arcs));
  return layout;
}

std::string serialize_classes(const ExtremalLayout& layout) {
  std::string out;
  if (layout.ratio) {
    out += "# extremal c1=" + to_string(layout.ratio->c1()) + " c2=" + to_string(layout.ratio->c2()) +
           " m=" + std::to_string(layout.m) + "\n";
  }
  for (Vertex v = 0; v < layout.class_of.size(); ++v) {
    out += std::to_string(v) + " " + std::string(class_name(layout.class_of[v]));
    if (layout.gadget_rank[v] >= 0) out += " " + std::to_string(layout.gadget_rank[v]);
    out += "\n";
  }
  return out;
}

ExtremalLayout layout_from_classes(MixedGraph graph, std::string_view text) {
  const std::size_t n = graph.order();
  ExtremalLayout layout;
  layout.class_of.assign(n, VertexClass::kB1);
  layout.gadget_rank.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto syntax = [&](const std::string& what) {
    throw Error(ErrorCode::kSyntaxError, "classes line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("# extremal ", 0) == 0) {
      std::istringstream header(line.substr(11));
      std::string c1, c2, m;
      header >> c1 >> c2 >> m;
      if (c1.rfind("c1=", 0) != 0 || c2.rfind("c2=", 0) != 0 || m.rfind("m=", 0) != 0) {
        syntax("malformed extremal header");
      }
      layout.ratio = MixedRatio(parse_rational(c1.substr(3)), parse_rational(c2.substr(3)));
      continue;
    }
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long vertex = -1;
    std::string cls_text;
    if (!(fields >> vertex)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      syntax("expected '<vertex> <class> [<rank>]'");
    }
    if (!(fields >> cls_text)) syntax("missing class label");
    const auto cls = parse_class_name(cls_text);
    if (!cls) syntax("unknown class '" + cls_text + "'");
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= n) syntax("vertex out of range");
    if (seen[vertex]) syntax("vertex listed twice");
    seen[vertex] = true;
    layout.class_of[vertex] = *cls;
    long long rank = -1;
    if (fields >> rank) layout.gadget_rank[vertex] = rank;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::kNotExtremal, "classes file does not label every vertex");
  }

  std::array<std::size_t, 8> count{};
  for (auto cls : layout.class_of) ++count[idx(cls)];
  const std::size_t b2 = count[idx(VertexClass::kB2)];
  if (b2 == 0 || b2 % 3 != 0) throw Error(ErrorCode::kNotExtremal, "|B2| must be a positive multiple of 3");
  layout.m = static_cast<unsigned>(b2 / 3);
  const std::size_t gadgets = small_binomial(b2, 2 * layout.m);
  if (count[idx(VertexClass::kB1)] != gadgets || count[idx(VertexClass::kB3)] != gadgets) {
    throw Error(ErrorCode::kNotExtremal, "|B1| and |B3| must equal C(3m, 2m)");
  }
  layout.b1_of_rank.assign(gadgets, static_cast<Vertex>(n));
  layout.b3_of_rank.assign(gadgets, static_cast<Vertex>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto cls = layout.class_of[v];
    if (cls == VertexClass::kB2) layout.b2.push_back(v);
    if (cls != VertexClass::kB1 && cls != VertexClass::kB3) continue;
    const auto rank = layout.gadget_rank[v];
    if (rank < 0 || static_cast<std::size_t>(rank) >= gadgets) {
      throw Error(ErrorCode::kNotExtremal, "vertex " + std::to_string(v) + " lacks a valid gadget rank");
    }
    auto& slot = (cls == VertexClass::kB1 ? layout.b1_of_rank : layout.b3_of_rank)[rank];
    if (slot != n) throw Error(ErrorCode::kNotExtremal, "gadget rank used twice");
    slot = v;
  }
  layout.graph = std::move(graph);
  for (std::size_t r = 0; r < gadgets; ++r) {
    std::vector<Vertex> expected;
    for (unsigned local : colex_unrank(r, 2 * layout.m)) expected.push_back(layout.b2[local]);
    for (Vertex owner : {layout.b1_of_rank[r], layout.b3_of_rank[r]}) {
      std::vector<Vertex> actual;
      for (Vertex w : layout.b2) {
        if (layout.graph.has_undirected(owner, w)) actual.push_back(w);
      }
      if (actual != expected) {
        throw Error(ErrorCode::kNotExtremal,
                    "vertex " + std::to_string(owner) + " is not joined to its gadget subset");
      }
    }
  }
  return layout;
}

DegreeSummary expected_degree_row(const ExtremalParams& p, VertexClass cls) {
  const ClassSizes sizes = cardinalities(p);
  const Rational c1 = p.ratio.c1();
  const Rational c2 = p.ratio.c2();
  const Rational c = min_ratio(p.ratio);
  const Rational s = c1 + c2;
  const Rational m(p.m);
  const Rational a(sizes.a_m);
  const Rational binom(sizes.binom);
  const Rational gadget_share = binom / 3 + m;  // C(3m,m)/3 + m
  const Rational arc_degree = 2 * binom + 3 * m;
  const Rational x_span = 2 * binom + 4 * m;

  Rational out, in, un, total;
  if (sizes.family == ExtremalFamily::kMinRatioScaled) {
    const Rational k = c * (Rational(2) - s);
    switch (cls) {
      case VertexClass::kB1:
      case VertexClass::kB3:
        out = 2 * c1 / k * a;
        in = 2 * c2 / k * a;
        un = (Rational(2) - 2 * s) / k * a;
        total = Rational(2) / k * a;
        break;
      case VertexClass::kB2:
        out = 2 * c1 / k * a;
        in = 2 * c2 / k * a;
        un = ((Rational(4) - 4 * s) / k - 1) * a + gadget_share;
        total = (Rational(2) - c) / c * a + gadget_share;
        break;
      case VertexClass::kX1:
      case VertexClass::kX5:
        out = in = 0;
        un = total = (Rational(2) - c) / c * (binom + 2 * m) + m;
        break;
      case VertexClass::kX2:
        out = 0;
        in = arc_degree;
        un = (Rational(1) - c) / c * x_span;
        total = x_span / c - m;
        break;
      case VertexClass::kX3:
        out = in = 0;
        un = total = (Rational(1) - c) / c * x_span;
        break;
      case VertexClass::kX4:
        out = arc_degree;
        in = 0;
        un = (Rational(1) - c) / c * x_span;
        total = x_span / c - m;
        break;
    }
  } else {
    const Rational w = Rational(1) - s;
    switch (cls) {
      case VertexClass::kB1:
      case VertexClass::kB3:
        out = 2 * c1 / w * a;
        in = 2 * c2 / w * a;
        un = 2 * a;
        total = Rational(2) / w * a;
        break;
      case VertexClass::kB2:
        out = 2 * c1 / w * a;
        in = 2 * c2 / w * a;
        un = 3 * a + gadget_share;
        total = (Rational(3) - s) / w * a + gadget_share;
        break;
      case VertexClass::kX1:
      case VertexClass::kX5:
        out = in = 0;
        un = total = (Rational(3) - s) / w * (binom + 2 * m) + m;
        break;
      case VertexClass::kX2:
        out = 0;
        in = arc_degree;
        un = x_span / w;
        total = (Rational(2) - s) / w * x_span - m;
        break;
      case VertexClass::kX3:
        out = in = 0;
        un = total = x_span / w;
        break;
      case VertexClass::kX4:
        out = arc_degree;
        in = 0;
        un = x_span / w;
        total = (Rational(2) - s) / w * x_span - m;
        break;
    }
  }
  auto to_count = [cls](Rational x, const char* what) -> std::size_t {
    x.canonicalize();
    if (x < 0 || !is_integral(x)) {
      throw Error(ErrorCode::kNonIntegral, std::string(class_name(cls)) + " " + what + "=" + to_string(x));
    }
    return x.get_num().get_ui();
  };
  return {to_count(out, "out"), to_count(in, "in"), to_count(un, "un"), to_count(total, "degree")};
}

std::vector<DegreeMismatch> verify_degree_table(const ExtremalLayout& layout) {
  if (!layout.ratio) throw Error(ErrorCode::kNotExtremal, "layout carries no mixed ratio");
  const ExtremalParams p{*layout.ratio, layout.m};
  std::array<DegreeSummary, 8> rows;
  for (auto cls : kVertexClasses) rows[idx(cls)] = expected_degree_row(p, cls);
  std::vector<DegreeMismatch> out;
  for (Vertex v = 0; v < layout.graph.order(); ++v) {
    const auto cls = layout.class_of[v];
    const auto actual = degrees(layout.graph, v);
    if (actual != rows[idx(cls)]) out.push_back({v, cls, rows[idx(cls)], actual});
  }
  return out;
}

ClosedForms closed_forms(const ExtremalParams& p) {
  const ClassSizes sizes = cardinalities(p);
  const Rational c = min_ratio(p.ratio);
  const Rational s = p.ratio.sum();
  const Rational m(p.m);
  const Rational binom(sizes.binom);
  const Rational a(sizes.a_m);
  const Rational n(sizes.order);
  ClosedForms cf;
  cf.order = sizes.order;
  Rational constant;
  if (sizes.family == ExtremalFamily::kMinRatioScaled) {
    cf.order_closed_form = Rational(2) / c * (binom + 2 * m) - m + 1;
    cf.delta = Rational(2) / (c * (Rational(2) - s)) * a;
    constant = (c + 2) / (c * (Rational(2) - s));
  } else {
    const Rational w = Rational(1) - s;
    cf.order_closed_form = (Rational(2) - s) / w * (2 * binom + 4 * m) - m + 1;
    cf.delta = Rational(2) / w * a;
    constant = (Rational(5) - 3 * s) / (w * (Rational(2) - s));
  }
  cf.identity_rhs = n / (Rational(2) - s) + m / (Rational(2) - s) - constant;
  cf.order_closed_form.canonicalize();
  cf.delta.canonicalize();
  cf.identity_rhs.canonicalize();
  cf.identity_holds = cf.identity_rhs == cf.delta;
  cf.order_matches = cf.order_closed_form == n;
  return cf;
}

AsymptoticReport asymptotic_report(const ExtremalParams& p) {
  const ClosedForms cf = closed_forms(p);
  const double n = cf.order.get_d();
  const double w = Rational(Rational(2) - p.ratio.sum()).get_d();
  AsymptoticReport r;
  r.delta = cf.delta.get_d();
  r.rhs = n / w + (2.0 / w) * std::log(n) / (2.0 * std::log(27.0 / 4.0));
  r.holds = r.delta >= r.rhs;
  return r;
}

RobbinsInterval robbins_interval(unsigned m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  const double md = m;
  const double log_core = std::log(std::sqrt(3.0) / (2.0 * std::sqrt(std::numbers::pi * md))) +
                          md * std::log(27.0 / 4.0);
  const double g1_lo = 1.0 / (36.0 * md + 1.0), g1_hi = 1.0 / (36.0 * md);
  const double g2_lo = 1.0 / (12.0 * md + 1.0), g2_hi = 1.0 / (12.0 * md);
  const double g3_lo = 1.0 / (24.0 * md + 1.0), g3_hi = 1.0 / (24.0 * md);
  RobbinsInterval r;
  r.log_lower = log_core + g1_lo - g2_hi - g3_hi;
  r.log_upper = log_core + g1_hi - g2_lo - g3_lo;
  r.lower = std::exp(r.log_lower);
  r.upper = std::exp(r.log_upper);
  return r;
}

Witness certify_diameter_ge3(const ExtremalLayout& layout, const Orientation& d) {
  const MixedGraph& g = layout.graph;
  if (&d.base() != &g && !(d.base() == g)) throw Error(ErrorCode::kInvalidArgument, "orientation is not of the layout graph");
  const std::size_t n = g.order();
  const unsigned m = layout.m;
  if (layout.class_of.size() != n || layout.b2.size() != 3 * m || layout.b1_of_rank.empty() ||
      layout.b1_of_rank.size() != small_binomial(3 * m, 2 * m) ||
      layout.b3_of_rank.size() != layout.b1_of_rank.size()) {
    throw Error(ErrorCode::kNotExtremal, "layout class sizes are inconsistent");
  }
  Vertex u = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) {
    if (layout.class_of[v] == VertexClass::kB1) {
      u = v;
      break;
    }
  }
  const auto rank_u = layout.gadget_rank[u];
  if (rank_u < 0 || layout.b1_of_rank[rank_u] != u) {
    throw Error(ErrorCode::kNotExtremal, "B1 vertex " + std::to_string(u) + " has no gadget rank");
  }

  // Split u's gadget edges by direction; one side has at most m of them.
  std::vector<bool> out_mark(layout.b2.size(), false), in_mark(layout.b2.size(), false);
  std::size_t out_count = 0;
  for (unsigned local : colex_unrank(rank_u, 2 * m)) {
    const auto e = g.undirected_index(u, layout.b2[local]);
    if (!e) throw Error(ErrorCode::kNotExtremal, "gadget edge missing at B1 vertex " + std::to_string(u));
    const auto arc = d.directed(*e);
    if (arc.u == u) {
      out_mark[local] = true;
      ++out_count;
    } else {
      in_mark[local] = true;
    }
  }
  Witness w;
  w.anchor = u;
  w.side = out_count <= m ? WitnessSide::kOut : WitnessSide::kIn;
  const auto& excluded = w.side == WitnessSide::kOut ? out_mark : in_mark;
  std::vector<unsigned> blocked_local;
  for (unsigned local = 0; local < layout.b2.size() && blocked_local.size() < 2 * m; ++local) {
    if (!excluded[local]) blocked_local.push_back(local);
  }
  if (blocked_local.size() != 2 * m) throw Error(ErrorCode::kCertificateFailed, "no 2m-subset avoids u");
  const Vertex partner = layout.b3_of_rank[colex_rank(blocked_local)];
  for (unsigned local : blocked_local) w.blocked.push_back(layout.b2[local]);
  w.from = w.side == WitnessSide::kOut ? u : partner;
  w.to = w.side == WitnessSide::kOut ? partner : u;

  const Digraph digraph = induced_digraph(d);
  if (digraph.has_arc(w.from, w.to) || digraph.has_arc(w.to, w.from)) {
    throw Error(ErrorCode::kCertificateFailed, "witness endpoints are adjacent");
  }
  // No midpoint in B2: the partner's B2 neighbours are exactly R, and R
  // avoids the relevant side of u.
  for (Vertex b : layout.b2) {
    const bool in_r = std::find(w.blocked.begin(), w.blocked.end(), b) != w.blocked.end();
    if (g.has_undirected(partner, b) != in_r) {
      throw Error(ErrorCode::kCertificateFailed, "partner gadget does not match R");
    }
    if (in_r && digraph.has_arc(w.from, b) && digraph.has_arc(b, w.to)) {
      throw Error(ErrorCode::kCertificateFailed, "directed 2-path through B2");
    }
  }
  // No midpoint in X: the X classes reachable from the source and those
  // reaching the target are disjoint.
  std::array<bool, 8> source_side{}, target_side{};
  for (Vertex x = 0; x < n; ++x) {
    const auto cls = layout.class_of[x];
    if (!is_x_class(cls)) continue;
    if (digraph.has_arc(w.from, x)) source_side[idx(cls)] = true;
    if (digraph.has_arc(x, w.to)) target_side[idx(cls)] = true;
  }
  for (std::size_t k = 0; k < 8; ++k) {
    if (source_side[k] && target_side[k]) {
      throw Error(ErrorCode::kCertificateFailed,
                  "class " + std::string(class_name(kVertexClasses[k])) + " can be a midpoint");
    }
  }
  w.distance = directed_distance(digraph, w.from).dist[w.to];
  if (w.distance != kUnreachable && w.distance < 3) {
    throw Error(ErrorCode::kCertificateFailed,
                "BFS distance " + std::to_string(w.distance) + " from " + std::to_string(w.from) +
                    " to " + std::to_string(w.to));
  }
  return w;
}

}  // namespace orient2
