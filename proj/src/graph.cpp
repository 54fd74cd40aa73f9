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

#include "orient2/graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "orient2/error.hpp"

namespace orient2 {
namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void sort_unique(std::vector<VertexPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

}  // namespace

MixedRatio::MixedRatio(Rational c1, Rational c2) : c1_(std::move(c1)), c2_(std::move(c2)) {
  c1_.canonicalize();
  c2_.canonicalize();
  if (c1_ < 0 || c1_ > 1 || c2_ < 0 || c2_ > 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "mixed ratio (" + to_string(c1_) + ", " + to_string(c2_) + ") outside [0,1]^2");
  }
}

MixedGraph MixedGraph::validate(std::size_t n, std::vector<VertexPair> undirected,
                                std::vector<VertexPair> arcs) {
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kTooLarge,
                "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  auto check_pair = [n](const VertexPair& p) {
    if (p.u >= n || p.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + pair_text(p.u, p.v) + " has an endpoint outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    if (p.u == p.v) throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(p.u));
  };
  for (auto& e : undirected) {
    check_pair(e);
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  for (const auto& a : arcs) check_pair(a);
  sort_unique(undirected);
  sort_unique(arcs);

  // Every unordered pair may carry at most one connection.
  std::vector<VertexPair> keys;
  keys.reserve(undirected.size() + arcs.size());
  keys.insert(keys.end(), undirected.begin(), undirected.end());
  for (const auto& a : arcs) keys.push_back({std::min(a.u, a.v), std::max(a.u, a.v)});
  std::sort(keys.begin(), keys.end());
  auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) {
    throw Error(ErrorCode::kParallelEdge,
                "parallel connections on pair " + pair_text(dup->u, dup->v));
  }

  MixedGraph g;
  g.n_ = n;
  g.undirected_ = std::move(undirected);
  g.arcs_ = std::move(arcs);
  g.out_bits_ = BitMatrix(n);
  g.in_bits_ = BitMatrix(n);
  g.un_bits_ = BitMatrix(n);

  std::vector<std::vector<Vertex>> out(n), in(n), un(n);
  for (const auto& [u, v] : g.undirected_) {
    un[u].push_back(v);
    un[v].push_back(u);
    g.un_bits_.set(u, v);
    g.un_bits_.set(v, u);
  }
  for (const auto& [u, v] : g.arcs_) {
    out[u].push_back(v);
    in[v].push_back(u);
    g.out_bits_.set(u, v);
    g.in_bits_.set(v, u);
  }
  auto pack = [n](std::vector<std::vector<Vertex>>& lists, Adjacency& adj) {
    adj.offsets.assign(n + 1, 0);
    adj.targets.clear();
    for (std::size_t x = 0; x < n; ++x) {
      std::sort(lists[x].begin(), lists[x].end());
      adj.targets.insert(adj.targets.end(), lists[x].begin(), lists[x].end());
      adj.offsets[x + 1] = adj.targets.size();
    }
  };
  pack(out, g.out_);
  pack(in, g.in_);
  pack(un, g.un_);
  return g;
}

std::optional<std::size_t> MixedGraph::undirected_index(Vertex a, Vertex b) const {
  const VertexPair key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(undirected_.begin(), undirected_.end(), key);
  if (it == undirected_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - undirected_.begin());
}

DegreeSummary degrees(const MixedGraph& g, Vertex u) {
  if (u >= g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(u) + " out of range");
  }
  DegreeSummary d;
  d.out = g.out_neighbors(u).size();
  d.in = g.in_neighbors(u).size();
  d.un = g.un_neighbors(u).size();
  d.total = d.out + d.in + d.un;
  return d;
}

DegreeStats degree_stats(const MixedGraph& g) {
  DegreeStats s;
  if (g.order() == 0) return s;
  s.min_degree = g.order();
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto t = degrees(g, u).total;
    s.min_degree = std::min(s.min_degree, t);
    s.max_degree = std::max(s.max_degree, t);
  }
  return s;
}

MixedRatio min_mixed_ratio(const MixedGraph& g) {
  Rational c1 = 0;
  Rational c2 = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto d = degrees(g, u);
    if (d.total == 0) continue;
    Rational out_ratio(static_cast<unsigned long>(d.out), static_cast<unsigned long>(d.total));
    Rational in_ratio(static_cast<unsigned long>(d.in), static_cast<unsigned long>(d.total));
    out_ratio.canonicalize();
    in_ratio.canonicalize();
    if (out_ratio > c1) c1 = out_ratio;
    if (in_ratio > c2) c2 = in_ratio;
  }
  return MixedRatio(c1, c2);
}

std::vector<RatioViolation> check_mixed_ratio(const MixedGraph& g, const MixedRatio& r) {
  std::vector<RatioViolation> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto d = degrees(g, u);
    if (d.total == 0) continue;
    const Rational total(static_cast<unsigned long>(d.total));
    const bool over1 = Rational(static_cast<unsigned long>(d.out)) > r.c1() * total;
    const bool over2 = Rational(static_cast<unsigned long>(d.in)) > r.c2() * total;
    if (!over1 && !over2) continue;
    RatioViolation v;
    v.vertex = u;
    v.out_ratio = Rational(static_cast<unsigned long>(d.out), static_cast<unsigned long>(d.total));
    v.in_ratio = Rational(static_cast<unsigned long>(d.in), static_cast<unsigned long>(d.total));
    v.out_ratio.canonicalize();
    v.in_ratio.canonicalize();
    v.exceeds_c1 = over1;
    v.exceeds_c2 = over2;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace orient2
