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

#include "orient2/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <deque>

#include "orient2/error.hpp"

namespace orient2 {
namespace {

using Word = BitMatrix::Word;

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
}

// Mixed BFS that ignores one undirected edge (pass {n, n} to ignore none).
std::vector<Hops> mixed_bfs(const MixedGraph& g, Vertex source, VertexPair skip, bool weak) {
  std::vector<Hops> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  auto visit = [&](Vertex x, Vertex y) {
    if (dist[y] != kUnreachable) return;
    dist[y] = dist[x] + 1;
    queue.push_back(y);
  };
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.un_neighbors(x)) {
      if ((x == skip.u && y == skip.v) || (x == skip.v && y == skip.u)) continue;
      visit(x, y);
    }
    for (Vertex y : g.out_neighbors(x)) visit(x, y);
    if (weak) {
      for (Vertex y : g.in_neighbors(x)) visit(x, y);
    }
  }
  return dist;
}

// Bridges of the underlying simple graph that are undirected edges.
std::vector<VertexPair> weak_bridges(const MixedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex x = 0; x < n; ++x) {
    for (auto list : {g.out_neighbors(x), g.in_neighbors(x), g.un_neighbors(x)}) {
      adj[x].insert(adj[x].end(), list.begin(), list.end());
    }
  }
  std::vector<std::size_t> disc(n, 0), low(n, 0), next(n, 0);
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  std::size_t timer = 0;
  std::vector<VertexPair> out;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      if (next[x] < adj[x].size()) {
        const Vertex y = adj[x][next[x]++];
        if (disc[y] == 0) {
          parent[y] = x;
          disc[y] = low[y] = ++timer;
          stack.push_back(y);
        } else if (y != parent[x]) {
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }
      stack.pop_back();
      if (parent[x] != n) {
        const Vertex p = parent[x];
        low[p] = std::min(low[p], low[x]);
        if (low[x] > disc[p] && g.has_undirected(p, x)) {
          out.push_back({std::min(p, x), std::max(p, x)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Orientation::Orientation(const MixedGraph& base, std::vector<bool> forward)
    : base_(&base), forward_(std::move(forward)) {
  if (forward_.size() != base.undirected_edges().size()) {
    throw Error(ErrorCode::kInvalidArgument, "orientation size does not match undirected edge count");
  }
}

VertexPair Orientation::directed(std::size_t edge) const {
  const auto e = base_->undirected_edges()[edge];
  return forward_[edge] ? e : VertexPair{e.v, e.u};
}

Digraph Digraph::from_arcs(std::size_t n, std::span<const VertexPair> arcs) {
  Digraph d(n);
  for (const auto& [u, v] : arcs) {
    check_vertex(n, u);
    check_vertex(n, v);
    d.add_arc(u, v);
  }
  return d;
}

Digraph induced_digraph(const Orientation& o) {
  const MixedGraph& g = o.base();
  Digraph d = Digraph::from_arcs(g.order(), g.arcs());
  for (std::size_t i = 0; i < o.size(); ++i) {
    const auto [u, v] = o.directed(i);
    d.add_arc(u, v);
  }
  return d;
}

Digraph as_digraph(const MixedGraph& g) {
  if (!g.undirected_edges().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "graph still has undirected edges");
  }
  return Digraph::from_arcs(g.order(), g.arcs());
}

DistanceReport mixed_distance(const MixedGraph& g, Vertex source) {
  check_vertex(g.order(), source);
  const auto none = static_cast<Vertex>(g.order());
  return {source, mixed_bfs(g, source, {none, none}, false)};
}

Diameter mixed_diameter(const MixedGraph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "diameter of the empty graph");
  Hops best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Hops h : mixed_distance(g, s).dist) {
      if (h == kUnreachable) return std::nullopt;
      best = std::max(best, h);
    }
  }
  return best;
}

std::vector<VertexPair> bridges(const MixedGraph& g, BridgeMode mode) {
  if (mode == BridgeMode::kWeak) return weak_bridges(g);
  std::vector<VertexPair> out;
  for (const auto& e : g.undirected_edges()) {
    const bool forward = mixed_bfs(g, e.u, e, false)[e.v] != kUnreachable;
    const bool backward = forward && mixed_bfs(g, e.v, e, false)[e.u] != kUnreachable;
    if (!forward || !backward) out.push_back(e);
  }
  return out;
}

std::optional<VertexPair> has_bridge(const MixedGraph& g, BridgeMode mode) {
  if (mode == BridgeMode::kWeak) {
    auto all = weak_bridges(g);
    if (all.empty()) return std::nullopt;
    return all.front();
  }
  for (const auto& e : g.undirected_edges()) {
    if (mixed_bfs(g, e.u, e, false)[e.v] == kUnreachable) return e;
    if (mixed_bfs(g, e.v, e, false)[e.u] == kUnreachable) return e;
  }
  return std::nullopt;
}

DistanceReport directed_distance(const Digraph& d, Vertex source) {
  const std::size_t n = d.order();
  check_vertex(n, source);
  const std::size_t words = d.out_rows().words_per_row();
  DistanceReport report{source, std::vector<Hops>(n, kUnreachable)};
  std::vector<Word> visited(words, 0), next(words, 0);
  std::vector<Vertex> frontier{source};
  visited[source / 64] |= Word{1} << (source % 64);
  report.dist[source] = 0;
  for (Hops level = 1; !frontier.empty(); ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (Vertex x : frontier) {
      const auto row = d.out_rows().row(x);
      for (std::size_t w = 0; w < words; ++w) next[w] |= row[w];
    }
    frontier.clear();
    for (std::size_t w = 0; w < words; ++w) {
      Word fresh = next[w] & ~visited[w];
      visited[w] |= fresh;
      while (fresh != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        const auto y = static_cast<Vertex>(w * 64 + bit);
        report.dist[y] = level;
        frontier.push_back(y);
      }
    }
  }
  return report;
}

EccentricityReport directed_eccentricities(const Digraph& d) {
  EccentricityReport r;
  r.eccentricity.assign(d.order(), 0);
  r.strong = true;
  Hops best = 0;
  for (Vertex s = 0; s < d.order(); ++s) {
    Hops ecc = 0;
    for (Hops h : directed_distance(d, s).dist) {
      if (h == kUnreachable) {
        ecc = kUnreachable;
        break;
      }
      ecc = std::max(ecc, h);
    }
    r.eccentricity[s] = ecc;
    if (ecc == kUnreachable) r.strong = false;
    else best = std::max(best, ecc);
  }
  if (r.strong) r.diameter = best;
  return r;
}

BitMatrix two_step_matrix(const Digraph& d) {
  const std::size_t n = d.order();
  BitMatrix r(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto out_u = d.out_rows().row(u);
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (d.has_arc(u, v) || intersects(out_u, d.in_rows().row(v))) r.set(u, v);
    }
  }
  return r;
}

std::optional<VertexPair> first_two_step_gap(const Digraph& d) {
  const std::size_t n = d.order();
  for (Vertex u = 0; u < n; ++u) {
    const auto out_u = d.out_rows().row(u);
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || d.has_arc(u, v)) continue;
      if (!intersects(out_u, d.in_rows().row(v))) return VertexPair{u, v};
    }
  }
  return std::nullopt;
}

bool two_step_total(const Digraph& d) { return !first_two_step_gap(d).has_value(); }

std::string serialize_orientation(const Orientation& o) {
  const MixedGraph& g = o.base();
  std::vector<VertexPair> arcs(g.arcs().begin(), g.arcs().end());
  for (std::size_t i = 0; i < o.size(); ++i) arcs.push_back(o.directed(i));
  std::sort(arcs.begin(), arcs.end());
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(graph_hash(g)));
  std::string out = "mgraph 1\n# base " + std::string(hash) + "\nn " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : arcs) out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Orientation orientation_from_graph(const MixedGraph& base, const MixedGraph& oriented) {
  if (oriented.order() != base.order() || !oriented.undirected_edges().empty() ||
      oriented.arcs().size() != base.arcs().size() + base.undirected_edges().size()) {
    throw Error(ErrorCode::kInvalidArgument, "orientation does not match the base graph's shape");
  }
  for (const auto& [u, v] : base.arcs()) {
    if (!oriented.has_arc(u, v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "base arc " + std::to_string(u) + "->" + std::to_string(v) + " missing");
    }
  }
  std::vector<bool> forward(base.undirected_edges().size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    const auto [u, v] = base.undirected_edges()[i];
    if (oriented.has_arc(u, v)) forward[i] = true;
    else if (oriented.has_arc(v, u)) forward[i] = false;
    else {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "} not oriented");
    }
  }
  return Orientation(base, std::move(forward));
}

std::optional<std::uint64_t> orientation_base_hash(std::string_view text) {
  const std::string_view tag = "# base ";
  const auto at = text.find(tag);
  if (at == std::string_view::npos) return std::nullopt;
  const auto start = at + tag.size();
  const auto end = text.find('\n', start);
  const std::string hex(text.substr(start, end == std::string_view::npos ? end : end - start));
  try {
    std::size_t used = 0;
    const auto value = std::stoull(hex, &used, 16);
    if (used != hex.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace orient2
