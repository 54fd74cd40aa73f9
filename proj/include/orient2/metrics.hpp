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

#ifndef ORIENT2_METRICS_HPP_
#define ORIENT2_METRICS_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "orient2/bit_matrix.hpp"
#include "orient2/graph.hpp"

namespace orient2 {

using Hops = std::uint32_t;
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

// Diameter or eccentricity; std::nullopt means infinite.
using Diameter = std::optional<Hops>;

// One direction per undirected edge of a base graph. Edge i refers to
// base.undirected_edges()[i] = {u, v} with u < v; forward(i) means u -> v.
// The base graph is not owned and must outlive the orientation.
class Orientation {
 public:
  Orientation(const MixedGraph& base, std::vector<bool> forward);

  const MixedGraph& base() const noexcept { return *base_; }
  std::size_t size() const noexcept { return forward_.size(); }
  bool forward(std::size_t edge) const { return forward_[edge]; }
  void flip(std::size_t edge) { forward_[edge] = !forward_[edge]; }

  // Directed version of undirected edge i.
  VertexPair directed(std::size_t edge) const;

  bool operator==(const Orientation& other) const {
    return base_ == other.base_ && forward_ == other.forward_;
  }

 private:
  const MixedGraph* base_;
  std::vector<bool> forward_;
};

// Plain digraph as out/in bit rows.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  static Digraph from_arcs(std::size_t n, std::span<const VertexPair> arcs);

  std::size_t order() const noexcept { return out_.size(); }
  const BitMatrix& out_rows() const noexcept { return out_; }
  const BitMatrix& in_rows() const noexcept { return in_; }
  bool has_arc(Vertex u, Vertex v) const { return out_.test(u, v); }

  void add_arc(Vertex u, Vertex v) {
    out_.set(u, v);
    in_.set(v, u);
  }
  void remove_arc(Vertex u, Vertex v) {
    out_.reset(u, v);
    in_.reset(v, u);
  }

  bool operator==(const Digraph&) const = default;

 private:
  BitMatrix out_;
  BitMatrix in_;
};

// base.arcs() plus the oriented undirected edges.
Digraph induced_digraph(const Orientation& d);

// A mixed graph with no undirected edges, viewed as a digraph.
Digraph as_digraph(const MixedGraph& g);

struct DistanceReport {
  Vertex source = 0;
  std::vector<Hops> dist;  // kUnreachable where no path exists
};

// BFS where undirected edges are traversable both ways and arcs forward only.
DistanceReport mixed_distance(const MixedGraph& g, Vertex source);

// Max over ordered pairs; nullopt when some pair is unreachable. Throws
// kEmptyGraph for n = 0.
Diameter mixed_diameter(const MixedGraph& g);

enum class BridgeMode {
  kWeak,   // arcs traversable both ways
  kMixed,  // undirected both ways, arcs forward only
};

// Lexicographically first undirected edge {u,v} whose removal disconnects u
// from v under the chosen notion of connectivity.
std::optional<VertexPair> has_bridge(const MixedGraph& g, BridgeMode mode = BridgeMode::kWeak);

// All bridges, lexicographic.
std::vector<VertexPair> bridges(const MixedGraph& g, BridgeMode mode = BridgeMode::kWeak);

DistanceReport directed_distance(const Digraph& d, Vertex source);

struct EccentricityReport {
  std::vector<Hops> eccentricity;  // kUnreachable when some vertex is not reached
  Diameter diameter;
  bool strong = false;
};

EccentricityReport directed_eccentricities(const Digraph& d);

// R(u,v) = arc u->v or some w with u->w->v. Diagonal left false.
BitMatrix two_step_matrix(const Digraph& d);

// True iff two_step_matrix is total off the diagonal, i.e. directed diameter
// <= 2. Exits at the first missing pair.
bool two_step_total(const Digraph& d);

// First ordered pair (u, v), u != v, with no walk of length <= 2.
std::optional<VertexPair> first_two_step_gap(const Digraph& d);

// Orientation files: `.mg` text containing only `a` lines plus a
// `# base <hash>` comment naming graph_hash(base) in hex.
std::string serialize_orientation(const Orientation& d);

// Rebuilds an orientation of `base` from a parsed orientation file. Every
// base arc must appear unchanged and every undirected edge exactly once in
// one direction; nothing else. Throws kInvalidArgument otherwise.
Orientation orientation_from_graph(const MixedGraph& base, const MixedGraph& oriented);

// Hash recorded in an orientation file's `# base` comment, if any.
std::optional<std::uint64_t> orientation_base_hash(std::string_view text);

}  // namespace orient2

#endif  // ORIENT2_METRICS_HPP_
