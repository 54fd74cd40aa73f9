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

// Mixed graphs: simple graphs carrying both undirected edges and arcs, with
// at most one connection of any kind per unordered vertex pair.

#ifndef ORIENT2_GRAPH_HPP_
#define ORIENT2_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orient2/bit_matrix.hpp"
#include "orient2/rational.hpp"

namespace orient2 {

using Vertex = std::uint32_t;

// Largest order accepted by validate(); each graph keeps three n x n bit
// matrices.
inline constexpr std::size_t kMaxOrder = 16384;

struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const VertexPair&) const = default;
};

struct DegreeSummary {
  std::size_t out = 0;
  std::size_t in = 0;
  std::size_t un = 0;
  std::size_t total = 0;
  bool operator==(const DegreeSummary&) const = default;
};

struct DegreeStats {
  std::size_t min_degree = 0;  // delta(G)
  std::size_t max_degree = 0;  // Delta(G)
};

// A pair (c1, c2) in [0,1]^2. A graph is a (c1,c2)-mixed graph when every
// vertex satisfies d+(u) <= c1 d(u) and d-(u) <= c2 d(u).
class MixedRatio {
 public:
  MixedRatio() = default;
  MixedRatio(Rational c1, Rational c2);

  const Rational& c1() const noexcept { return c1_; }
  const Rational& c2() const noexcept { return c2_; }
  Rational sum() const { return c1_ + c2_; }

  // Componentwise <=.
  bool dominated_by(const MixedRatio& other) const {
    return c1_ <= other.c1_ && c2_ <= other.c2_;
  }

  bool operator==(const MixedRatio&) const = default;

 private:
  Rational c1_{0};
  Rational c2_{0};
};

class MixedGraph {
 public:
  MixedGraph() = default;

  // Deduplicates both edge lists, orders undirected pairs as u < v, then
  // checks for loops, out-of-range endpoints and parallel connections
  // (including digons u->v, v->u). Throws Error on violation.
  static MixedGraph validate(std::size_t n, std::vector<VertexPair> undirected,
                             std::vector<VertexPair> arcs);

  std::size_t order() const noexcept { return n_; }

  // Sorted lexicographically; undirected pairs have u < v.
  std::span<const VertexPair> undirected_edges() const noexcept { return undirected_; }
  std::span<const VertexPair> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex x) const { return slice(out_, x); }
  std::span<const Vertex> in_neighbors(Vertex x) const { return slice(in_, x); }
  std::span<const Vertex> un_neighbors(Vertex x) const { return slice(un_, x); }

  const BitMatrix& out_rows() const noexcept { return out_bits_; }
  const BitMatrix& in_rows() const noexcept { return in_bits_; }
  const BitMatrix& un_rows() const noexcept { return un_bits_; }

  bool has_arc(Vertex from, Vertex to) const { return out_bits_.test(from, to); }
  bool has_undirected(Vertex a, Vertex b) const { return un_bits_.test(a, b); }
  bool adjacent(Vertex a, Vertex b) const {
    return has_undirected(a, b) || has_arc(a, b) || has_arc(b, a);
  }

  // Position of {a,b} in undirected_edges(), if present.
  std::optional<std::size_t> undirected_index(Vertex a, Vertex b) const;

  bool operator==(const MixedGraph& other) const {
    return n_ == other.n_ && undirected_ == other.undirected_ && arcs_ == other.arcs_;
  }

 private:
  struct Adjacency {
    std::vector<std::size_t> offsets;
    std::vector<Vertex> targets;
  };

  static std::span<const Vertex> slice(const Adjacency& adj, Vertex x) {
    return {adj.targets.data() + adj.offsets[x], adj.offsets[x + 1] - adj.offsets[x]};
  }

  std::size_t n_ = 0;
  std::vector<VertexPair> undirected_;
  std::vector<VertexPair> arcs_;
  Adjacency out_{{0}, {}};
  Adjacency in_{{0}, {}};
  Adjacency un_{{0}, {}};
  BitMatrix out_bits_;
  BitMatrix in_bits_;
  BitMatrix un_bits_;
};

DegreeSummary degrees(const MixedGraph& g, Vertex u);
DegreeStats degree_stats(const MixedGraph& g);

// Smallest (c1, c2) for which g is a (c1,c2)-mixed graph. Isolated vertices
// contribute (0, 0).
MixedRatio min_mixed_ratio(const MixedGraph& g);

struct RatioViolation {
  Vertex vertex = 0;
  Rational out_ratio;  // d+(u)/d(u)
  Rational in_ratio;   // d-(u)/d(u)
  bool exceeds_c1 = false;
  bool exceeds_c2 = false;
};

// Vertices breaking d+(u) <= c1 d(u) or d-(u) <= c2 d(u), in vertex order.
std::vector<RatioViolation> check_mixed_ratio(const MixedGraph& g, const MixedRatio& r);

// `.mg` text format:
//   mgraph 1
//   n <N>
//   e <u> <v>     undirected edge
//   a <u> <v>     arc u -> v
// `#` starts a comment, blank lines are ignored.
MixedGraph parse_mg(std::string_view text);
MixedGraph parse_mg(std::istream& in);
std::string serialize_mg(const MixedGraph& g);

// FNV-1a 64 of the canonical serialization.
std::uint64_t graph_hash(const MixedGraph& g);

}  // namespace orient2

#endif  // ORIENT2_GRAPH_HPP_
