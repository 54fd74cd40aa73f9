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

#include "orient2/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <vector>

#include "orient2/error.hpp"
#include "orient2/parallel.hpp"

namespace orient2 {
namespace {

void check_budget(const MixedGraph& g, std::size_t edges, const OracleBudget& b) {
  if (g.order() > b.max_n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "order " + std::to_string(g.order()) + " above max_n=" + std::to_string(b.max_n));
  }
  if (edges > b.max_undirected || edges >= 63) {
    throw Error(ErrorCode::kBudgetExceeded, std::to_string(edges) + " undirected edges above budget " +
                                                std::to_string(b.max_undirected));
  }
}

// Walks orientation indices [first, last) in reflected Gray order: index x
// orients edge i forward iff bit i of x ^ (x >> 1) is set, and consecutive
// indices differ in a single edge, so only two bit rows change per step.
template <class Visit>
void gray_walk(const MixedGraph& g, std::uint64_t first, std::uint64_t last, Visit&& visit) {
  const auto edges = g.undirected_edges();
  Digraph d = Digraph::from_arcs(g.order(), g.arcs());
  const std::uint64_t code = first ^ (first >> 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if ((code >> i) & 1U) d.add_arc(u, v);
    else d.add_arc(v, u);
  }
  for (std::uint64_t x = first; x < last; ++x) {
    if (!visit(d)) return;
    if (x + 1 == last) break;
    const auto flip = static_cast<std::size_t>(std::countr_zero(x + 1));
    const auto [u, v] = edges[flip];
    if (d.has_arc(u, v)) {
      d.remove_arc(u, v);
      d.add_arc(v, u);
    } else {
      d.remove_arc(v, u);
      d.add_arc(u, v);
    }
  }
}

// Fixed chunking keeps the reduction independent of the worker count.
constexpr std::uint64_t kChunks = 64;

struct Chunk {
  std::uint64_t first;
  std::uint64_t last;
};

std::vector<Chunk> chunks(std::uint64_t total) {
  const std::uint64_t count = std::min(kChunks, total);
  std::vector<Chunk> out;
  for (std::uint64_t c = 0; c < count; ++c) out.push_back({total * c / count, total * (c + 1) / count});
  return out;
}

Rational dyadic(std::uint64_t count, std::size_t exponent) {
  Rational p(BigInt(static_cast<unsigned long>(count)));
  mpq_div_2exp(p.get_mpq_t(), p.get_mpq_t(), exponent);
  return p;
}

}  // namespace

std::optional<Hops> oriented_diameter_exact(const MixedGraph& g, const OracleBudget& b,
                                            std::size_t jobs) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "oriented diameter of the empty graph");
  const std::size_t k = g.undirected_edges().size();
  check_budget(g, k, b);
  if (g.order() == 1) return Hops{0};
  // Without digons no orientation has diameter 1 once n >= 2, so a diameter-2
  // orientation is optimal and ends the search.
  const auto parts = chunks(std::uint64_t{1} << k);
  std::vector<Hops> best(parts.size(), kUnreachable);
  std::atomic<bool> found_two{false};
  parallel_for(parts.size(), jobs, [&](std::size_t c) {
    gray_walk(g, parts[c].first, parts[c].last, [&](const Digraph& d) {
      if (found_two.load(std::memory_order_relaxed)) return false;
      if (two_step_total(d)) {
        best[c] = 2;
        found_two = true;
        return false;
      }
      const auto ecc = directed_eccentricities(d);
      if (ecc.diameter) best[c] = std::min(best[c], *ecc.diameter);
      return true;
    });
  });
  if (found_two) return Hops{2};
  const Hops result = *std::min_element(best.begin(), best.end());
  if (result == kUnreachable) return std::nullopt;
  return result;
}

Rational pair_failure_bruteforce(const MixedGraph& g, Vertex u, Vertex v, const OracleBudget& b) {
  if (u >= g.order() || v >= g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange, "pair out of range");
  }
  if (u == v) throw Error(ErrorCode::kSameVertex, "pair needs two distinct vertices");
  std::vector<VertexPair> relevant;
  for (const auto& e : g.undirected_edges()) {
    if (e.u == u || e.v == u || e.u == v || e.v == v) relevant.push_back(e);
  }
  check_budget(g, relevant.size(), b);
  std::uint64_t fixed_out_u = 0;
  std::uint64_t fixed_in_v = 0;
  for (Vertex w : g.out_neighbors(u)) fixed_out_u |= std::uint64_t{1} << w;
  for (Vertex w : g.in_neighbors(v)) fixed_in_v |= std::uint64_t{1} << w;
  const std::uint64_t total = std::uint64_t{1} << relevant.size();
  std::uint64_t failures = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint64_t out_u = fixed_out_u;
    std::uint64_t in_v = fixed_in_v;
    for (std::size_t i = 0; i < relevant.size(); ++i) {
      const bool forward = (mask >> i) & 1U;
      const Vertex from = forward ? relevant[i].u : relevant[i].v;
      const Vertex to = forward ? relevant[i].v : relevant[i].u;
      if (from == u) out_u |= std::uint64_t{1} << to;
      if (to == v) in_v |= std::uint64_t{1} << from;
    }
    if ((out_u & in_v) == 0) ++failures;
  }
  return dyadic(failures, relevant.size());
}

Rational diam2_failure_probability_bruteforce(const MixedGraph& g, const OracleBudget& b,
                                              std::size_t jobs) {
  const std::size_t k = g.undirected_edges().size();
  check_budget(g, k, b);
  const auto parts = chunks(std::uint64_t{1} << k);
  std::vector<std::uint64_t> failures(parts.size(), 0);
  parallel_for(parts.size(), jobs, [&](std::size_t c) {
    gray_walk(g, parts[c].first, parts[c].last, [&](const Digraph& d) {
      if (!two_step_total(d)) ++failures[c];
      return true;
    });
  });
  std::uint64_t sum = 0;
  for (auto f : failures) sum += f;
  return dyadic(sum, k);
}

}  // namespace orient2
