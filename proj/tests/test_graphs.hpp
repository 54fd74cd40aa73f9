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

// Small fixture graphs shared by the unit and acceptance tests.

#ifndef ORIENT2_TESTS_TEST_GRAPHS_HPP_
#define ORIENT2_TESTS_TEST_GRAPHS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "orient2/graph.hpp"
#include "orient2/metrics.hpp"

namespace orient2::testing {

inline MixedGraph complete_graph(std::size_t n) {
  std::vector<VertexPair> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return MixedGraph::validate(n, std::move(e), {});
}

inline MixedGraph path_graph(std::size_t n) {
  std::vector<VertexPair> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return MixedGraph::validate(n, std::move(e), {});
}

inline MixedGraph cycle_graph(std::size_t n) {
  std::vector<VertexPair> e;
  for (Vertex u = 0; u < n; ++u) e.push_back({u, static_cast<Vertex>((u + 1) % n)});
  return MixedGraph::validate(n, std::move(e), {});
}

// e 0 1; a 1 -> 2; a 2 -> 0
inline MixedGraph mixed_triangle() { return MixedGraph::validate(3, {{0, 1}}, {{1, 2}, {2, 0}}); }

inline MixedGraph directed_triangle() {
  return MixedGraph::validate(3, {}, {{0, 1}, {1, 2}, {2, 0}});
}

// u=0, v=1 non-adjacent; 0->2, 2-1; 0-3, 3->1; 4 and 5 undirected to both.
inline MixedGraph gadget_graph() {
  return MixedGraph::validate(6, {{1, 2}, {0, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}},
                              {{0, 2}, {3, 1}});
}

// Uniform random mixed graph: each pair absent, undirected, or an arc in
// either direction. At most `max_undirected` undirected edges.
inline MixedGraph random_small_graph(std::mt19937_64& rng, std::size_t n,
                                     std::size_t max_undirected) {
  std::vector<VertexPair> e;
  std::vector<VertexPair> a;
  std::uniform_int_distribution<int> kind(0, 3);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      switch (kind(rng)) {
        case 1:
          if (e.size() < max_undirected) e.push_back({u, v});
          break;
        case 2: a.push_back({u, v}); break;
        case 3: a.push_back({v, u}); break;
        default: break;
      }
    }
  }
  return MixedGraph::validate(n, std::move(e), std::move(a));
}

inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  Digraph d(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

}  // namespace orient2::testing

#endif  // ORIENT2_TESTS_TEST_GRAPHS_HPP_
