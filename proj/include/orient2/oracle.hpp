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

// Exhaustive ground truth over all 2^k orientations of the k undirected
// edges. Probabilities are exact dyadic rationals.

#ifndef ORIENT2_ORACLE_HPP_
#define ORIENT2_ORACLE_HPP_

#include <cstddef>
#include <optional>

#include "orient2/graph.hpp"
#include "orient2/metrics.hpp"
#include "orient2/rational.hpp"

namespace orient2 {

struct OracleBudget {
  std::size_t max_undirected = 22;  // enumerate at most 2^max_undirected orientations
  std::size_t max_n = 64;
};

// Minimum directed diameter over strong orientations; nullopt when no
// orientation is strong. Throws kBudgetExceeded above budget, kEmptyGraph
// for n = 0.
std::optional<Hops> oriented_diameter_exact(const MixedGraph& g, const OracleBudget& b = {},
                                            std::size_t jobs = 1);

// Probability over uniform orientations that no w has u -> w -> v. Only the
// undirected edges at u or v are enumerated; they are the only ones that
// matter for the event and they count against the budget.
Rational pair_failure_bruteforce(const MixedGraph& g, Vertex u, Vertex v,
                                 const OracleBudget& b = {});

// Probability that a uniform orientation has directed diameter > 2 (some
// ordered pair with neither an arc nor a directed 2-path).
Rational diam2_failure_probability_bruteforce(const MixedGraph& g, const OracleBudget& b = {},
                                              std::size_t jobs = 1);

}  // namespace orient2

#endif  // ORIENT2_ORACLE_HPP_
