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

// Random orientation with fair coins: per-pair failure probabilities, the
// first-moment quantity xi (expected number of ordered pairs with no
// directed 2-path), the minimum-degree threshold at which xi < 1 is
// guaranteed, and a Las Vegas search for an orientation of diameter <= 2.

#ifndef ORIENT2_PROB_ORIENT_HPP_
#define ORIENT2_PROB_ORIENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "orient2/graph.hpp"
#include "orient2/metrics.hpp"
#include "orient2/rational.hpp"

namespace orient2 {

// Common-neighbour classes of an ordered pair (u, v):
//   b1 = |N+(u) & N0(v)|, b2 = |N0(u) & N-(v)|, b3 = |N0(u) & N0(v)|.
// shortcut is set when N+(u) & N-(v) is non-empty; the counts are then
// irrelevant for the failure event.
struct PairClasses {
  bool shortcut = false;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  std::size_t b3 = 0;
  std::size_t b = 0;  // b1 + b2 + b3
  bool operator==(const PairClasses&) const = default;
};

PairClasses pair_classes(const MixedGraph& g, Vertex u, Vertex v);

// Probability that a uniformly random orientation leaves no directed 2-path
// u -> w -> v: 0 on a shortcut, else (1/2)^(b1+b2) (3/4)^b3.
Rational pair_failure_probability(const PairClasses& pc);

// Graphs up to this order get an exact rational xi.
inline constexpr std::size_t kExactXiMaxOrder = 64;

struct XiValue {
  std::optional<Rational> exact;  // present iff n <= kExactXiMaxOrder
  double value = 0.0;
  double log_value = 0.0;  // natural log; -inf when xi = 0
  bool conclusive() const { return exact ? *exact < 1 : value < 1.0; }
};

// Sum of pair_failure_probability over all ordered pairs. Requires n >= 2.
XiValue xi_exact(const MixedGraph& g);

// Log-space evaluation only (compensated summation), any order.
XiValue xi_log_space(const MixedGraph& g);

struct ThresholdBound {
  std::size_t n = 0;
  MixedRatio ratio;
  // n/(2-s) + (2/(2-s)) ln n / ln(4/3), s = c1 + c2.
  double sufficient_delta = 0.0;
  long long sufficient_ceiling = 0;
  bool vacuous = false;  // ceiling > n - 1
  // delta the xi bound below was evaluated at.
  double delta = 0.0;
  // delta - n/2
  double slack = 0.0;
  // n^2 (3/4)^((2-s) delta - n); exact when the exponent is an integer.
  double xi_bound = 0.0;
  std::optional<Rational> xi_bound_exact;
  bool conclusive = false;  // xi_bound < 1
};

// Throws kInfeasibleRatio if c1 + c2 >= 2, kPreconditionFailed if
// delta < n/2.
ThresholdBound xi_upper_bound(std::size_t n, std::size_t delta, const MixedRatio& r);

// The bound is evaluated at the ceiling. Throws kInfeasibleRatio,
// kPreconditionFailed for n < 2. Never clamps to n - 1.
ThresholdBound sufficient_min_degree(std::size_t n, const MixedRatio& r);

// Direction of undirected edge `edge` under `seed`: a SplitMix64 stream keyed
// by (seed, edge index). true = forward (u -> v, u < v).
bool sample_direction(std::uint64_t seed, std::size_t edge);

Orientation sample_orientation(const MixedGraph& g, std::uint64_t seed);

struct LasVegasSuccess {
  Orientation orientation;
  std::uint64_t tries = 0;  // 1-based index of the successful try
  Hops diameter = 0;
};

struct Exhausted {
  std::uint64_t tries = 0;
  Diameter best_diameter;  // smallest directed diameter seen; nullopt if never strong
};

using LasVegasResult = std::variant<LasVegasSuccess, Exhausted>;

// Try i (0-based) samples sample_orientation(g, seed + i) and succeeds when
// every ordered pair is joined by a directed walk of length <= 2. Returns
// the lowest successful try regardless of `jobs`.
LasVegasResult las_vegas_diam2(const MixedGraph& g, std::uint64_t max_tries, std::uint64_t seed,
                               std::size_t jobs = 1);

}  // namespace orient2

#endif  // ORIENT2_PROB_ORIENT_HPP_
