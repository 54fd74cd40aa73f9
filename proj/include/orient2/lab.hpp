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

// Empirical threshold experiments and the orientation radius/diameter
// bound calculators.

#ifndef ORIENT2_LAB_HPP_
#define ORIENT2_LAB_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orient2/graph.hpp"
#include "orient2/rational.hpp"

namespace orient2 {

// Each unordered pair is present with probability p; a present pair becomes
// an arc with probability q (direction uniform), otherwise undirected. A
// repair pass in ascending vertex order then turns the lowest-numbered
// excess arcs back into undirected edges until every vertex satisfies
// d+ <= c1 d and d- <= c2 d.
MixedGraph random_mixed_graph(std::size_t n, double p, double q, const MixedRatio& r,
                              std::uint64_t seed);

struct ExperimentRow {
  std::size_t n = 0;
  Rational c1;
  Rational c2;
  std::size_t delta_target = 0;
  std::size_t trials = 0;
  std::uint64_t tries_per_trial = 0;
  std::size_t successes = 0;
  double mean_tries_to_success = 0.0;  // over successful trials; 0 if none
  double xi_mean = 0.0;
  std::uint64_t seed = 0;
  // Not part of the CSV schema.
  double rejection_rate = 0.0;
};

struct SweepConfig {
  std::vector<std::size_t> n_values;
  MixedRatio ratio;
  std::vector<std::size_t> delta_grid;
  // One value for the whole grid or one per delta target.
  std::vector<double> edge_probability{0.9};
  double arc_probability = 0.0;
  std::size_t trials = 1;
  std::uint64_t tries = 1;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t rejection_cap = 1000;
};

// Rows in grid order (n outer, delta inner). Graphs are conditioned on
// minimum degree >= delta by rejection. Throws kEmptyGrid,
// kRejectionExhausted, kInvalidArgument.
std::vector<ExperimentRow> threshold_sweep(const SweepConfig& config);

// `schema=1`, a header row, then one line per row; reals with 12
// significant digits.
std::string sweep_csv(const std::vector<ExperimentRow>& rows);

enum class BoundKind { kRadius, kDiameter };

struct RationalInterval {
  Rational lower;
  Rational upper;
};

// radius r: [r^2 + r, 1.5 r^2 + r + 1]; diameter d: [d^2/2 + d, 3 d^2 + 2 d + 2].
RationalInterval orientation_parameter_bounds(BoundKind kind, unsigned value);

}  // namespace orient2

#endif  // ORIENT2_LAB_HPP_
