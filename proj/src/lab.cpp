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

#include "orient2/lab.hpp"

#include <cinttypes>
#include <cstdio>
#include <set>

#include "orient2/error.hpp"
#include "orient2/parallel.hpp"
#include "orient2/prob_orient.hpp"
#include "orient2/random.hpp"

namespace orient2 {
namespace {

bool exceeds(std::size_t part, std::size_t total, const Rational& cap) {
  return Rational(static_cast<unsigned long>(part)) > cap * static_cast<unsigned long>(total);
}

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

MixedGraph random_mixed_graph(std::size_t n, double p, double q, const MixedRatio& r,
                              std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p and q must lie in [0,1]");
  }
  SplitMix64Engine rng(seed);
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::set<Vertex>> out(n), in(n);
  std::vector<VertexPair> undirected;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!bernoulli(rng, p)) continue;
      ++degree[i];
      ++degree[j];
      if (bernoulli(rng, q)) {
        const bool forward = bernoulli(rng, 0.5);
        const Vertex from = forward ? i : j;
        const Vertex to = forward ? j : i;
        out[from].insert(to);
        in[to].insert(from);
      } else {
        undirected.push_back({i, j});
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    while (exceeds(out[u].size(), degree[u], r.c1())) {
      const Vertex to = *out[u].begin();
      out[u].erase(out[u].begin());
      in[to].erase(u);
      undirected.push_back({u, to});
    }
    while (exceeds(in[u].size(), degree[u], r.c2())) {
      const Vertex from = *in[u].begin();
      in[u].erase(in[u].begin());
      out[from].erase(u);
      undirected.push_back({from, u});
    }
  }
  std::vector<VertexPair> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : out[u]) arcs.push_back({u, v});
  }
  return MixedGraph::validate(n, std::move(undirected), std::move(arcs));
}

std::vector<ExperimentRow> threshold_sweep(const SweepConfig& config) {
  if (config.n_values.empty() || config.delta_grid.empty()) {
    throw Error(ErrorCode::kEmptyGrid, "sweep needs at least one n and one delta target");
  }
  if (config.trials == 0 || config.tries == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials and tries must be positive");
  }
  const auto& probs = config.edge_probability;
  if (probs.size() != 1 && probs.size() != config.delta_grid.size()) {
    throw Error(ErrorCode::kInvalidArgument, "give one edge probability or one per delta target");
  }
  struct Trial {
    bool success = false;
    std::uint64_t tries = 0;
    double xi = 0.0;
    std::size_t attempts = 0;
  };
  std::vector<ExperimentRow> rows;
  std::uint64_t row_index = 0;
  for (std::size_t n : config.n_values) {
    for (std::size_t j = 0; j < config.delta_grid.size(); ++j, ++row_index) {
      const std::size_t delta = config.delta_grid[j];
      const double p = probs.size() == 1 ? probs[0] : probs[j];
      std::vector<Trial> trials(config.trials);
      parallel_for(config.trials, config.jobs, [&](std::size_t t) {
        const std::uint64_t trial_seed = derive_seed(config.seed, row_index, t);
        Trial& out = trials[t];
        for (std::size_t attempt = 0;; ++attempt) {
          if (attempt == config.rejection_cap) {
            throw Error(ErrorCode::kRejectionExhausted,
                        "n=" + std::to_string(n) + " delta=" + std::to_string(delta));
          }
          const MixedGraph g = random_mixed_graph(n, p, config.arc_probability, config.ratio,
                                                  derive_seed(trial_seed, 1, attempt));
          if (degree_stats(g).min_degree < delta) continue;
          out.attempts = attempt + 1;
          out.xi = xi_exact(g).value;
          const auto result = las_vegas_diam2(g, config.tries, derive_seed(trial_seed, 2));
          if (const auto* ok = std::get_if<LasVegasSuccess>(&result)) {
            out.success = true;
            out.tries = ok->tries;
          }
          return;
        }
      });
      ExperimentRow row;
      row.n = n;
      row.c1 = config.ratio.c1();
      row.c2 = config.ratio.c2();
      row.delta_target = delta;
      row.trials = config.trials;
      row.tries_per_trial = config.tries;
      row.seed = config.seed;
      std::uint64_t tries_sum = 0;
      std::size_t attempts = 0;
      for (const auto& t : trials) {
        row.xi_mean += t.xi;
        attempts += t.attempts;
        if (t.success) {
          ++row.successes;
          tries_sum += t.tries;
        }
      }
      row.xi_mean /= static_cast<double>(config.trials);
      row.mean_tries_to_success =
          row.successes == 0 ? 0.0 : static_cast<double>(tries_sum) / static_cast<double>(row.successes);
      row.rejection_rate = 1.0 - static_cast<double>(config.trials) / static_cast<double>(attempts);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "schema=1\nn,c1,c2,delta_target,trials,tries_per_trial,successes,mean_tries_to_success,"
      "xi_mean,seed\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + to_string(r.c1) + "," + to_string(r.c2) + "," +
           std::to_string(r.delta_target) + "," + std::to_string(r.trials) + "," +
           std::to_string(r.tries_per_trial) + "," + std::to_string(r.successes) + "," +
           real(r.mean_tries_to_success) + "," + real(r.xi_mean) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

RationalInterval orientation_parameter_bounds(BoundKind kind, unsigned value) {
  if (value == 0) throw Error(ErrorCode::kInvalidArgument, "value must be at least 1");
  const Rational x(value);
  RationalInterval b;
  if (kind == BoundKind::kRadius) {
    b.lower = x * x + x;
    b.upper = Rational(3, 2) * x * x + x + 1;
  } else {
    b.lower = Rational(1, 2) * x * x + x;
    b.upper = 3 * x * x + 2 * x + 2;
  }
  b.lower.canonicalize();
  b.upper.canonicalize();
  return b;
}

}  // namespace orient2
