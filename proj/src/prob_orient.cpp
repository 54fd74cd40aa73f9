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

#include "orient2/prob_orient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "orient2/error.hpp"
#include "orient2/parallel.hpp"
#include "orient2/random.hpp"

namespace orient2 {
namespace {

// (b1 + b2, b3) -> number of ordered non-shortcut pairs with those counts.
using ClassHistogram = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

ClassHistogram class_histogram(const MixedGraph& g) {
  if (g.order() < 2) {
    throw Error(ErrorCode::kPreconditionFailed, "xi requires at least two vertices");
  }
  ClassHistogram hist;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      const auto pc = pair_classes(g, u, v);
      if (!pc.shortcut) ++hist[{pc.b1 + pc.b2, pc.b3}];
    }
  }
  return hist;
}

// Neumaier-compensated log-sum-exp.
double log_sum_exp(const std::vector<double>& logs) {
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  double comp = 0.0;
  for (double l : logs) {
    const double x = std::exp(l - top);
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    sum = t;
  }
  return top + std::log(sum + comp);
}

XiValue from_histogram(const ClassHistogram& hist, bool exact) {
  const double ln_half = std::log(0.5);
  const double ln_three_quarters = std::log(0.75);
  std::vector<double> logs;
  logs.reserve(hist.size());
  XiValue xi;
  Rational sum = 0;
  for (const auto& [key, count] : hist) {
    const auto [s, b3] = key;
    logs.push_back(std::log(static_cast<double>(count)) + static_cast<double>(s) * ln_half +
                   static_cast<double>(b3) * ln_three_quarters);
    if (exact) {
      // count * 3^b3 / 2^(s + 2 b3)
      BigInt num;
      mpz_ui_pow_ui(num.get_mpz_t(), 3, b3);
      num *= static_cast<unsigned long>(count);
      Rational term(num);
      mpq_div_2exp(term.get_mpq_t(), term.get_mpq_t(), s + 2 * b3);
      sum += term;
    }
  }
  xi.log_value = log_sum_exp(logs);
  if (exact) {
    sum.canonicalize();
    xi.value = sum.get_d();
    xi.exact = std::move(sum);
  } else {
    xi.value = std::exp(xi.log_value);
  }
  return xi;
}

Rational ratio_two_minus_sum(const MixedRatio& r) {
  Rational width = Rational(2) - r.sum();
  if (width <= 0) {
    throw Error(ErrorCode::kInfeasibleRatio,
                "c1 + c2 = " + to_string(r.sum()) + " must be below 2");
  }
  return width;
}

void fill_xi_bound(ThresholdBound& tb, const Rational& delta, const Rational& width) {
  const Rational exponent = width * delta - Rational(static_cast<unsigned long>(tb.n));
  const double n = static_cast<double>(tb.n);
  const double log_bound = 2.0 * std::log(n) + exponent.get_d() * std::log(0.75);
  tb.xi_bound = std::exp(log_bound);
  tb.xi_bound_exact.reset();
  if (is_integral(exponent)) {
    const BigInt e = exponent.get_num();
    const Rational base = e >= 0 ? Rational(3, 4) : Rational(4, 3);
    BigInt mag = abs(e);
    Rational exact = rational_pow(base, mag.get_ui());
    exact *= Rational(static_cast<unsigned long>(tb.n * tb.n));
    tb.xi_bound_exact = exact;
    tb.conclusive = exact < 1;
  } else {
    tb.conclusive = log_bound < 0.0;
  }
  tb.delta = delta.get_d();
  tb.slack = tb.delta - n / 2.0;
}

void fill_threshold(ThresholdBound& tb, const Rational& width) {
  const double n = static_cast<double>(tb.n);
  const double w = width.get_d();
  tb.sufficient_delta = n / w + (2.0 / w) * std::log(n) / std::log(4.0 / 3.0);
  tb.sufficient_ceiling = static_cast<long long>(std::ceil(tb.sufficient_delta));
  tb.vacuous = tb.sufficient_ceiling > static_cast<long long>(tb.n) - 1;
}

}  // namespace

PairClasses pair_classes(const MixedGraph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw Error(ErrorCode::kSameVertex, "pair needs two distinct vertices");
  PairClasses pc;
  pc.shortcut = intersects(g.out_rows().row(u), g.in_rows().row(v));
  pc.b1 = intersection_count(g.out_rows().row(u), g.un_rows().row(v));
  pc.b2 = intersection_count(g.un_rows().row(u), g.in_rows().row(v));
  pc.b3 = intersection_count(g.un_rows().row(u), g.un_rows().row(v));
  pc.b = pc.b1 + pc.b2 + pc.b3;
  return pc;
}

Rational pair_failure_probability(const PairClasses& pc) {
  if (pc.shortcut) return Rational(0);
  // (1/2)^(b1+b2) (3/4)^b3 = 3^b3 / 2^(b1+b2+2 b3)
  BigInt num;
  mpz_ui_pow_ui(num.get_mpz_t(), 3, pc.b3);
  Rational p(num);
  mpq_div_2exp(p.get_mpq_t(), p.get_mpq_t(), pc.b1 + pc.b2 + 2 * pc.b3);
  return p;
}

XiValue xi_exact(const MixedGraph& g) {
  return from_histogram(class_histogram(g), g.order() <= kExactXiMaxOrder);
}

XiValue xi_log_space(const MixedGraph& g) { return from_histogram(class_histogram(g), false); }

ThresholdBound xi_upper_bound(std::size_t n, std::size_t delta, const MixedRatio& r) {
  const Rational width = ratio_two_minus_sum(r);
  if (2 * delta < n) {
    throw Error(ErrorCode::kPreconditionFailed,
                "delta=" + std::to_string(delta) + " below n/2 for n=" + std::to_string(n));
  }
  ThresholdBound tb;
  tb.n = n;
  tb.ratio = r;
  if (n >= 2) fill_threshold(tb, width);
  fill_xi_bound(tb, Rational(static_cast<unsigned long>(delta)), width);
  return tb;
}

ThresholdBound sufficient_min_degree(std::size_t n, const MixedRatio& r) {
  const Rational width = ratio_two_minus_sum(r);
  if (n < 2) throw Error(ErrorCode::kPreconditionFailed, "threshold requires n >= 2");
  ThresholdBound tb;
  tb.n = n;
  tb.ratio = r;
  fill_threshold(tb, width);
  fill_xi_bound(tb, Rational(static_cast<unsigned long>(tb.sufficient_ceiling)), width);
  return tb;
}

bool sample_direction(std::uint64_t seed, std::size_t edge) {
  return (derive_seed(seed, edge) >> 63) != 0;
}

Orientation sample_orientation(const MixedGraph& g, std::uint64_t seed) {
  std::vector<bool> forward(g.undirected_edges().size());
  for (std::size_t i = 0; i < forward.size(); ++i) forward[i] = sample_direction(seed, i);
  return Orientation(g, std::move(forward));
}

LasVegasResult las_vegas_diam2(const MixedGraph& g, std::uint64_t max_tries, std::uint64_t seed,
                               std::size_t jobs) {
  if (max_tries == 0) throw Error(ErrorCode::kInvalidArgument, "max_tries must be positive");
  struct Outcome {
    bool success = false;
    Diameter diameter;
  };
  jobs = std::max<std::size_t>(1, jobs);
  const std::uint64_t batch = jobs == 1 ? 1 : 4 * jobs;
  Exhausted exhausted{max_tries, std::nullopt};
  for (std::uint64_t start = 0; start < max_tries; start += batch) {
    const std::uint64_t count = std::min(batch, max_tries - start);
    std::vector<Outcome> outcomes(count);
    parallel_for(count, jobs, [&](std::size_t k) {
      const Digraph d = induced_digraph(sample_orientation(g, seed + start + k));
      if (two_step_total(d)) {
        outcomes[k].success = true;
        outcomes[k].diameter = g.order() <= 1 ? Hops{0} : directed_eccentricities(d).diameter;
      } else {
        outcomes[k].diameter = directed_eccentricities(d).diameter;
      }
    });
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto& o = outcomes[k];
      if (o.success) {
        const std::uint64_t index = start + k;
        return LasVegasSuccess{sample_orientation(g, seed + index), index + 1, o.diameter.value()};
      }
      if (o.diameter && (!exhausted.best_diameter || *o.diameter < *exhausted.best_diameter)) {
        exhausted.best_diameter = o.diameter;
      }
    }
  }
  return exhausted;
}

}  // namespace orient2
