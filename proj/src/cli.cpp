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

#include "orient2/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orient2/error.hpp"
#include "orient2/extremal.hpp"
#include "orient2/graph.hpp"
#include "orient2/lab.hpp"
#include "orient2/metrics.hpp"
#include "orient2/oracle.hpp"
#include "orient2/parallel.hpp"
#include "orient2/prob_orient.hpp"

namespace orient2::cli {
namespace {

struct Options {
  std::string in = "-";
  std::string out;
  std::string classes;
  std::string c1;
  std::string c2;
  unsigned m = 1;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t tries = 1;
  std::optional<std::size_t> delta;
  std::size_t n = 0;
  bool exact = false;
  bool per_vertex = false;
  std::string bridge_mode = "weak";
  std::string oracle_mode;
  std::size_t budget = 22;
  Vertex u = 0;
  Vertex v = 1;
  std::optional<std::uint64_t> orientation_seed;
  std::string orientation_file;
  std::size_t samples = 1;
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> delta_grid;
  std::vector<double> edge_probability{0.9};
  double arc_probability = 0.0;
  std::size_t trials = 1;
  std::optional<unsigned> radius;
  std::optional<unsigned> diameter;
};

const CLI::Validator kRationalText(
    [](std::string& s) -> std::string {
      try {
        parse_rational(s);
        return {};
      } catch (const Error& e) {
        return e.what();
      }
    },
    "p/q", "RATIONAL");

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string hops(const Diameter& d) { return d ? std::to_string(*d) : "inf"; }
std::string hops(Hops h) { return h == kUnreachable ? "inf" : std::to_string(h); }
std::string boolean(bool b) { return b ? "true" : "false"; }

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
}

std::string sidecar_path(const std::string& mg_path) {
  const std::string ext = ".mg";
  if (mg_path.size() > ext.size() && mg_path.compare(mg_path.size() - ext.size(), ext.size(), ext) == 0) {
    return mg_path.substr(0, mg_path.size() - ext.size()) + ".classes";
  }
  return mg_path + ".classes";
}

MixedRatio ratio_of(const Options& o) {
  return MixedRatio(parse_rational(o.c1), parse_rational(o.c2));
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

int do_gen(const Options& o, std::ostream& out) {
  const ExtremalParams p{ratio_of(o), o.m};
  const ExtremalLayout layout = build_extremal(p);
  const ClassSizes sizes = cardinalities(p);
  const std::string mg = serialize_mg(layout.graph);
  if (o.out.empty() || o.out == "-") {
    out << mg;
    if (!o.classes.empty()) write_text(o.classes, serialize_classes(layout), out);
    return 0;
  }
  write_text(o.out, mg, out);
  write_text(o.classes.empty() ? sidecar_path(o.out) : o.classes, serialize_classes(layout), out);
  out << "family=" << family_name(sizes.family) << "\n";
  for (auto cls : kVertexClasses) out << class_name(cls) << "=" << to_string(sizes[cls]) << "\n";
  out << "n=" << layout.graph.order() << "\n";
  out << "undirected=" << layout.graph.undirected_edges().size() << "\n";
  out << "arcs=" << layout.graph.arcs().size() << "\n";
  out << "min_degree=" << degree_stats(layout.graph).min_degree << "\n";
  return 0;
}

int do_check(const Options& o, std::istream& in, std::ostream& out) {
  const MixedGraph g = parse_mg(read_text(o.in, in));
  const auto stats = degree_stats(g);
  out << "n=" << g.order() << "\n";
  out << "undirected=" << g.undirected_edges().size() << "\n";
  out << "arcs=" << g.arcs().size() << "\n";
  out << "min_degree=" << stats.min_degree << "\n";
  out << "max_degree=" << stats.max_degree << "\n";
  if (g.order() > 0) out << "mixed_diameter=" << hops(mixed_diameter(g)) << "\n";
  const auto mode = o.bridge_mode == "mixed" ? BridgeMode::kMixed : BridgeMode::kWeak;
  const auto bridge = has_bridge(g, mode);
  out << "bridge=" << (bridge ? std::to_string(bridge->u) + "," + std::to_string(bridge->v) : "none") << "\n";
  if (o.per_vertex) {
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto d = degrees(g, x);
      out << "vertex=" << x << " out=" << d.out << " in=" << d.in << " un=" << d.un
          << " degree=" << d.total << "\n";
    }
  }
  return 0;
}

int do_ratio(const Options& o, std::istream& in, std::ostream& out) {
  const MixedGraph g = parse_mg(read_text(o.in, in));
  const MixedRatio r = min_mixed_ratio(g);
  out << "c1=" << to_string(r.c1()) << "\nc2=" << to_string(r.c2()) << "\n";
  if (!o.c1.empty() || !o.c2.empty()) {
    const MixedRatio cap(parse_rational(o.c1.empty() ? "1" : o.c1), parse_rational(o.c2.empty() ? "1" : o.c2));
    const auto violations = check_mixed_ratio(g, cap);
    out << "violations=" << violations.size() << "\n";
    for (const auto& v : violations) {
      out << "vertex=" << v.vertex << " out_ratio=" << to_string(v.out_ratio)
          << " in_ratio=" << to_string(v.in_ratio) << " exceeds=" << (v.exceeds_c1 ? "c1" : "")
          << (v.exceeds_c1 && v.exceeds_c2 ? "," : "") << (v.exceeds_c2 ? "c2" : "") << "\n";
    }
  }
  return 0;
}

int do_orient(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const MixedGraph g = parse_mg(read_text(o.in, in));
  const auto result = las_vegas_diam2(g, o.tries, o.seed, o.jobs);
  if (const auto* ex = std::get_if<Exhausted>(&result)) {
    err << "error: " << code_name(ErrorCode::kExhausted) << ": tries=" << ex->tries
        << " best_diameter=" << hops(ex->best_diameter) << "\n";
    return 1;
  }
  const auto& ok = std::get<LasVegasSuccess>(result);
  const std::string text = serialize_orientation(ok.orientation);
  if (o.out.empty() || o.out == "-") {
    out << text;
  } else {
    write_text(o.out, text, out);
    out << "success=true\ntries=" << ok.tries << "\ndiameter=" << ok.diameter << "\n";
  }
  return 0;
}

int do_xi(const Options& o, std::istream& in, std::ostream& out) {
  const MixedGraph g = parse_mg(read_text(o.in, in));
  const XiValue xi = xi_exact(g);
  out << "xi=" << real(xi.value) << "\n";
  if (o.exact && xi.exact) out << "xi_exact=" << to_string(*xi.exact) << "\n";
  out << "conclusive=" << boolean(xi.conclusive()) << "\n";
  const MixedRatio r = (o.c1.empty() && o.c2.empty())
                           ? min_mixed_ratio(g)
                           : MixedRatio(parse_rational(o.c1.empty() ? "0" : o.c1),
                                        parse_rational(o.c2.empty() ? "0" : o.c2));
  const std::size_t delta = o.delta.value_or(degree_stats(g).min_degree);
  out << "bound_delta=" << delta << "\nbound_c1=" << to_string(r.c1()) << "\nbound_c2=" << to_string(r.c2()) << "\n";
  if (!o.delta && 2 * delta < g.order()) {
    out << "xi_bound=n/a\n";
    return 0;
  }
  const ThresholdBound tb = xi_upper_bound(g.order(), delta, r);
  out << "xi_bound=" << real(tb.xi_bound) << "\n";
  if (o.exact && tb.xi_bound_exact) out << "xi_bound_exact=" << to_string(*tb.xi_bound_exact) << "\n";
  out << "bound_conclusive=" << boolean(tb.conclusive) << "\n";
  return 0;
}

int do_threshold(const Options& o, std::ostream& out) {
  const ThresholdBound tb = sufficient_min_degree(o.n, ratio_of(o));
  out << "n=" << tb.n << "\nc1=" << to_string(tb.ratio.c1()) << "\nc2=" << to_string(tb.ratio.c2()) << "\n";
  out << "sufficient_delta=" << real(tb.sufficient_delta) << "\n";
  out << "ceiling=" << tb.sufficient_ceiling << "\n";
  out << "vacuous=" << boolean(tb.vacuous) << "\n";
  out << "xi_bound_at_ceiling=" << real(tb.xi_bound) << "\n";
  return 0;
}

int do_oracle(const Options& o, std::istream& in, std::ostream& out) {
  const MixedGraph g = parse_mg(read_text(o.in, in));
  OracleBudget budget;
  budget.max_undirected = o.budget;
  if (o.oracle_mode == "diam") {
    const auto d = oriented_diameter_exact(g, budget, o.jobs);
    out << "oriented_diameter=" << (d ? std::to_string(*d) : "none") << "\n";
  } else if (o.oracle_mode == "pairfail") {
    const Rational brute = pair_failure_bruteforce(g, o.u, o.v, budget);
    const Rational closed = pair_failure_probability(pair_classes(g, o.u, o.v));
    out << "pair_failure=" << to_string(brute) << "\nclosed_form=" << to_string(closed)
        << "\nagree=" << boolean(brute == closed) << "\n";
  } else {
    const Rational fail = diam2_failure_probability_bruteforce(g, budget, o.jobs);
    out << "diam2_failure=" << to_string(fail) << "\n";
    if (g.order() >= 2) {
      const XiValue xi = xi_exact(g);
      out << "xi=" << (xi.exact ? to_string(*xi.exact) : real(xi.value)) << "\n";
    }
  }
  return 0;
}

int do_certify(const Options& o, std::istream& in, std::ostream& out) {
  MixedGraph g = parse_mg(read_text(o.in, in));
  const std::string classes_path = o.classes.empty() ? sidecar_path(o.in) : o.classes;
  const ExtremalLayout layout = layout_from_classes(std::move(g), read_text(classes_path, in));
  auto print = [&out](const Witness& w) {
    out << "from=" << w.from << "\nto=" << w.to << "\nanchor=" << w.anchor
        << "\nside=" << (w.side == WitnessSide::kOut ? "out" : "in")
        << "\nblocked=" << vertex_list(w.blocked) << "\ndistance=" << hops(w.distance) << "\n";
  };
  if (!o.orientation_file.empty()) {
    const std::string text = read_text(o.orientation_file, in);
    if (const auto hash = orientation_base_hash(text); hash && *hash != graph_hash(layout.graph)) {
      throw Error(ErrorCode::kInvalidArgument, "orientation file names a different base graph");
    }
    const Orientation d = orientation_from_graph(layout.graph, parse_mg(text));
    print(certify_diameter_ge3(layout, d));
    return 0;
  }
  const std::uint64_t seed = *o.orientation_seed;
  std::vector<std::optional<Witness>> witnesses(o.samples);
  parallel_for(o.samples, o.jobs, [&](std::size_t i) {
    witnesses[i] = certify_diameter_ge3(layout, sample_orientation(layout.graph, seed + i));
  });
  if (o.samples > 1) out << "certified=" << o.samples << "\n";
  print(*witnesses.front());
  return 0;
}

int do_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.n_values = o.n_values;
  cfg.ratio = ratio_of(o);
  cfg.delta_grid = o.delta_grid;
  cfg.edge_probability = o.edge_probability;
  cfg.arc_probability = o.arc_probability;
  cfg.trials = o.trials;
  cfg.tries = o.tries;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  const auto rows = threshold_sweep(cfg);
  for (const auto& r : rows) {
    err << "# rejection n=" << r.n << " delta=" << r.delta_target << " rate=" << real(r.rejection_rate) << "\n";
  }
  write_text(o.out, sweep_csv(rows), out);
  return 0;
}

int do_bounds(const Options& o, std::ostream& out) {
  const auto b = o.radius ? orientation_parameter_bounds(BoundKind::kRadius, *o.radius)
                          : orientation_parameter_bounds(BoundKind::kDiameter, *o.diameter);
  out << "kind=" << (o.radius ? "radius" : "diameter") << "\nlower=" << to_string(b.lower)
      << "\nupper=" << to_string(b.upper) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Diameter-two orientation toolkit for mixed graphs", "orient2"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, ".mg input ('-' for stdin)")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "build an extremal graph G_m");
  gen->add_option("--c1", o.c1)->required()->check(kRationalText);
  gen->add_option("--c2", o.c2)->required()->check(kRationalText);
  gen->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out, ".mg output (sidecar .classes next to it)");
  gen->add_option("--classes", o.classes, ".classes output path");
  add_jobs(gen);

  auto* check = app.add_subcommand("check", "validate, degrees, diameter and bridges");
  add_in(check);
  check->add_option("--bridge-mode", o.bridge_mode)->check(CLI::IsMember({"weak", "mixed"}));
  check->add_flag("--degrees", o.per_vertex, "per-vertex degree lines");
  add_jobs(check);

  auto* ratio = app.add_subcommand("ratio", "minimum mixed ratio, optional cap check");
  add_in(ratio);
  ratio->add_option("--c1", o.c1)->check(kRationalText);
  ratio->add_option("--c2", o.c2)->check(kRationalText);
  add_jobs(ratio);

  auto* orient = app.add_subcommand("orient", "Las Vegas search for a diameter-2 orientation");
  add_in(orient);
  orient->add_option("--tries", o.tries)->required()->check(CLI::PositiveNumber);
  orient->add_option("--seed", o.seed)->required();
  orient->add_option("--out", o.out, "orientation file");
  add_jobs(orient);

  auto* xi = app.add_subcommand("xi", "first-moment quantity and its degree bound");
  add_in(xi);
  xi->add_option("--delta", o.delta);
  xi->add_option("--c1", o.c1)->check(kRationalText);
  xi->add_option("--c2", o.c2)->check(kRationalText);
  xi->add_flag("--exact", o.exact, "print exact rationals");
  add_jobs(xi);

  auto* threshold = app.add_subcommand("threshold", "sufficient minimum degree");
  threshold->add_option("--n", o.n)->required();
  threshold->add_option("--c1", o.c1)->required()->check(kRationalText);
  threshold->add_option("--c2", o.c2)->required()->check(kRationalText);
  add_jobs(threshold);

  auto* oracle = app.add_subcommand("oracle", "exhaustive orientation enumeration");
  oracle->add_option("mode", o.oracle_mode)->required()->check(CLI::IsMember({"diam", "pairfail", "failprob"}));
  add_in(oracle);
  oracle->add_option("--budget", o.budget, "max undirected edges enumerated")->capture_default_str();
  oracle->add_option("--u", o.u);
  oracle->add_option("--v", o.v);
  add_jobs(oracle);

  auto* certify = app.add_subcommand("certify", "diameter >= 3 witness for an extremal graph");
  certify->add_option("--in", o.in, ".mg of the extremal graph")->required();
  certify->add_option("--classes", o.classes, "sidecar (default: next to --in)");
  auto* oseed = certify->add_option("--orientation-seed", o.orientation_seed);
  auto* ofile = certify->add_option("--orientation-file", o.orientation_file);
  oseed->excludes(ofile);
  certify->add_option("--samples", o.samples, "certify seeds s..s+N-1")->check(CLI::PositiveNumber);
  add_jobs(certify);

  auto* sweep = app.add_subcommand("sweep", "empirical threshold sweep (CSV)");
  sweep->add_option("--n", o.n_values)->required()->delimiter(',');
  sweep->add_option("--c1", o.c1)->required()->check(kRationalText);
  sweep->add_option("--c2", o.c2)->required()->check(kRationalText);
  sweep->add_option("--delta", o.delta_grid)->required()->delimiter(',');
  sweep->add_option("--p", o.edge_probability, "edge probability, one or one per delta")->delimiter(',');
  sweep->add_option("--q", o.arc_probability, "arc probability");
  sweep->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--tries", o.tries)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--seed", o.seed)->required();
  sweep->add_option("--out", o.out, "CSV path (default stdout)");
  add_jobs(sweep);

  auto* bounds = app.add_subcommand("bounds", "oriented radius/diameter bound calculator");
  auto* rad = bounds->add_option("--radius", o.radius)->check(CLI::PositiveNumber);
  auto* dia = bounds->add_option("--diameter", o.diameter)->check(CLI::PositiveNumber);
  rad->excludes(dia);
  add_jobs(bounds);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (certify->parsed() && !o.orientation_seed && o.orientation_file.empty()) {
      throw CLI::RequiredError("--orientation-seed or --orientation-file");
    }
    if (bounds->parsed() && !o.radius && !o.diameter) {
      throw CLI::RequiredError("--radius or --diameter");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return do_gen(o, out);
    if (check->parsed()) return do_check(o, in, out);
    if (ratio->parsed()) return do_ratio(o, in, out);
    if (orient->parsed()) return do_orient(o, in, out, err);
    if (xi->parsed()) return do_xi(o, in, out);
    if (threshold->parsed()) return do_threshold(o, out);
    if (oracle->parsed()) return do_oracle(o, in, out);
    if (certify->parsed()) return do_certify(o, in, out);
    if (sweep->parsed()) return do_sweep(o, out, err);
    if (bounds->parsed()) return do_bounds(o, out);
  } catch (const Error& e) {
    err << "error: " << code_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace orient2::cli
