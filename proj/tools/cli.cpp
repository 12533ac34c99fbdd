#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qsc/centrality.hpp"
#include "qsc/coloring.hpp"
#include "qsc/errors.hpp"
#include "qsc/flow.hpp"
#include "qsc/generators.hpp"
#include "qsc/lp.hpp"
#include "qsc/reduce.hpp"
#include "qsc/serialize.hpp"

namespace qsc::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Stopping {
  std::optional<std::size_t> colors;
  std::optional<double> q_error;
  double alpha = 0.0;
  double beta = 0.0;
  std::string mean = "arithmetic";
  std::optional<std::uint64_t> seed;
  std::string coloring_file;
};

void add_stopping(CLI::App* cmd, Stopping& s, double alpha, double beta) {
  s.alpha = alpha;
  s.beta = beta;
  cmd->add_option("--colors", s.colors, "Color budget (pins included)")->check(CLI::PositiveNumber);
  cmd->add_option("--q-error", s.q_error, "Stop once max q-error is at most this")->check(CLI::NonNegativeNumber);
  cmd->add_option("--alpha", s.alpha, "Exponent on the source color size")->capture_default_str();
  cmd->add_option("--beta", s.beta, "Exponent on the target color size")->capture_default_str();
  cmd->add_option("--seed", s.seed, "Seed (falls back to QSC_SEED, then 0)");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QSC_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("QSC_SEED is not an unsigned integer: '") + env + "'");
  }
  return 0;
}

RothkoParams make_params(const Stopping& s, std::uint64_t seed) {
  RothkoParams p;
  if (s.colors) p.max_colors = *s.colors;
  p.eps = s.q_error.value_or(0.0);
  p.alpha = s.alpha;
  p.beta = s.beta;
  p.seed = seed;
  if (s.mean == "arithmetic") p.mean = MeanKind::arithmetic;
  else if (s.mean == "geometric") p.mean = MeanKind::geometric;
  else throw ParameterError("--mean must be arithmetic or geometric");
  return p;
}

void require_stopping(const Stopping& s, bool allow_file) {
  if (!s.colors && !s.q_error && !(allow_file && !s.coloring_file.empty()))
    throw ParameterError(allow_file ? "give --colors, --q-error or --coloring-file"
                                    : "give --colors and/or --q-error");
  if (!s.coloring_file.empty() && (s.colors || s.q_error))
    throw ParameterError("--coloring-file cannot be combined with --colors or --q-error");
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  f << j.dump() << '\n';
  if (!f) throw ParseError("write to '" + path + "' failed");
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// ---------------------------------------------------------------------------

struct ColorCmd {
  std::string graph;
  bool directed = false;
  Stopping stop;
  std::vector<std::string> pins;
  bool progressive = false;
  std::string out;
};

int cmd_color(const ColorCmd& c, std::ostream& out) {
  require_stopping(c.stop, false);
  const std::uint64_t seed = resolve_seed(c.stop.seed);
  const WeightedDigraph g = load_edge_list_file(c.graph, c.directed);
  RothkoParams params = make_params(c.stop, seed);
  std::vector<Node> pins;
  for (const auto& label : c.pins) {
    auto v = g.find(label);
    if (!v) throw ParameterError("pinned node '" + label + "' is not in the graph");
    pins.push_back(*v);
  }
  params.pinned = make_node_set(std::move(pins));

  const auto start = Clock::now();
  std::size_t round = 0;
  RothkoObserver observer;
  if (c.progressive) {
    observer = [&](const Coloring& coloring, const ErrorReport& report) {
      out << json{{"round", ++round},
                  {"k", coloring.num_colors()},
                  {"max_q", report.max_q},
                  {"elapsed_ms", ms_since(start)}}
                 .dump()
          << '\n';
      return true;
    };
  }
  const RothkoResult result = rothko(g, params, observer);
  const double coloring_ms = ms_since(start);

  json report{{"task", "color"},
              {"colors", result.coloring.num_colors()},
              {"max_q", result.report.max_q},
              {"mean_q", result.report.mean_q},
              {"splits", result.splits},
              {"seed", seed},
              {"timings", {{"coloring_ms", coloring_ms}, {"total_ms", coloring_ms}}}};
  const json coloring = coloring_to_json(result.coloring, result.report);
  if (!c.out.empty()) write_json_file(c.out, coloring);
  else report["coloring"] = coloring;
  out << report.dump() << '\n';
  return ok;
}

// ---------------------------------------------------------------------------

struct MaxflowCmd {
  std::string network;
  Stopping stop;
  bool exact = false;
  bool lower = false;
};

int cmd_maxflow(const MaxflowCmd& c, std::ostream& out) {
  require_stopping(c.stop, true);
  const std::uint64_t seed = resolve_seed(c.stop.seed);
  const FlowNetwork net = load_network_file(c.network);
  if (net.sources.size() != 1 || net.targets.size() != 1)
    throw ParameterError("maxflow needs exactly one `s` and one `t` line");

  const auto start = Clock::now();
  Coloring coloring;
  double max_q = 0.0, mean_q = 0.0;
  if (!c.stop.coloring_file.empty()) {
    coloring = coloring_from_json(read_json_file(c.stop.coloring_file));
    if (coloring.num_nodes() != net.graph.num_nodes()) throw ParameterError("coloring size does not match network");
    const ErrorReport r = q_error(net.graph, coloring);
    max_q = r.max_q;
    mean_q = r.mean_q;
  } else {
    RothkoParams params = make_params(c.stop, seed);
    params.pinned = make_node_set({net.sources.front(), net.targets.front()});
    const RothkoResult result = rothko(net.graph, params);
    coloring = result.coloring;
    max_q = result.report.max_q;
    mean_q = result.report.mean_q;
  }
  const double coloring_ms = ms_since(start);

  const auto solve_start = Clock::now();
  const FlowBounds bounds = flow_bounds(net, coloring, c.lower);
  const double solve_ms = ms_since(solve_start);

  json report{{"task", "maxflow"},
              {"colors", coloring.num_colors()},
              {"max_q", max_q},
              {"mean_q", mean_q},
              {"upper", bounds.upper},
              {"seed", seed},
              {"algorithm", "dinic"}};
  if (c.lower) report["lower"] = bounds.lower;
  json timings{{"coloring_ms", coloring_ms}, {"solve_ms", solve_ms}};
  if (c.exact) {
    const auto exact_start = Clock::now();
    const double exact = max_flow(net).value;
    timings["exact_ms"] = ms_since(exact_start);
    report["exact"] = exact;
    report["metric"] = optional_number(relative_error(exact, bounds.upper));
  }
  timings["total_ms"] = ms_since(start);
  report["timings"] = timings;
  out << report.dump() << '\n';
  return ok;
}

// ---------------------------------------------------------------------------

struct LpCmd {
  std::string lp;
  Stopping stop;
  std::string norm = "sqrt";
  bool exact = false;
  std::string export_mps_path;
  std::string export_reduced_path;
  std::string out;
};

int cmd_lp(const LpCmd& c, std::ostream& out) {
  require_stopping(c.stop, true);
  const std::uint64_t seed = resolve_seed(c.stop.seed);
  Normalization norm;
  if (c.norm == "sqrt") norm = Normalization::sqrt;
  else if (c.norm == "count") norm = Normalization::count;
  else throw ParameterError("--norm must be sqrt or count");

  const LoadedLP loaded = load_lp_file(c.lp);
  const ExtendedMatrix ext = extend(loaded.lp);
  if (!c.export_mps_path.empty()) export_mps(loaded.lp, c.export_mps_path);

  const auto start = Clock::now();
  BipartiteColoring bc;
  if (!c.stop.coloring_file.empty()) {
    bc = bipartite_from_json(read_json_file(c.stop.coloring_file));
  } else {
    bc = color_lp(ext, make_params(c.stop, seed));
  }
  const ErrorReport q = q_error(ext, bc);
  const double coloring_ms = ms_since(start);

  const auto reduce_start = Clock::now();
  const ReducedLP reduced = reduce_lp(ext, bc, norm);
  const double reduce_ms = ms_since(reduce_start);
  if (!c.export_reduced_path.empty()) export_mps(reduced.lp, c.export_reduced_path);

  const auto solve_start = Clock::now();
  const LPSolution solution = solve_lp(reduced.lp);
  const double solve_ms = ms_since(solve_start);

  json report{{"task", "lp"},
              {"colors", bc.row_colors + bc.col_colors},
              {"row_colors", bc.row_colors},
              {"col_colors", bc.col_colors},
              {"max_q", q.max_q},
              {"mean_q", q.mean_q},
              {"normalization", c.norm},
              {"status", to_string(solution.status)},
              {"objective", solution.status == LPStatus::optimal ? json(solution.objective) : json(nullptr)},
              {"objective_negated", loaded.objective_negated},
              {"seed", seed}};
  json timings{{"coloring_ms", coloring_ms}, {"reduce_ms", reduce_ms}, {"solve_ms", solve_ms}};
  if (c.exact) {
    const auto exact_start = Clock::now();
    const LPSolution exact = solve_lp(loaded.lp);
    timings["exact_ms"] = ms_since(exact_start);
    report["exact_status"] = to_string(exact.status);
    report["exact"] = exact.status == LPStatus::optimal ? json(exact.objective) : json(nullptr);
    if (exact.status == LPStatus::optimal && solution.status == LPStatus::optimal)
      report["metric"] = optional_number(relative_error(exact.objective, solution.objective));
    else
      report["metric"] = nullptr;
  }
  timings["total_ms"] = ms_since(start);
  report["timings"] = timings;
  if (!c.out.empty()) write_json_file(c.out, solution_to_json(solution));
  out << report.dump() << '\n';
  return ok;
}

// ---------------------------------------------------------------------------

struct CentralityCmd {
  std::string graph;
  bool directed = false;
  Stopping stop;
  bool exact = false;
  std::string out;
};

int cmd_centrality(const CentralityCmd& c, std::ostream& out) {
  require_stopping(c.stop, true);
  const std::uint64_t seed = resolve_seed(c.stop.seed);
  const WeightedDigraph g = load_edge_list_file(c.graph, c.directed);

  const auto start = Clock::now();
  Coloring coloring;
  ErrorReport q;
  if (!c.stop.coloring_file.empty()) {
    coloring = coloring_from_json(read_json_file(c.stop.coloring_file));
    if (coloring.num_nodes() != g.num_nodes()) throw ParameterError("coloring size does not match graph");
    q = q_error(g, coloring);
  } else {
    RothkoResult result = rothko(g, make_params(c.stop, seed));
    coloring = std::move(result.coloring);
    q = std::move(result.report);
  }
  const double coloring_ms = ms_since(start);

  const auto solve_start = Clock::now();
  const CentralityVector approx = approx_centrality(g, coloring);
  const double solve_ms = ms_since(solve_start);

  json report{{"task", "centrality"},
              {"colors", coloring.num_colors()},
              {"max_q", q.max_q},
              {"mean_q", q.mean_q},
              {"seed", seed}};
  json timings{{"coloring_ms", coloring_ms}, {"solve_ms", solve_ms}};
  if (c.exact) {
    const auto exact_start = Clock::now();
    const CentralityVector exact = brandes_exact(g);
    timings["exact_ms"] = ms_since(exact_start);
    report["metric"] = g.num_nodes() >= 2 ? optional_number(spearman(exact, approx)) : json(nullptr);
  }
  timings["total_ms"] = ms_since(start);
  report["timings"] = timings;
  const json scores = scores_to_json(approx);
  if (!c.out.empty()) write_json_file(c.out, scores);
  else report["scores"] = scores;
  out << report.dump() << '\n';
  return ok;
}

// ---------------------------------------------------------------------------

struct BenchCmd {
  std::string experiment = "robustness";
  std::size_t groups = 100;
  std::size_t group_size = 10;
  std::size_t inter_degree = 17;
  double fraction = 0.015;
  double eps = 4.0;
  std::size_t n = 500;
  std::size_t m = 3;
  std::vector<std::size_t> budgets{10, 50, 100};
  std::size_t trials = 10;
  std::optional<std::uint64_t> seed;
};

int bench_robustness(const BenchCmd& c, std::uint64_t seed, std::ostream& out) {
  const auto start = Clock::now();
  const Blowup base = gen_blowup(c.groups, c.group_size, c.inter_degree, seed);
  const WeightedDigraph noisy = perturb(base.graph, c.fraction, seed + 1);
  RothkoParams params;
  params.eps = c.eps;
  params.alpha = 1.0;
  params.beta = 1.0;
  params.mean = MeanKind::geometric;
  params.seed = seed;
  for (const auto* g : {&base.graph, &noisy}) {
    const bool perturbed = g == &noisy;
    const auto t0 = Clock::now();
    const std::size_t stable = refine_stable(*g).num_colors();
    const double stable_ms = ms_since(t0);
    const auto t1 = Clock::now();
    const RothkoResult q = rothko(*g, params);
    const double rothko_ms = ms_since(t1);
    out << json{{"experiment", "robustness"},
                {"perturbed", perturbed},
                {"nodes", g->num_nodes()},
                {"edges", g->num_edges()},
                {"stable_colors", stable},
                {"q_colors", q.coloring.num_colors()},
                {"max_q", q.report.max_q},
                {"timings", {{"stable_ms", stable_ms}, {"rothko_ms", rothko_ms}}}}
                .dump()
        << '\n';
  }
  out << json{{"task", "bench"},
              {"experiment", "robustness"},
              {"seed", seed},
              {"generator_seed", base.seed},
              {"timings", {{"total_ms", ms_since(start)}}}}
             .dump()
      << '\n';
  return ok;
}

int bench_centrality(const BenchCmd& c, std::uint64_t seed, std::ostream& out) {
  const auto start = Clock::now();
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const WeightedDigraph g = barabasi_albert(c.n, c.m, seed + trial);
    const CentralityVector exact = brandes_exact(g);
    for (std::size_t budget : c.budgets) {
      RothkoParams params;
      params.max_colors = budget;
      params.alpha = 1.0;
      params.beta = 1.0;
      params.mean = MeanKind::geometric;
      const auto t0 = Clock::now();
      const RothkoResult r = rothko(g, params);
      const CentralityVector approx = approx_centrality(g, r.coloring);
      out << json{{"experiment", "centrality"},
                  {"trial", trial},
                  {"colors", r.coloring.num_colors()},
                  {"max_q", r.report.max_q},
                  {"metric", optional_number(spearman(exact, approx))},
                  {"timings", {{"total_ms", ms_since(t0)}}}}
                  .dump()
          << '\n';
    }
  }
  out << json{{"task", "bench"}, {"experiment", "centrality"}, {"seed", seed},
              {"timings", {{"total_ms", ms_since(start)}}}}
             .dump()
      << '\n';
  return ok;
}

int cmd_bench(const BenchCmd& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed);
  if (c.experiment == "robustness") return bench_robustness(c, seed, out);
  if (c.experiment == "centrality") return bench_centrality(c, seed, out);
  throw ParameterError("unknown experiment '" + c.experiment + "' (robustness or centrality)");
}

// ---------------------------------------------------------------------------

struct GenCmd {
  std::string kind = "blowup";
  std::size_t groups = 100;
  std::size_t group_size = 10;
  std::size_t inter_degree = 17;
  std::size_t n = 500;
  std::size_t m = 3;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void emit_graph(const WeightedDigraph& g, const std::string& path, json report, std::ostream& out) {
  if (path.empty()) {
    write_edge_list(out, g);
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  write_edge_list(f, g);
  if (!f) throw ParseError("write to '" + path + "' failed");
  report["nodes"] = g.num_nodes();
  report["edges"] = g.num_edges();
  report["out"] = path;
  out << report.dump() << '\n';
}

int cmd_gen(const GenCmd& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed);
  if (c.kind == "blowup") {
    const Blowup b = gen_blowup(c.groups, c.group_size, c.inter_degree, seed);
    emit_graph(b.graph, c.out, {{"task", "gen"}, {"kind", "blowup"}, {"seed", seed}, {"generator_seed", b.seed}}, out);
  } else if (c.kind == "ba") {
    emit_graph(barabasi_albert(c.n, c.m, seed), c.out, {{"task", "gen"}, {"kind", "ba"}, {"seed", seed}}, out);
  } else {
    throw ParameterError("unknown generator '" + c.kind + "' (blowup or ba)");
  }
  return ok;
}

struct PerturbCmd {
  std::string graph;
  bool directed = false;
  double fraction = 0.015;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_perturb(const PerturbCmd& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c.seed);
  const WeightedDigraph g = load_edge_list_file(c.graph, c.directed);
  const WeightedDigraph p = perturb(g, c.fraction, seed);
  emit_graph(p, c.out,
             {{"task", "perturb"}, {"seed", seed}, {"added", p.num_edges() - g.num_edges()}}, out);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-stable colorings for graph and LP compression", "qsc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  ColorCmd color;
  auto* color_cmd = app.add_subcommand("color", "Compute a quasi-stable coloring");
  color_cmd->add_option("graph", color.graph, "Edge list")->required();
  color_cmd->add_flag("--directed", color.directed, "Read arcs instead of undirected edges");
  add_stopping(color_cmd, color.stop, 0.0, 0.0);
  color_cmd->add_option("--mean", color.stop.mean, "Split threshold: arithmetic or geometric")->capture_default_str();
  color_cmd->add_option("--pin", color.pins, "Node labels that keep their own color");
  color_cmd->add_flag("--progressive", color.progressive, "One JSON line per split");
  color_cmd->add_option("--out", color.out, "Write the coloring JSON here");

  MaxflowCmd maxflow;
  auto* maxflow_cmd = app.add_subcommand("maxflow", "Approximate max-flow through a reduced network");
  maxflow_cmd->add_option("network", maxflow.network, "Network file with s/t lines")->required();
  add_stopping(maxflow_cmd, maxflow.stop, 0.0, 0.0);
  maxflow_cmd->add_option("--coloring-file", maxflow.stop.coloring_file, "Use this coloring JSON");
  maxflow_cmd->add_flag("--exact", maxflow.exact, "Also compute the exact max-flow");
  maxflow_cmd->add_flag("--lower", maxflow.lower, "Also compute the uniform-flow lower bound");

  LpCmd lp;
  auto* lp_cmd = app.add_subcommand("lp", "Solve a reduced linear program");
  lp_cmd->add_option("lp", lp.lp, "LP JSON or .mps file")->required();
  add_stopping(lp_cmd, lp.stop, 1.0, 0.0);
  lp_cmd->add_option("--coloring-file", lp.stop.coloring_file, "Row/column coloring JSON");
  lp_cmd->add_option("--norm", lp.norm, "sqrt or count")->capture_default_str();
  lp_cmd->add_flag("--exact", lp.exact, "Also solve the original LP");
  lp_cmd->add_option("--export-mps", lp.export_mps_path, "Write the original LP as MPS");
  lp_cmd->add_option("--export-reduced", lp.export_reduced_path, "Write the reduced LP as MPS");
  lp_cmd->add_option("--out", lp.out, "Write the reduced solution JSON here");

  CentralityCmd centrality;
  auto* centrality_cmd = app.add_subcommand("centrality", "Approximate betweenness centrality");
  centrality_cmd->add_option("graph", centrality.graph, "Edge list")->required();
  centrality_cmd->add_flag("--directed", centrality.directed, "Read arcs instead of undirected edges");
  add_stopping(centrality_cmd, centrality.stop, 1.0, 1.0);
  centrality.stop.mean = "geometric";
  centrality_cmd->add_option("--mean", centrality.stop.mean, "Split threshold: arithmetic or geometric")
      ->capture_default_str();
  centrality_cmd->add_option("--coloring-file", centrality.stop.coloring_file, "Use this coloring JSON");
  centrality_cmd->add_flag("--exact", centrality.exact, "Compare against exact Brandes");
  centrality_cmd->add_option("--out", centrality.out, "Write the scores JSON here");

  BenchCmd bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a synthetic experiment");
  bench_cmd->add_option("experiment", bench.experiment, "robustness or centrality")->capture_default_str();
  bench_cmd->add_option("--groups", bench.groups)->capture_default_str();
  bench_cmd->add_option("--group-size", bench.group_size)->capture_default_str();
  bench_cmd->add_option("--inter-degree", bench.inter_degree)->capture_default_str();
  bench_cmd->add_option("--fraction", bench.fraction)->capture_default_str();
  bench_cmd->add_option("--eps", bench.eps)->capture_default_str();
  bench_cmd->add_option("--n", bench.n, "Barabasi-Albert nodes")->capture_default_str();
  bench_cmd->add_option("--m", bench.m, "Barabasi-Albert edges per node")->capture_default_str();
  bench_cmd->add_option("--budgets", bench.budgets, "Color budgets")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed (falls back to QSC_SEED, then 0)");

  GenCmd gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph");
  gen_cmd->add_option("kind", gen.kind, "blowup or ba")->capture_default_str();
  gen_cmd->add_option("--groups", gen.groups)->capture_default_str();
  gen_cmd->add_option("--group-size", gen.group_size)->capture_default_str();
  gen_cmd->add_option("--inter-degree", gen.inter_degree)->capture_default_str();
  gen_cmd->add_option("--n", gen.n)->capture_default_str();
  gen_cmd->add_option("--m", gen.m)->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed (falls back to QSC_SEED, then 0)");
  gen_cmd->add_option("--out", gen.out, "Edge list path (stdout when absent)");

  PerturbCmd pert;
  auto* perturb_cmd = app.add_subcommand("perturb", "Add random edges to a graph");
  perturb_cmd->add_option("graph", pert.graph, "Edge list")->required();
  perturb_cmd->add_flag("--directed", pert.directed, "Read arcs instead of undirected edges");
  perturb_cmd->add_option("--fraction", pert.fraction, "New edges as a fraction of |E|")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  perturb_cmd->add_option("--seed", pert.seed, "Seed (falls back to QSC_SEED, then 0)");
  perturb_cmd->add_option("--out", pert.out, "Edge list path (stdout when absent)");

  // CLI11 consumes a vector argument list back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  try {
    if (color_cmd->parsed()) return cmd_color(color, out);
    if (maxflow_cmd->parsed()) return cmd_maxflow(maxflow, out);
    if (lp_cmd->parsed()) return cmd_lp(lp, out);
    if (centrality_cmd->parsed()) return cmd_centrality(centrality, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (perturb_cmd->parsed()) return cmd_perturb(pert, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return capacity_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace qsc::cli
