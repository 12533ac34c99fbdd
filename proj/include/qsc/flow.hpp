#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsc/coloring.hpp"
#include "qsc/graph.hpp"

namespace qsc {

/// Capacitated network: arc weights are capacities.
struct FlowNetwork {
  WeightedDigraph graph;
  NodeSet sources;
  NodeSet targets;

  /// Throws ParameterError on negative capacities, empty or overlapping
  /// terminal sets, or out-of-range terminals.
  void check() const;
};

struct MaxFlowResult {
  double value = 0.0;
  /// Flow on each arc, in the order of graph.out_arcs(0), out_arcs(1), ...
  std::vector<double> arc_flow;
};

/// Dinic's algorithm. Several sources or targets are joined through an
/// internal super-source and super-sink.
MaxFlowResult max_flow(const FlowNetwork& net);

/// Largest value F of a uniform flow from left() to right(): every left node
/// sends F/|X| and every right node receives F/|Y|. Bisection on F over
/// [0, c(X,Y)] with feasibility value >= F (1 - 1e-9).
double max_uniform_flow(const BipartiteView& bg);

/// Checks c(S,T) + F >= a|S| + b|T| for all S in X, T in Y with
/// F = min(a|X|, b|Y|). Throws CapacityError when |X| + |Y| > 20.
bool check_uniform_condition(const BipartiteView& bg, double a, double b);

constexpr std::size_t uniform_condition_limit = 20;

struct FlowBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// Reduced capacities: c1 from uniform flows, c2 from total capacity.
  Eigen::MatrixXd c1, c2;
  Color source_color = 0;
  Color target_color = 0;
};

/// Reduced-network bounds maxFlow(G1) <= maxFlow(G) <= maxFlow(G2).
/// Requires a single source and target, each alone in its color.
/// With compute_lower = false only c2 and the upper bound are filled in.
FlowBounds flow_bounds(const FlowNetwork& net, const Coloring& coloring, bool compute_lower = true);

/// Network file: `s <id>` and `t <id>` lines plus `u v capacity` edges.
FlowNetwork load_network(std::istream& in);
FlowNetwork load_network_file(const std::string& path);
void write_network(std::ostream& out, const FlowNetwork& net);

}  // namespace qsc
