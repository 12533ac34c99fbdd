#pragma once

#include <optional>
#include <vector>

#include "qsc/coloring.hpp"
#include "qsc/graph.hpp"

namespace qsc {

using CentralityVector = std::vector<double>;

/// Betweenness g(v) = sum over ordered pairs s != v != t != s of
/// sigma(s,t|v) / sigma(s,t), with hop-count shortest paths (Brandes).
/// Undirected graphs count each unordered pair twice.
CentralityVector brandes_exact(const WeightedDigraph& g);

/// Brandes on the color graph, one source per color. A breadth-first layer
/// holds an expected node count per color: a P_i node has d(i,j) arcs into
/// P_j on average, and those landing on unreached P_j nodes extend the
/// layer (capped at the unreached count). Path counts and dependencies are
/// per node, sources count |P_s| times, and every member of P_c gets the
/// color total divided by |P_c|. Topology only, like brandes_exact; equals
/// it on singleton colorings.
CentralityVector approx_centrality(const WeightedDigraph& g, const Coloring& coloring);

/// Average ranks (1-based), ties share the mean of their positions.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Spearman's rho as the Pearson correlation of average ranks. Empty when
/// either side has zero rank variance. Throws on length mismatch or n < 2.
std::optional<double> spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace qsc
