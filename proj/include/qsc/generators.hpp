#pragma once

#include <cstdint>
#include <optional>

#include "qsc/coloring.hpp"
#include "qsc/graph.hpp"

namespace qsc {

struct Blowup {
  WeightedDigraph graph;
  /// Group partition: node v belongs to group v / group_size.
  Coloring groups;
  /// Seed actually used after retries.
  std::uint64_t seed = 0;
};

/// Undirected blow-up of a random base multigraph on `groups` super-nodes.
/// Every group is a clique of `group_size` nodes and starts `inter_degree`
/// super-edges, laid in bundles toward random other groups: a bundle has a
/// multiplicity drawn from [ceil(0.7 group_size), group_size], and each unit
/// becomes a perfect matching with a shift distinct within its pair. The
/// group partition is therefore stable. Seeds are derived and
/// retried until refine_stable yields exactly `groups` colors; throws
/// ParameterError if no seed works within the retry budget.
Blowup gen_blowup(std::size_t groups, std::size_t group_size, std::size_t inter_degree, std::uint64_t seed);

/// Adds ceil(fraction * |E|) new unit edges between uniformly random node
/// pairs that are not yet adjacent (both directions on symmetric graphs).
/// Throws ParameterError when the graph has too few free pairs.
WeightedDigraph perturb(const WeightedDigraph& g, double fraction, std::uint64_t seed);

/// Preferential attachment with m edges per new node, starting from m
/// isolated nodes.
WeightedDigraph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// max(v / v_hat, v_hat / v); empty unless both values are positive.
std::optional<double> relative_error(double v, double v_hat);

}  // namespace qsc
