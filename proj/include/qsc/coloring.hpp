#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "qsc/graph.hpp"

namespace qsc {

using Color = std::uint32_t;

/// A partition P_1..P_k of the nodes {0..n-1}.
///
/// Colors are dense indices 0..k-1 and every class is nonempty. Pinned
/// colors are required to stay singletons; refinement never merges them.
class Coloring {
 public:
  Coloring() = default;
  /// Throws ParameterError when colors are not dense or a pinned color has
  /// more than one member.
  explicit Coloring(std::vector<Color> color_of, std::vector<Color> pinned = {});

  /// Everything in one color.
  static Coloring uniform(std::size_t n);
  /// Every node its own color.
  static Coloring discrete(std::size_t n);
  /// {p} for each pinned node p, plus one color holding everything else.
  static Coloring with_pins(std::size_t n, const NodeSet& pins);

  std::size_t num_nodes() const { return color_of_.size(); }
  std::size_t num_colors() const { return classes_.size(); }
  Color color(Node v) const { return color_of_[v]; }
  const std::vector<Color>& color_of() const { return color_of_; }
  const NodeSet& members(Color c) const { return classes_[c]; }
  const std::vector<NodeSet>& classes() const { return classes_; }
  const std::vector<Color>& pinned() const { return pinned_; }
  bool is_pinned(Color c) const;

  /// Same partition with colors renumbered by first occurrence in node order.
  Coloring canonical() const;
  /// True if every class of *this lies inside one class of `coarser`.
  bool refines(const Coloring& coarser) const;
  /// Equality of the underlying partitions, ignoring color numbering.
  bool same_partition(const Coloring& other) const;

 private:
  std::vector<Color> color_of_;
  std::vector<NodeSet> classes_;
  std::vector<Color> pinned_;
};

/// Per-direction block statistics of a coloring: for colors i, j
///   upper(i,j) = max over v in P_i of deg(v, P_j),
///   lower(i,j) = min over v in P_i of deg(v, P_j),
/// where deg is the weighted degree into P_j (out) or from P_j (in).
struct Witness {
  Color source = 0;
  Color target = 0;
  Direction direction = Direction::out;
};

struct ErrorReport {
  Eigen::MatrixXd upper_out, lower_out;
  Eigen::MatrixXd upper_in, lower_in;
  double max_q = 0.0;
  double mean_q = 0.0;
  Witness witness;

  const Eigen::MatrixXd& upper(Direction d) const { return d == Direction::out ? upper_out : upper_in; }
  const Eigen::MatrixXd& lower(Direction d) const { return d == Direction::out ? lower_out : lower_in; }
  Eigen::MatrixXd error(Direction d) const { return upper(d) - lower(d); }
};

/// Exact U, L and Err = U - L of a coloring. max_q is the largest Err entry
/// over both directions; mean_q averages Err over the entries whose U is
/// positive. The witness is the lexicographically first maximal entry.
ErrorReport q_error(const WeightedDigraph& g, const Coloring& coloring);

enum class MeanKind { arithmetic, geometric };

struct RothkoParams {
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  std::size_t max_colors = unlimited;
  double eps = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  MeanKind mean = MeanKind::arithmetic;
  // The loop is deterministic; the seed is carried for reporting.
  std::uint64_t seed = 0;
  NodeSet pinned;
};

/// Invoked after every split with the new coloring and its error report.
/// Returning false stops the refinement after that split.
using RothkoObserver = std::function<bool(const Coloring&, const ErrorReport&)>;

struct RothkoResult {
  Coloring coloring;
  ErrorReport report;
  std::size_t splits = 0;
};

/// Anytime quasi-stable refinement. Starting from the pinned initial
/// partition, repeatedly picks the color pair (and direction) with the largest
/// size-weighted degree spread |P_i|^alpha * |P_j|^beta * (U - L) and splits
/// P_i at the mean degree into P_j. Stops once max Err <= eps, the color
/// budget is reached, or every color is a singleton.
RothkoResult rothko(const WeightedDigraph& g, const RothkoParams& params,
                    const RothkoObserver& observer = {});

/// Same loop from an explicit starting partition; `params.pinned` is ignored
/// in favour of the partition's pinned colors.
RothkoResult rothko(const WeightedDigraph& g, const RothkoParams& params, Coloring initial,
                    const RothkoObserver& observer = {});

/// Relations between degrees used by validate().
struct Relation {
  enum class Kind { equality, q_stable, eps_relative, bisimulation };
  Kind kind = Kind::equality;
  double parameter = 0.0;

  static Relation equality() { return {Kind::equality, 0.0}; }
  static Relation q_stable(double q) { return {Kind::q_stable, q}; }
  static Relation eps_relative(double eps) { return {Kind::eps_relative, eps}; }
  static Relation bisimulation() { return {Kind::bisimulation, 0.0}; }

  bool related(double u, double v) const;
};

/// True iff for every ordered color pair (i, j), i == j included, and both
/// directions, the member degrees of P_i into P_j are pairwise related.
bool validate(const WeightedDigraph& g, const Coloring& coloring, Relation relation);

/// Maximum stable coloring (1-WL) refining `initial` by repeated splitting
/// against one splitter color at a time.
Coloring refine_stable(const WeightedDigraph& g);
Coloring refine_stable(const WeightedDigraph& g, const Coloring& initial);

/// Maximum coloring that is stable under the congruence
/// min(x, cap) == min(y, cap). cap = +inf gives the stable coloring; cap = 1
/// on unit-weight graphs gives the coarsest bisimulation.
Coloring refine_congruence(const WeightedDigraph& g, double cap);
Coloring refine_congruence(const WeightedDigraph& g, double cap, const Coloring& initial);

/// Node classes of the 2-dimensional Weisfeiler-Leman pair refinement.
/// Cubic per round; meant for graphs of at most a few hundred nodes.
Coloring refine_wl2(const WeightedDigraph& g);

constexpr double unbounded_cap = std::numeric_limits<double>::infinity();

}  // namespace qsc
