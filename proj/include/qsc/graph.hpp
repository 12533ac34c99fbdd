#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace qsc {

using Node = std::uint32_t;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<Node>;

NodeSet make_node_set(std::vector<Node> nodes);

enum class Direction : std::uint8_t { out = 0, in = 1 };

struct Arc {
  Node node;  // head for out-arcs, tail for in-arcs
  double weight;
};

/// Immutable weighted directed graph in compressed sparse row form.
///
/// An arc (u,v) is stored iff w(u,v) != 0. Both the out- and the in-adjacency
/// are kept, each sorted by neighbour id. Undirected graphs are stored as
/// symmetric digraphs and remember that they were built that way.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  std::size_t num_nodes() const { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  /// Number of stored (directed) arcs.
  std::size_t num_arcs() const { return out_arcs_.size(); }
  /// Undirected edge count for symmetric graphs (self-loops count once),
  /// arc count otherwise.
  std::size_t num_edges() const;

  bool undirected() const { return undirected_; }
  bool has_negative_weights() const { return has_negative_; }

  std::span<const Arc> out_arcs(Node v) const {
    return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
  }
  std::span<const Arc> in_arcs(Node v) const {
    return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
  }
  std::span<const Arc> arcs(Node v, Direction d) const {
    return d == Direction::out ? out_arcs(v) : in_arcs(v);
  }

  /// w(u,v), zero when there is no arc.
  double weight(Node u, Node v) const;
  double total_weight() const;

  /// Original textual labels, indexed by node id. Empty labels mean the id
  /// itself is the label.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Node v) const;
  std::optional<Node> find(const std::string& label) const;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> out_offsets_;
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Arc> in_arcs_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Node> label_index_;
  bool undirected_ = false;
  bool has_negative_ = false;
};

/// Accumulates weighted arcs; parallel arcs are summed and arcs whose summed
/// weight is zero are dropped.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t num_nodes, bool undirected = false);

  /// Adds w to (u,v); for undirected builders also to (v,u) unless u == v.
  void add(Node u, Node v, double w = 1.0);
  void set_labels(std::vector<std::string> labels);

  std::size_t num_nodes() const { return n_; }

  WeightedDigraph build() &&;

 private:
  struct Triple {
    Node u, v;
    double w;
  };
  std::size_t n_;
  bool undirected_;
  std::vector<Triple> triples_;
  std::vector<std::string> labels_;
};

/// Parses `u v [w]` lines; `#` starts a comment line. Labels are interned to
/// dense ids: if every label is a nonnegative integer the ids follow numeric
/// order, otherwise order of first appearance.
WeightedDigraph load_edge_list(std::istream& in, bool directed, double default_weight = 1.0);
WeightedDigraph load_edge_list_file(const std::string& path, bool directed,
                                    double default_weight = 1.0);

/// Writes `u v w` lines using the original labels. Symmetric graphs emit each
/// undirected edge once, so reloading with directed=false round-trips.
void write_edge_list(std::ostream& out, const WeightedDigraph& g);

/// Total weight w(U,V) = sum over x in U, y in V of w(x,y).
double weight_between(const WeightedDigraph& g, const NodeSet& from, const NodeSet& to);

/// Weighted degree of v into (out) or from (in) the node set.
double color_degree(const WeightedDigraph& g, Node v, const NodeSet& set, Direction d);

/// Left-to-right slice of a graph. Only arcs from `left` into `right` are
/// visible through this view.
class BipartiteView {
 public:
  BipartiteView(const WeightedDigraph& g, NodeSet left, NodeSet right);

  const WeightedDigraph& graph() const { return *graph_; }
  const NodeSet& left() const { return left_; }
  const NodeSet& right() const { return right_; }

  struct Edge {
    std::size_t left_index;
    std::size_t right_index;
    double weight;
  };
  /// Visible edges, indices are positions within left()/right().
  std::vector<Edge> edges() const;
  double total_weight() const;

 private:
  const WeightedDigraph* graph_;
  NodeSet left_;
  NodeSet right_;
};

}  // namespace qsc
