#include "qsc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qsc/errors.hpp"
#include "text_util.hpp"

namespace qsc {

NodeSet make_node_set(std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::size_t WeightedDigraph::num_edges() const {
  if (!undirected_) return num_arcs();
  std::size_t loops = 0;
  for (Node v = 0; v < num_nodes(); ++v)
    for (const Arc& a : out_arcs(v))
      if (a.node == v) ++loops;
  return (num_arcs() - loops) / 2 + loops;
}

double WeightedDigraph::weight(Node u, Node v) const {
  auto arcs = out_arcs(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, Node x) { return a.node < x; });
  return (it != arcs.end() && it->node == v) ? it->weight : 0.0;
}

double WeightedDigraph::total_weight() const {
  double total = 0.0;
  for (const Arc& a : out_arcs_) total += a.weight;
  return total;
}

std::string WeightedDigraph::label(Node v) const {
  if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

std::optional<Node> WeightedDigraph::find(const std::string& label) const {
  if (!label_index_.empty() || !labels_.empty()) {
    auto it = label_index_.find(label);
    if (it != label_index_.end()) return it->second;
    return std::nullopt;
  }
  Node id = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), id);
  if (ec != std::errc() || ptr != label.data() + label.size() || id >= num_nodes())
    return std::nullopt;
  return id;
}

GraphBuilder::GraphBuilder(std::size_t num_nodes, bool undirected)
    : n_(num_nodes), undirected_(undirected) {}

void GraphBuilder::add(Node u, Node v, double w) {
  if (u >= n_ || v >= n_) throw ParameterError("node id out of range");
  if (!std::isfinite(w)) throw ParameterError("non-finite weight");
  triples_.push_back({u, v, w});
  if (undirected_ && u != v) triples_.push_back({v, u, w});
}

void GraphBuilder::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) throw ParameterError("label count does not match node count");
  labels_ = std::move(labels);
}

WeightedDigraph GraphBuilder::build() && {
  std::sort(triples_.begin(), triples_.end(), [](const Triple& a, const Triple& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  // Merge parallel arcs in input order of equal keys.
  std::vector<Triple> merged;
  merged.reserve(triples_.size());
  for (const Triple& t : triples_) {
    if (!merged.empty() && merged.back().u == t.u && merged.back().v == t.v)
      merged.back().w += t.w;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Triple& t) { return t.w == 0.0; });

  WeightedDigraph g;
  g.undirected_ = undirected_;
  g.out_offsets_.assign(n_ + 1, 0);
  g.in_offsets_.assign(n_ + 1, 0);
  for (const Triple& t : merged) {
    ++g.out_offsets_[t.u + 1];
    ++g.in_offsets_[t.v + 1];
    if (t.w < 0) g.has_negative_ = true;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }
  g.out_arcs_.resize(merged.size());
  g.in_arcs_.resize(merged.size());
  std::vector<std::size_t> out_pos(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_pos(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // merged is sorted by (u,v), so both adjacencies come out sorted by neighbour.
  for (const Triple& t : merged) {
    g.out_arcs_[out_pos[t.u]++] = {t.v, t.w};
    g.in_arcs_[in_pos[t.v]++] = {t.u, t.w};
  }

  g.labels_ = std::move(labels_);
  for (Node v = 0; v < g.labels_.size(); ++v) g.label_index_.emplace(g.labels_[v], v);
  return g;
}

namespace {

std::optional<std::uint64_t> as_index(const std::string& s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

WeightedDigraph load_edge_list(std::istream& in, bool directed, double default_weight) {
  struct RawEdge {
    std::size_t u, v;
    double w;
  };
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<RawEdge> raw;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = seen.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2 && tokens.size() != 3)
      throw ParseError("expected `u v` or `u v w`", line_no);
    double w = default_weight;
    if (tokens.size() == 3) {
      auto parsed = detail::parse_double(tokens[2]);
      if (!parsed || !std::isfinite(*parsed)) throw ParseError("bad weight '" + tokens[2] + "'", line_no);
      w = *parsed;
    }
    if (w == 0.0) throw ParseError("zero weight (a zero weight means no edge)", line_no);
    raw.push_back({intern(tokens[0]), intern(tokens[1]), w});
  }

  // Numeric labels keep their numeric order so that `0..n-1` files map to
  // themselves.
  const std::size_t n = labels.size();
  std::vector<std::size_t> remap(n);
  std::vector<std::uint64_t> numeric(n);
  bool all_numeric = true;
  for (std::size_t i = 0; i < n && all_numeric; ++i) {
    auto v = as_index(labels[i]);
    if (!v) all_numeric = false;
    else numeric[i] = *v;
  }
  std::vector<std::string> ordered(n);
  if (all_numeric) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return numeric[a] < numeric[b]; });
    for (std::size_t rank = 0; rank < n; ++rank) remap[order[rank]] = rank;
  } else {
    for (std::size_t i = 0; i < n; ++i) remap[i] = i;
  }
  for (std::size_t i = 0; i < n; ++i) ordered[remap[i]] = labels[i];

  GraphBuilder builder(n, !directed);
  for (const RawEdge& e : raw) builder.add(static_cast<Node>(remap[e.u]), static_cast<Node>(remap[e.v]), e.w);
  builder.set_labels(std::move(ordered));
  return std::move(builder).build();
}

WeightedDigraph load_edge_list_file(const std::string& path, bool directed, double default_weight) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return load_edge_list(in, directed, default_weight);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const WeightedDigraph& g) {
  for (Node u = 0; u < g.num_nodes(); ++u) {
    for (const Arc& a : g.out_arcs(u)) {
      if (g.undirected() && a.node < u) continue;
      out << g.label(u) << ' ' << g.label(a.node) << ' ' << detail::format_double(a.weight) << '\n';
    }
  }
}

double weight_between(const WeightedDigraph& g, const NodeSet& from, const NodeSet& to) {
  if (from.empty() || to.empty()) return 0.0;
  std::vector<char> in_to(g.num_nodes(), 0);
  for (Node y : to) in_to[y] = 1;
  double total = 0.0;
  for (Node x : from)
    for (const Arc& a : g.out_arcs(x))
      if (in_to[a.node]) total += a.weight;
  return total;
}

double color_degree(const WeightedDigraph& g, Node v, const NodeSet& set, Direction d) {
  double total = 0.0;
  for (const Arc& a : g.arcs(v, d))
    if (std::binary_search(set.begin(), set.end(), a.node)) total += a.weight;
  return total;
}

BipartiteView::BipartiteView(const WeightedDigraph& g, NodeSet left, NodeSet right)
    : graph_(&g), left_(make_node_set(std::move(left))), right_(make_node_set(std::move(right))) {
  for (Node x : left_)
    if (x >= g.num_nodes()) throw ParameterError("bipartite view: node out of range");
  for (Node y : right_) {
    if (y >= g.num_nodes()) throw ParameterError("bipartite view: node out of range");
    if (std::binary_search(left_.begin(), left_.end(), y))
      throw ParameterError("bipartite view: left and right sides overlap");
  }
}

std::vector<BipartiteView::Edge> BipartiteView::edges() const {
  std::vector<Edge> result;
  for (std::size_t i = 0; i < left_.size(); ++i) {
    for (const Arc& a : graph_->out_arcs(left_[i])) {
      auto it = std::lower_bound(right_.begin(), right_.end(), a.node);
      if (it != right_.end() && *it == a.node)
        result.push_back({i, static_cast<std::size_t>(it - right_.begin()), a.weight});
    }
  }
  return result;
}

double BipartiteView::total_weight() const { return weight_between(*graph_, left_, right_); }

}  // namespace qsc
