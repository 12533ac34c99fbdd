#include "qsc/flow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

#include "qsc/errors.hpp"
#include "text_util.hpp"

namespace qsc {

void FlowNetwork::check() const {
  const std::size_t n = graph.num_nodes();
  if (sources.empty() || targets.empty()) throw ParameterError("network needs a source and a target");
  for (Node v : sources)
    if (v >= n) throw ParameterError("source out of range");
  for (Node v : targets)
    if (v >= n) throw ParameterError("target out of range");
  for (Node v : sources)
    if (std::binary_search(targets.begin(), targets.end(), v))
      throw ParameterError("sources and targets overlap");
  if (graph.has_negative_weights()) throw ParameterError("capacities must be nonnegative");
}

namespace {

class Dinic {
 public:
  explicit Dinic(std::size_t n) : head_(n, -1), level_(n), iter_(n) {}

  std::size_t add(std::size_t u, std::size_t v, double cap) {
    const std::size_t id = to_.size();
    push(u, v, cap);
    push(v, u, 0.0);
    scale_ = std::max(scale_, cap);
    return id;
  }

  double run(std::size_t s, std::size_t t) {
    eps_ = 1e-12 * (1.0 + scale_);
    double total = 0.0;
    while (bfs(s, t)) {
      for (std::size_t v = 0; v < head_.size(); ++v) iter_[v] = head_[v];
      for (;;) {
        const double f = dfs(s, t, std::numeric_limits<double>::infinity());
        if (f <= eps_) break;
        total += f;
      }
    }
    return total;
  }

  double flow(std::size_t edge) const { return cap_[edge ^ 1]; }

 private:
  void push(std::size_t u, std::size_t v, double cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<std::ptrdiff_t>(to_.size() - 1);
  }

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::ptrdiff_t e = head_[u]; e >= 0; e = next_[e]) {
        if (cap_[e] > eps_ && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          q.push(to_[e]);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(std::size_t u, std::size_t t, double limit) {
    if (u == t) return limit;
    for (std::ptrdiff_t& e = iter_[u]; e >= 0; e = next_[e]) {
      const std::size_t v = to_[e];
      if (cap_[e] <= eps_ || level_[v] != level_[u] + 1) continue;
      const double f = dfs(v, t, std::min(limit, cap_[e]));
      if (f > eps_) {
        cap_[e] -= f;
        cap_[e ^ 1] += f;
        return f;
      }
    }
    return 0.0;
  }

  std::vector<std::ptrdiff_t> head_;
  std::vector<std::size_t> to_;
  std::vector<double> cap_;
  std::vector<std::ptrdiff_t> next_;
  std::vector<int> level_;
  std::vector<std::ptrdiff_t> iter_;
  double scale_ = 0.0;
  double eps_ = 0.0;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  net.check();
  const WeightedDigraph& g = net.graph;
  const std::size_t n = g.num_nodes();
  Dinic dinic(n + 2);
  std::vector<std::size_t> ids;
  ids.reserve(g.num_arcs());
  double total = 0.0;
  for (Node u = 0; u < n; ++u)
    for (const Arc& a : g.out_arcs(u)) {
      ids.push_back(dinic.add(u, a.node, a.weight));
      total += a.weight;
    }

  std::size_t s = net.sources.front();
  std::size_t t = net.targets.front();
  // A finite stand-in for infinity keeps the arithmetic exact on integral inputs.
  const double big = total + 1.0;
  if (net.sources.size() > 1) {
    s = n;
    for (Node v : net.sources) dinic.add(s, v, big);
  }
  if (net.targets.size() > 1) {
    t = n + 1;
    for (Node v : net.targets) dinic.add(v, t, big);
  }

  MaxFlowResult out;
  out.value = dinic.run(s, t);
  out.arc_flow.reserve(ids.size());
  for (std::size_t id : ids) out.arc_flow.push_back(dinic.flow(id));
  return out;
}

namespace {

double uniform_flow_value(const std::vector<BipartiteView::Edge>& edges, std::size_t p, std::size_t q,
                          double f) {
  Dinic dinic(p + q + 2);
  const std::size_t s = p + q;
  const std::size_t t = s + 1;
  for (std::size_t x = 0; x < p; ++x) dinic.add(s, x, f / static_cast<double>(p));
  for (std::size_t y = 0; y < q; ++y) dinic.add(p + y, t, f / static_cast<double>(q));
  for (const auto& e : edges) dinic.add(e.left_index, p + e.right_index, e.weight);
  return dinic.run(s, t);
}

}  // namespace

double max_uniform_flow(const BipartiteView& bg) {
  const std::size_t p = bg.left().size();
  const std::size_t q = bg.right().size();
  if (p == 0 || q == 0) return 0.0;
  if (bg.graph().has_negative_weights()) throw ParameterError("capacities must be nonnegative");
  const auto edges = bg.edges();
  const double total = bg.total_weight();
  if (total <= 0.0) return 0.0;

  constexpr double rel = 1e-9;
  auto feasible = [&](double f) { return uniform_flow_value(edges, p, q, f) >= f * (1.0 - rel); };
  if (feasible(total)) return total;
  double lo = 0.0;
  double hi = total;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

bool check_uniform_condition(const BipartiteView& bg, double a, double b) {
  const std::size_t p = bg.left().size();
  const std::size_t q = bg.right().size();
  if (p + q > uniform_condition_limit)
    throw CapacityError("uniform condition enumeration is limited to " +
                        std::to_string(uniform_condition_limit) + " nodes");
  const double f = std::min(a * static_cast<double>(p), b * static_cast<double>(q));
  // cap[x] holds the capacities from left node x as a dense row.
  std::vector<std::vector<double>> cap(p, std::vector<double>(q, 0.0));
  for (const auto& e : bg.edges()) cap[e.left_index][e.right_index] += e.weight;
  const double tol = 1e-9 * (1.0 + std::abs(f));

  for (std::uint64_t s = 0; s < (std::uint64_t{1} << p); ++s) {
    std::vector<double> into(q, 0.0);  // c(S, y)
    int s_size = 0;
    for (std::size_t x = 0; x < p; ++x)
      if (s >> x & 1) {
        ++s_size;
        for (std::size_t y = 0; y < q; ++y) into[y] += cap[x][y];
      }
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << q); ++t) {
      double c_st = 0.0;
      int t_size = 0;
      for (std::size_t y = 0; y < q; ++y)
        if (t >> y & 1) {
          ++t_size;
          c_st += into[y];
        }
      if (c_st + f < a * s_size + b * t_size - tol) return false;
    }
  }
  return true;
}

namespace {

FlowNetwork reduced_network(const Eigen::MatrixXd& cap, Color s, Color t) {
  const auto k = static_cast<std::size_t>(cap.rows());
  GraphBuilder builder(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && cap(i, j) > 0.0) builder.add(static_cast<Node>(i), static_cast<Node>(j), cap(i, j));
  return {std::move(builder).build(), {s}, {t}};
}

}  // namespace

FlowBounds flow_bounds(const FlowNetwork& net, const Coloring& coloring, bool compute_lower) {
  net.check();
  if (net.sources.size() != 1 || net.targets.size() != 1)
    throw ParameterError("flow bounds need a single source and target");
  if (coloring.num_nodes() != net.graph.num_nodes())
    throw ParameterError("coloring size does not match network");
  const Node s = net.sources.front();
  const Node t = net.targets.front();
  FlowBounds out;
  out.source_color = coloring.color(s);
  out.target_color = coloring.color(t);
  if (coloring.members(out.source_color).size() != 1 || coloring.members(out.target_color).size() != 1)
    throw ParameterError("source and target must each have their own color");

  const auto k = static_cast<Eigen::Index>(coloring.num_colors());
  out.c2 = Eigen::MatrixXd::Zero(k, k);
  const WeightedDigraph& g = net.graph;
  for (Node u = 0; u < g.num_nodes(); ++u)
    for (const Arc& a : g.out_arcs(u)) out.c2(coloring.color(u), coloring.color(a.node)) += a.weight;
  for (Eigen::Index i = 0; i < k; ++i) out.c2(i, i) = 0.0;
  out.upper = max_flow(reduced_network(out.c2, out.source_color, out.target_color)).value;

  out.c1 = Eigen::MatrixXd::Zero(k, k);
  if (!compute_lower) return out;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j || out.c2(i, j) <= 0.0) continue;
      const BipartiteView piece(g, coloring.members(static_cast<Color>(i)), coloring.members(static_cast<Color>(j)));
      out.c1(i, j) = max_uniform_flow(piece);
    }
  out.lower = max_flow(reduced_network(out.c1, out.source_color, out.target_color)).value;
  return out;
}

FlowNetwork load_network(std::istream& in) {
  // Header lines are blanked so edge line numbers stay accurate.
  std::stringstream edges;
  std::vector<std::pair<char, std::string>> terminals;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok.front().front() == '#') {
      edges << '\n';
      continue;
    }
    if (tok.size() == 2 && (tok[0] == "s" || tok[0] == "t")) {
      terminals.emplace_back(tok[0][0], tok[1]);
      edges << '\n';
      continue;
    }
    if (tok.size() != 3) throw ParseError("expected `s <id>`, `t <id>` or `u v capacity`", line_no);
    edges << line << '\n';
  }
  FlowNetwork net;
  net.graph = load_edge_list(edges, /*directed=*/true);
  std::vector<Node> sources, targets;
  for (const auto& [kind, label] : terminals) {
    auto v = net.graph.find(label);
    if (!v) throw ParseError(std::string(kind == 's' ? "source" : "target") + " '" + label +
                             "' does not appear in any edge");
    (kind == 's' ? sources : targets).push_back(*v);
  }
  if (sources.empty()) throw ParseError("missing `s <id>` line");
  if (targets.empty()) throw ParseError("missing `t <id>` line");
  net.sources = make_node_set(std::move(sources));
  net.targets = make_node_set(std::move(targets));
  for (Node v : net.sources)
    if (std::binary_search(net.targets.begin(), net.targets.end(), v))
      throw ParseError("node '" + net.graph.label(v) + "' is both source and target");
  if (net.graph.has_negative_weights()) throw ParseError("capacities must be nonnegative");
  return net;
}

FlowNetwork load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return load_network(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_network(std::ostream& out, const FlowNetwork& net) {
  for (Node v : net.sources) out << "s " << net.graph.label(v) << '\n';
  for (Node v : net.targets) out << "t " << net.graph.label(v) << '\n';
  write_edge_list(out, net.graph);
}

}  // namespace qsc
