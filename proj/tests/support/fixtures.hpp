#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "qsc/flow.hpp"
#include "qsc/generators.hpp"
#include "qsc/graph.hpp"
#include "qsc/reduce.hpp"

namespace qsc::test {

inline std::string data_path(const std::string& name) { return std::string(QSC_DATA_DIR) + "/" + name; }

inline WeightedDigraph karate() { return load_edge_list_file(data_path("karate.edgelist"), false); }

/// 5x3 program: max 9x1 + 10x2 + 50x3 with five <= rows.
inline LinearProgram small_lp() {
  Eigen::MatrixXd a(5, 3);
  a << 4, 8, 2,
       6, 5, 1,
       7, 4, 2,
       3, 1, 22,
       2, 3, 21;
  Eigen::VectorXd b(5);
  b << 20, 20, 21, 50, 51;
  Eigen::VectorXd c(3);
  c << 9, 10, 50;
  return make_lp<double>(a, b, c);
}

constexpr double small_lp_optimum = 128.157;
constexpr double small_lp_reduced_optimum = 130.199;

/// Rows {1,2,3}, {4,5}, border; columns {1,2}, {3}, border.
inline BipartiteColoring small_lp_partition() {
  return BipartiteColoring::from_assignment({0, 0, 0, 1, 1, 2}, {0, 0, 1, 2});
}

/// Reduced block of small_lp() under small_lp_partition().
struct SmallLpReduced {
  Eigen::MatrixXd a;
  Eigen::VectorXd b, c;
};

inline SmallLpReduced small_lp_reduced() {
  SmallLpReduced r{Eigen::MatrixXd(2, 2), Eigen::VectorXd(2), Eigen::VectorXd(2)};
  r.a << 34 / std::sqrt(6.0), 5 / std::sqrt(3.0),
         9 / std::sqrt(4.0), 43 / std::sqrt(2.0);
  r.b << 61 / std::sqrt(3.0), 101 / std::sqrt(2.0);
  r.c << 19 / std::sqrt(2.0), 50.0;
  return r;
}

/// Layered unit-capacity network on 11 nodes with colors
/// {s}, {a1,a2,a3}, {b1,b2,b3}, {c1,c2,c3}, {t}. The coloring is 1-stable,
/// the max flow is 2 (cut {s->a1, c3->t}) and no uniform flow crosses the
/// middle layers.
struct LayeredNetwork {
  FlowNetwork net;
  Coloring coloring;
};

inline LayeredNetwork layered_network() {
  // s=0, a=1..3, b=4..6, c=7..9, t=10
  GraphBuilder b(11);
  const Node s = 0, t = 10;
  const Node a1 = 1, a2 = 2, a3 = 3, b1 = 4, b2 = 5, b3 = 6, c1 = 7, c2 = 8, c3 = 9;
  for (Node a : {a1, a2, a3}) b.add(s, a);
  b.add(a1, b1);
  b.add(a1, b2);
  b.add(a2, b3);
  b.add(a3, b3);
  b.add(b1, c1);
  b.add(b1, c2);
  b.add(b2, c3);
  b.add(b3, c3);
  for (Node c : {c1, c2, c3}) b.add(c, t);
  b.set_labels({"s", "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "t"});
  LayeredNetwork out{{std::move(b).build(), {s}, {t}}, Coloring({0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4}, {0, 4})};
  return out;
}

/// X = {x1, x2}, Y = {y1, y2, y3} with unit edges x1y1, x1y2, x2y3.
inline WeightedDigraph degenerate_piece() {
  GraphBuilder b(5);
  b.add(0, 2);
  b.add(0, 3);
  b.add(1, 4);
  return std::move(b).build();
}

inline const NodeSet degenerate_left{0, 1};
inline const NodeSet degenerate_right{2, 3, 4};

/// Hubs 0, 1, 2 with out-degrees 3, 4 and 5 into private leaves; every leaf
/// has exactly one incoming arc.
inline WeightedDigraph three_hubs() {
  GraphBuilder b(15);
  Node leaf = 3;
  for (Node hub = 0; hub < 3; ++hub)
    for (Node i = 0; i < 3 + hub; ++i) b.add(hub, leaf++);
  return std::move(b).build();
}

/// The given hub split (hub colors 0..k-1). Leaves share one color, or with
/// `leaves_follow_hubs` take a leaf color per hub class.
inline Coloring three_hubs_coloring(std::vector<Color> hubs, bool leaves_follow_hubs = false) {
  const Color k = *std::max_element(hubs.begin(), hubs.end()) + 1;
  std::vector<Color> colors(15, k);
  Node leaf = 3;
  for (Node h = 0; h < 3; ++h) {
    colors[h] = hubs[h];
    for (Node i = 0; i < 3 + h; ++i, ++leaf)
      if (leaves_follow_hubs) colors[leaf] = k + hubs[h];
  }
  return Coloring(std::move(colors));
}

/// Blow-up graph with an extra source feeding every node of group 0 and an
/// extra target drained by every node of the last group. s = n, t = n + 1.
inline FlowNetwork blowup_network(std::size_t groups, std::size_t group_size, std::size_t inter_degree,
                                  std::uint64_t seed) {
  const Blowup blow = gen_blowup(groups, group_size, inter_degree, seed);
  const std::size_t n = blow.graph.num_nodes();
  GraphBuilder b(n + 2);
  for (Node u = 0; u < n; ++u)
    for (const Arc& a : blow.graph.out_arcs(u)) b.add(u, a.node, a.weight);
  const Node s = static_cast<Node>(n), t = static_cast<Node>(n + 1);
  for (Node v : blow.groups.members(blow.groups.color(0))) b.add(s, v, 1.0);
  for (Node v : blow.groups.members(blow.groups.color(static_cast<Node>(n - 1)))) b.add(v, t, 1.0);
  return {std::move(b).build(), {s}, {t}};
}

/// C6 plus two disjoint triangles: every node has degree 2, so one stable
/// color, but hexagon and triangle nodes differ in betweenness.
inline WeightedDigraph hexagon_and_triangles() {
  GraphBuilder b(12, true);
  for (Node i = 0; i < 6; ++i) b.add(i, (i + 1) % 6);
  for (Node base : {6u, 9u})
    for (Node i = 0; i < 3; ++i) b.add(base + i, base + (i + 1) % 3);
  return std::move(b).build();
}

}  // namespace qsc::test
