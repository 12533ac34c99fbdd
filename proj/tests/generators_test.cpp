#include <gtest/gtest.h>

#include "qsc/coloring.hpp"
#include "qsc/errors.hpp"
#include "qsc/generators.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qsc;

namespace {

bool same_graph(const WeightedDigraph& a, const WeightedDigraph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_arcs() != b.num_arcs()) return false;
  for (Node u = 0; u < a.num_nodes(); ++u)
    for (const Arc& arc : a.out_arcs(u))
      if (b.weight(u, arc.node) != arc.weight) return false;
  return true;
}

}  // namespace

TEST(GenBlowup, GroupPartitionIsTheStableColoring) {
  const Blowup blow = gen_blowup(12, 5, 3, 4);
  EXPECT_EQ(blow.graph.num_nodes(), 60u);
  EXPECT_TRUE(blow.graph.undirected());
  EXPECT_EQ(blow.graph.num_edges(), 12u * 10u + 12u * 3u * 5u);
  EXPECT_TRUE(validate(blow.graph, blow.groups, Relation::q_stable(0)));
  EXPECT_TRUE(refine_stable(blow.graph).same_partition(blow.groups));
  for (Node v = 0; v < 60; ++v) EXPECT_EQ(blow.groups.color(v), v / 5);
}

TEST(GenBlowup, FullScaleHasHundredColors) {
  const Blowup blow = gen_blowup(100, 10, 17, 0);
  EXPECT_EQ(blow.graph.num_nodes(), 1000u);
  EXPECT_EQ(blow.graph.num_edges(), 21500u);
  EXPECT_EQ(refine_stable(blow.graph).num_colors(), 100u);
}

TEST(GenBlowup, SingleGroupIsClique) {
  const Blowup blow = gen_blowup(1, 6, 0, 0);
  EXPECT_EQ(blow.graph.num_edges(), 15u);
  EXPECT_EQ(refine_stable(blow.graph).num_colors(), 1u);
}

TEST(GenBlowup, DeterministicInSeed) {
  const Blowup a = gen_blowup(8, 4, 2, 99);
  const Blowup b = gen_blowup(8, 4, 2, 99);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_TRUE(same_graph(a.graph, b.graph));
}

TEST(GenBlowup, RejectsImpossibleParameters) {
  EXPECT_THROW(gen_blowup(0, 3, 1, 0), ParameterError);
  EXPECT_THROW(gen_blowup(3, 0, 1, 0), ParameterError);
  EXPECT_THROW(gen_blowup(1, 3, 1, 0), ParameterError);
  // Two groups of two nodes admit only two distinct matchings.
  EXPECT_THROW(gen_blowup(2, 2, 3, 0), ParameterError);
}

TEST(Perturb, ZeroFractionIsIdentity) {
  test::Rng rng(71);
  const WeightedDigraph g = test::random_graph(rng, 20, 0.2, true, 3);
  EXPECT_TRUE(same_graph(perturb(g, 0.0, 5), g));
}

TEST(Perturb, AddsExactlyTheRequestedNewEdges) {
  test::Rng rng(72);
  for (bool undirected : {true, false}) {
    const WeightedDigraph g = test::random_graph(rng, 30, 0.15, undirected, 2);
    const WeightedDigraph h = perturb(g, 0.1, 17);
    const auto expected = static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(g.num_edges())));
    EXPECT_EQ(h.num_edges(), g.num_edges() + expected);
    EXPECT_EQ(h.undirected(), undirected);
    for (Node u = 0; u < g.num_nodes(); ++u) {
      EXPECT_EQ(h.weight(u, u), g.weight(u, u));
      for (Node v = 0; v < g.num_nodes(); ++v) {
        if (g.weight(u, v) != 0.0) {
          EXPECT_EQ(h.weight(u, v), g.weight(u, v));
        } else {
          EXPECT_TRUE(h.weight(u, v) == 0.0 || h.weight(u, v) == 1.0);
        }
      }
    }
  }
}

TEST(Perturb, BreaksBlowupStability) {
  const Blowup blow = gen_blowup(20, 6, 3, 1);
  const WeightedDigraph h = perturb(blow.graph, 0.02, 3);
  EXPECT_GT(refine_stable(h).num_colors(), 20u);
  EXPECT_FALSE(validate(h, blow.groups, Relation::q_stable(0)));
  EXPECT_TRUE(validate(h, blow.groups, Relation::q_stable(static_cast<double>(h.num_edges()))));
}

TEST(Perturb, RejectsImpossibleRequests) {
  GraphBuilder b(3, true);
  b.add(0, 1);
  b.add(1, 2);
  const WeightedDigraph g = std::move(b).build();
  EXPECT_NO_THROW(perturb(g, 0.5, 0));
  EXPECT_THROW(perturb(g, 1.0, 0), ParameterError);
  EXPECT_THROW(perturb(g, -0.1, 0), ParameterError);
}

TEST(BarabasiAlbert, SizeAndSimplicity) {
  const WeightedDigraph g = barabasi_albert(500, 3, 11);
  EXPECT_EQ(g.num_nodes(), 500u);
  EXPECT_EQ(g.num_edges(), 3u * 497u);
  for (Node u = 0; u < g.num_nodes(); ++u) {
    EXPECT_EQ(g.weight(u, u), 0.0);
    for (const Arc& a : g.out_arcs(u)) EXPECT_EQ(a.weight, 1.0);
  }
  // Preferential attachment: early nodes collect far more than m edges.
  std::size_t max_degree = 0;
  for (Node u = 0; u < 500; ++u) max_degree = std::max(max_degree, g.out_arcs(u).size());
  EXPECT_GT(max_degree, 30u);
  EXPECT_TRUE(same_graph(g, barabasi_albert(500, 3, 11)));
  EXPECT_FALSE(same_graph(g, barabasi_albert(500, 3, 12)));
}

TEST(BarabasiAlbert, RejectsBadParameters) {
  EXPECT_THROW(barabasi_albert(3, 3, 0), ParameterError);
  EXPECT_THROW(barabasi_albert(10, 0, 0), ParameterError);
}

TEST(RelativeError, Values) {
  EXPECT_DOUBLE_EQ(*relative_error(2, 2), 1.0);
  EXPECT_DOUBLE_EQ(*relative_error(1, 4), 4.0);
  EXPECT_DOUBLE_EQ(*relative_error(4, 1), 4.0);
  EXPECT_NEAR(*relative_error(128.157, 130.199), 1.0159, 1e-4);
  EXPECT_FALSE(relative_error(0, 1).has_value());
  EXPECT_FALSE(relative_error(1, -2).has_value());
}
