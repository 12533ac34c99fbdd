#include <gtest/gtest.h>

#include <map>

#include "qsc/coloring.hpp"
#include "qsc/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qsc;

namespace {

WeightedDigraph cycle(std::size_t n) {
  GraphBuilder b(n, true);
  for (Node i = 0; i < n; ++i) b.add(i, static_cast<Node>((i + 1) % n));
  return std::move(b).build();
}

WeightedDigraph path3() {
  GraphBuilder b(3, true);
  b.add(0, 1);
  b.add(1, 2);
  return std::move(b).build();
}

/// Naive 1-WL: synchronous rounds keyed by (color, sorted neighbour colors with weights).
Coloring naive_wl1(const WeightedDigraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<Color> color(n, 0);
  std::size_t classes = n ? 1 : 0;
  for (;;) {
    const Eigen::MatrixXd w = test::dense_weights(g);
    std::map<std::vector<double>, Color> ids;
    std::vector<Color> next(n);
    for (Node v = 0; v < n; ++v) {
      std::vector<double> key{static_cast<double>(color[v])};
      std::vector<double> out(classes, 0.0), in(classes, 0.0);
      for (Node u = 0; u < n; ++u) {
        out[color[u]] += w(v, u);
        in[color[u]] += w(u, v);
      }
      key.insert(key.end(), out.begin(), out.end());
      key.insert(key.end(), in.begin(), in.end());
      next[v] = ids.emplace(key, static_cast<Color>(ids.size())).first->second;
    }
    color = next;
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return Coloring(color);
}

}  // namespace

TEST(RefineStable, KarateHas27Colors) {
  const Coloring c = refine_stable(test::karate());
  EXPECT_EQ(c.num_colors(), 27u);
  EXPECT_TRUE(validate(test::karate(), c, Relation::q_stable(0)));
}

TEST(RefineStable, MatchesNaiveWl) {
  test::Rng rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const WeightedDigraph g = test::random_graph(rng, 10, 0.3, trial % 2 == 0, 1 + trial % 3);
    const Coloring fast = refine_stable(g);
    EXPECT_TRUE(fast.same_partition(naive_wl1(g)));
    EXPECT_EQ(test::naive_max_q(g, fast), 0.0);
  }
}

TEST(RefineStable, IsMinimalAmongZeroErrorColorings) {
  test::Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedDigraph g = test::random_graph(rng, 14, 0.25, trial % 2 == 0);
    const Coloring stable = refine_stable(g);
    const Coloring q0 = rothko(g, RothkoParams{}).coloring;
    EXPECT_LE(stable.num_colors(), q0.num_colors());
    // Coarsest stable coloring: every zero-error coloring refines it.
    EXPECT_TRUE(q0.refines(stable));
  }
}

TEST(RefineStable, KeepsInitialSplitAndPins) {
  const WeightedDigraph g = cycle(6);
  EXPECT_EQ(refine_stable(g).num_colors(), 1u);
  const Coloring pinned = refine_stable(g, Coloring::with_pins(6, {0}));
  // Distance classes from node 0: {0}, {1,5}, {2,4}, {3}.
  EXPECT_EQ(pinned.num_colors(), 4u);
  EXPECT_TRUE(pinned.is_pinned(pinned.color(0)));
  EXPECT_EQ(pinned.color(1), pinned.color(5));
  EXPECT_EQ(pinned.color(2), pinned.color(4));
}

TEST(RefineStable, PathSplitsEnds) {
  const Coloring c = refine_stable(path3());
  EXPECT_EQ(c.num_colors(), 2u);
  EXPECT_EQ(c.color(0), c.color(2));
}

TEST(RefineCongruence, InfiniteCapEqualsStable) {
  test::Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedDigraph g = test::random_graph(rng, 12, 0.3, trial % 2 == 0, 3);
    EXPECT_TRUE(refine_congruence(g, unbounded_cap).same_partition(refine_stable(g)));
  }
  EXPECT_EQ(refine_congruence(test::karate(), unbounded_cap).num_colors(), 27u);
}

TEST(RefineCongruence, CapOneIsBisimulation) {
  test::Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedDigraph g = test::random_graph(rng, 10, 0.3, false);
    const Coloring c = refine_congruence(g, 1.0);
    EXPECT_TRUE(validate(g, c, Relation::bisimulation()));
    EXPECT_TRUE(refine_stable(g).refines(c));
  }
}

TEST(RefineCongruence, CapZeroKeepsEverythingTogether) {
  EXPECT_EQ(refine_congruence(test::karate(), 0.0).num_colors(), 1u);
  EXPECT_THROW(refine_congruence(test::karate(), -1.0), ParameterError);
}

TEST(RefineCongruence, CapBoundsTheSeparatedDegrees) {
  // Star: center degree 5 and leaves 1. cap = 1 cannot tell 5 from 1 once
  // both are capped, so bisimulation keeps one color.
  GraphBuilder b(6, true);
  for (Node v = 1; v < 6; ++v) b.add(0, v);
  const WeightedDigraph g = std::move(b).build();
  EXPECT_EQ(refine_congruence(g, 1.0).num_colors(), 1u);
  EXPECT_EQ(refine_congruence(g, 2.0).num_colors(), 2u);
}

TEST(RefineWl2, CycleIsOneClass) { EXPECT_EQ(refine_wl2(cycle(5)).num_colors(), 1u); }

TEST(RefineWl2, PathEndsTogether) {
  const Coloring c = refine_wl2(path3());
  EXPECT_EQ(c.num_colors(), 2u);
  EXPECT_EQ(c.color(0), c.color(2));
  EXPECT_NE(c.color(0), c.color(1));
}

TEST(RefineWl2, RefinesWl1) {
  test::Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const WeightedDigraph g = test::random_graph(rng, 8, 0.35, trial % 3 != 0);
    EXPECT_TRUE(refine_wl2(g).refines(refine_stable(g)));
  }
}

TEST(RefineWl2, SeparatesHexagonFromTriangles) {
  const WeightedDigraph g = test::hexagon_and_triangles();
  EXPECT_EQ(refine_stable(g).num_colors(), 1u);
  const Coloring c = refine_wl2(g);
  EXPECT_EQ(c.num_colors(), 2u);
  EXPECT_NE(c.color(0), c.color(6));
}
