#include <gtest/gtest.h>

#include "qsc/coloring.hpp"
#include "qsc/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qsc;

namespace {

WeightedDigraph complete_graph(std::size_t n) {
  GraphBuilder b(n, true);
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) b.add(u, v);
  return std::move(b).build();
}

}  // namespace

TEST(Coloring, RejectsNonDenseColors) {
  EXPECT_THROW(Coloring({0, 2, 2}), ParameterError);
  EXPECT_THROW(Coloring({0, 0, 1}, {0}), ParameterError);
  EXPECT_NO_THROW(Coloring({0, 0, 1}, {1}));
}

TEST(Coloring, CanonicalAndRefines) {
  const Coloring a({2, 0, 1, 0, 2});
  const Coloring c = a.canonical();
  EXPECT_EQ(c.color_of(), (std::vector<Color>{0, 1, 2, 1, 0}));
  EXPECT_TRUE(a.same_partition(c));
  EXPECT_TRUE(Coloring::discrete(5).refines(a));
  EXPECT_TRUE(a.refines(Coloring::uniform(5)));
  EXPECT_FALSE(Coloring::uniform(5).refines(a));
}

TEST(Coloring, WithPinsPutsRestTogether) {
  const Coloring c = Coloring::with_pins(5, {1, 3});
  EXPECT_EQ(c.num_colors(), 3u);
  EXPECT_EQ(c.members(c.color(0)), (NodeSet{0, 2, 4}));
  EXPECT_TRUE(c.is_pinned(c.color(1)));
  EXPECT_TRUE(c.is_pinned(c.color(3)));
  EXPECT_FALSE(c.is_pinned(c.color(0)));
}

TEST(QError, SingleColorOnCompleteGraphIsZero) {
  const ErrorReport r = q_error(complete_graph(6), Coloring::uniform(6));
  EXPECT_EQ(r.max_q, 0.0);
  EXPECT_DOUBLE_EQ(r.upper_out(0, 0), 5.0);
}

TEST(QError, DiscreteColoringIsZero) {
  test::Rng rng(1);
  const WeightedDigraph g = test::random_graph(rng, 10, 0.4, false, 3);
  EXPECT_EQ(q_error(g, Coloring::discrete(10)).max_q, 0.0);
}

TEST(QError, MatchesNaiveLoops) {
  test::Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const bool undirected = trial % 2 == 0;
    const WeightedDigraph g = test::random_graph(rng, 11, 0.35, undirected, 4);
    const Coloring c = test::random_coloring(rng, 11, 1 + trial % 5);
    const ErrorReport r = q_error(g, c);
    const test::NaiveStats s = test::naive_stats(g, c);
    EXPECT_TRUE(r.upper_out == s.upper_out);
    EXPECT_TRUE(r.lower_out == s.lower_out);
    EXPECT_TRUE(r.upper_in == s.upper_in);
    EXPECT_TRUE(r.lower_in == s.lower_in);
    EXPECT_DOUBLE_EQ(r.max_q, test::naive_max_q(g, c));
  }
}

TEST(QError, MeanOverPositiveUpperEntries) {
  // Path 0-1-2 with one color: out-degrees 1, 2, 1.
  GraphBuilder b(3, true);
  b.add(0, 1);
  b.add(1, 2);
  const ErrorReport r = q_error(std::move(b).build(), Coloring::uniform(3));
  EXPECT_DOUBLE_EQ(r.max_q, 1.0);
  EXPECT_DOUBLE_EQ(r.mean_q, 1.0);
  const ErrorReport empty = q_error(GraphBuilder(3).build(), Coloring::uniform(3));
  EXPECT_EQ(empty.mean_q, 0.0);
}

TEST(QError, WitnessIsFirstMaximalEntry) {
  // Star with center 0: one color gives spread 4 out and in; out comes first.
  GraphBuilder b(5, true);
  for (Node v = 1; v < 5; ++v) b.add(0, v);
  const ErrorReport r = q_error(std::move(b).build(), Coloring::uniform(5));
  EXPECT_EQ(r.witness.source, 0u);
  EXPECT_EQ(r.witness.target, 0u);
  EXPECT_EQ(r.witness.direction, Direction::out);
}

TEST(Validate, RelationsOnHandExample) {
  EXPECT_TRUE(Relation::q_stable(1).related(3, 4));
  EXPECT_FALSE(Relation::q_stable(1).related(3, 5));
  EXPECT_TRUE(Relation::eps_relative(std::log(2.0) + 1e-12).related(2, 4));
  EXPECT_FALSE(Relation::eps_relative(0.5).related(2, 4));
  EXPECT_FALSE(Relation::eps_relative(10).related(0, 1));
  EXPECT_TRUE(Relation::eps_relative(0).related(0, 0));
  EXPECT_TRUE(Relation::bisimulation().related(1, 7));
  EXPECT_FALSE(Relation::bisimulation().related(0, 7));
  EXPECT_TRUE(Relation::equality().related(2, 2));
  EXPECT_FALSE(Relation::equality().related(2, 3));
}

TEST(Validate, AgreesWithNaiveSpread) {
  test::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedDigraph g = test::random_graph(rng, 9, 0.4, trial % 2 == 0, 3);
    const Coloring c = test::random_coloring(rng, 9, 3);
    const double q = test::naive_max_q(g, c);
    EXPECT_TRUE(validate(g, c, Relation::q_stable(q)));
    if (q > 0) {
      EXPECT_FALSE(validate(g, c, Relation::q_stable(q - 0.5)));
    }
    EXPECT_EQ(validate(g, c, Relation::equality()), q == 0.0);
  }
}

TEST(Validate, TwoMaximalColoringsOnThreeHubs) {
  const WeightedDigraph g = test::three_hubs();
  const Coloring low = test::three_hubs_coloring({0, 0, 1});
  const Coloring high = test::three_hubs_coloring({0, 1, 1});
  const Coloring merged = test::three_hubs_coloring({0, 0, 0});
  EXPECT_TRUE(validate(g, low, Relation::q_stable(1)));
  EXPECT_TRUE(validate(g, high, Relation::q_stable(1)));
  EXPECT_FALSE(validate(g, merged, Relation::q_stable(1)));
  EXPECT_FALSE(low.same_partition(high));
  // A shared leaf color mixes leaves with and without a hub parent in each
  // hub class, which the relative relation rejects.
  EXPECT_FALSE(validate(g, low, Relation::eps_relative(1.0 / 3.0)));
  // Relative version with eps = 1/n, n = 3, leaves grouped by hub class.
  const Coloring low_rel = test::three_hubs_coloring({0, 0, 1}, true);
  const Coloring high_rel = test::three_hubs_coloring({0, 1, 1}, true);
  EXPECT_TRUE(validate(g, low_rel, Relation::eps_relative(1.0 / 3.0)));
  EXPECT_TRUE(validate(g, high_rel, Relation::eps_relative(1.0 / 3.0)));
  EXPECT_FALSE(validate(g, test::three_hubs_coloring({0, 0, 0}, true), Relation::eps_relative(1.0 / 3.0)));
}

TEST(Validate, EpsRelativeNeedsAllOrNoneConnectivity) {
  // 0 -> 2 only; {0,1} into {2} has degrees 1 and 0.
  GraphBuilder b(3);
  b.add(0, 2);
  const Coloring c({0, 0, 1});
  EXPECT_FALSE(validate(std::move(b).build(), c, Relation::eps_relative(100)));
}

TEST(Rothko, ZeroEpsilonReachesStableColoring) {
  test::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedDigraph g = test::random_graph(rng, 12, 0.3, trial % 2 == 0, 2);
    RothkoParams p;
    const RothkoResult r = rothko(g, p);
    EXPECT_EQ(r.report.max_q, 0.0);
    EXPECT_TRUE(validate(g, r.coloring, Relation::q_stable(0)));
    EXPECT_GE(r.coloring.num_colors(), refine_stable(g).num_colors());
  }
}

TEST(Rothko, RespectsBudgetAndEps) {
  const WeightedDigraph g = test::karate();
  RothkoParams p;
  p.max_colors = 5;
  const RothkoResult r = rothko(g, p);
  EXPECT_EQ(r.coloring.num_colors(), 5u);
  EXPECT_EQ(r.splits, 4u);
  p.max_colors = RothkoParams::unlimited;
  p.eps = 3;
  const RothkoResult q = rothko(g, p);
  EXPECT_LE(q.report.max_q, 3.0);
  EXPECT_TRUE(validate(g, q.coloring, Relation::q_stable(3)));
}

TEST(Rothko, SingleColorBudgetMakesNoSplit) {
  RothkoParams p;
  p.max_colors = 1;
  int calls = 0;
  const RothkoResult r = rothko(test::karate(), p, [&](const Coloring&, const ErrorReport&) {
    ++calls;
    return true;
  });
  EXPECT_EQ(r.coloring.num_colors(), 1u);
  EXPECT_EQ(calls, 0);
}

TEST(Rothko, ObserverSeesMonotoneColorCounts) {
  RothkoParams p;
  p.alpha = 1;
  p.beta = 1;
  std::size_t last = 1;
  std::vector<double> qs;
  const RothkoResult r = rothko(test::karate(), p, [&](const Coloring& c, const ErrorReport& e) {
    EXPECT_EQ(c.num_colors(), last + 1);
    last = c.num_colors();
    EXPECT_DOUBLE_EQ(e.max_q, test::naive_max_q(test::karate(), c));
    qs.push_back(e.max_q);
    return true;
  });
  EXPECT_EQ(r.coloring.num_colors(), last);
  EXPECT_LE(r.splits, 33u);
  EXPECT_EQ(qs.back(), 0.0);
}

TEST(Rothko, ObserverCanStopEarly) {
  RothkoParams p;
  const RothkoResult r = rothko(test::karate(), p, [](const Coloring& c, const ErrorReport&) {
    return c.num_colors() < 4;
  });
  EXPECT_EQ(r.coloring.num_colors(), 4u);
}

TEST(Rothko, NeverMergesAndRefinesEachStep) {
  test::Rng rng(9);
  const WeightedDigraph g = test::random_graph(rng, 20, 0.2, false, 3);
  RothkoParams p;
  p.alpha = 0.5;
  p.mean = MeanKind::geometric;
  Coloring previous = Coloring::uniform(20);
  rothko(g, p, [&](const Coloring& c, const ErrorReport&) {
    EXPECT_TRUE(c.refines(previous));
    previous = c;
    return true;
  });
}

TEST(Rothko, PinsStaySingletons) {
  RothkoParams p;
  p.pinned = {0, 33};
  p.max_colors = 6;
  const RothkoResult r = rothko(test::karate(), p);
  EXPECT_EQ(r.coloring.members(r.coloring.color(0)).size(), 1u);
  EXPECT_EQ(r.coloring.members(r.coloring.color(33)).size(), 1u);
  p.max_colors = 2;
  EXPECT_THROW(rothko(test::karate(), p), ParameterError);
}

TEST(Rothko, IsDeterministic) {
  RothkoParams p;
  p.alpha = 1;
  p.beta = 1;
  p.eps = 1;
  const Coloring a = rothko(test::karate(), p).coloring;
  const Coloring b = rothko(test::karate(), p).coloring;
  EXPECT_EQ(a.color_of(), b.color_of());
}

TEST(Rothko, RejectsBadParameters) {
  RothkoParams p;
  p.eps = -1;
  EXPECT_THROW(rothko(test::karate(), p), ParameterError);
  GraphBuilder b(2);
  b.add(0, 1, -1);
  RothkoParams geo;
  geo.mean = MeanKind::geometric;
  EXPECT_THROW(rothko(std::move(b).build(), geo), ParameterError);
}

TEST(Rothko, DirectedWitnessUsesInDegrees) {
  // Two sources, one shared sink: spread only shows up in the in-direction
  // of the sink color.
  GraphBuilder b(4);
  b.add(0, 2);
  b.add(1, 2);
  b.add(1, 3);
  const WeightedDigraph g = std::move(b).build();
  RothkoParams p;
  const RothkoResult r = rothko(g, p);
  EXPECT_TRUE(validate(g, r.coloring, Relation::q_stable(0)));
}
