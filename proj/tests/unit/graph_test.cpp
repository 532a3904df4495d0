#include <gtest/gtest.h>

#include <algorithm>

#include "nwsteiner/graph.hpp"
#include "nwsteiner/instance.hpp"
#include "nwsteiner/rational.hpp"
#include "test_support.hpp"

namespace nwsteiner {
namespace {

TEST(RationalTest, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(parseRational("3/6"), Rational(1, 2));
  EXPECT_EQ(parseRational("-7"), Rational(-7));
  EXPECT_EQ(parseRational("0.125"), Rational(1, 8));
  EXPECT_EQ(parseRational("-3.5e2"), Rational(-350));
  EXPECT_EQ(parseRational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parseRational("  2/4 "), Rational(1, 2));
  EXPECT_EQ(parseRational("0.1"), Rational(1, 10));
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_THROW(parseRational(""), ParseError);
  EXPECT_THROW(parseRational("1/0"), ParseError);
  EXPECT_THROW(parseRational("abc"), ParseError);
  EXPECT_THROW(parseRational("1.2.3"), ParseError);
}

TEST(RationalTest, CanonicalStrings) {
  EXPECT_EQ(toString(Rational(4, 2)), "2");
  EXPECT_EQ(toString(Rational(6, 4)), "3/2");
  EXPECT_EQ(toString(Rational(-1, 3)), "-1/3");
}

TEST(RationalTest, HarmonicNumbers) {
  EXPECT_EQ(harmonic(0), Rational(0));
  EXPECT_EQ(harmonic(1), Rational(1));
  EXPECT_EQ(harmonic(4), Rational(25, 12));
}

TEST(DistanceTest, InfinityOrdersAboveEveryValue) {
  Distance inf = Distance::infinity();
  EXPECT_LT(Distance{Rational(1000)}, inf);
  EXPECT_EQ(inf + Rational(3), inf);
  EXPECT_EQ(Distance{Rational(1)} + Rational(1, 2), Distance{Rational(3, 2)});
  EXPECT_THROW((void)inf.value(), std::logic_error);
  EXPECT_EQ(toString(inf), "inf");
}

TEST(InstanceTest, RejectsBadEdgesAndDemands) {
  Instance g;
  g.addVertex("a", 1);
  g.addVertex("b", 2);
  g.addEdge(0, 1);
  EXPECT_THROW(g.addEdge(0, 1), PreconditionError);
  EXPECT_THROW(g.addEdge(1, 0), PreconditionError);
  EXPECT_THROW(g.addEdge(0, 0), PreconditionError);
  EXPECT_THROW(g.addEdge(0, 5), PreconditionError);
  EXPECT_THROW(g.addDemand(0, 1, -1), PreconditionError);
  EXPECT_THROW(g.addVertex("a", 0), PreconditionError);
  EXPECT_THROW(g.setRoot(7), PreconditionError);
  EXPECT_THROW(g.setBudget(Rational(-1)), PreconditionError);
}

TEST(InstanceTest, TerminalsAreSortedDemandEndpoints) {
  Instance g;
  for (int i = 0; i < 4; ++i) g.addVertex("v" + std::to_string(i), 1);
  g.addDemand(3, 1, 2);
  g.addDemand(1, 2, 2);
  EXPECT_EQ(g.terminals(), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(g.totalCost(), Rational(4));
}

TEST(CostFunctionTest, ZeroedVerticesCostNothing) {
  Instance g;
  g.addVertex("a", 3);
  g.addVertex("b", 0);
  g.addVertex("c", 5);
  std::vector<VertexId> zero{2};
  CostFunction c(g, zero);
  EXPECT_EQ(c(0), Rational(3));
  EXPECT_EQ(c(2), Rational(0));
  EXPECT_TRUE(c.isZero(1));
  EXPECT_FALSE(c.isZeroed(1));
  std::vector<VertexId> more{0};
  EXPECT_EQ(c.withZeroed(more).zeroedVertices(), (std::vector<VertexId>{0, 2}));
}

// All-pairs node-weighted distances by Floyd-Warshall over vertex costs.
std::vector<std::vector<Distance>> floydNodeWeighted(const Instance& g, const CostFunction& c) {
  const std::size_t n = g.numVertices();
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, Distance::infinity()));
  for (VertexId v = 0; v < n; ++v) d[v][v] = Distance{c(v)};
  for (const auto& [u, v] : g.edges()) {
    d[u][v] = Distance{c(u) + c(v)};
    d[v][u] = Distance{c(u) + c(v)};
  }
  for (VertexId k = 0; k < n; ++k) {
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = 0; j < n; ++j) {
        if (!d[i][k].isFinite() || !d[k][j].isFinite()) continue;
        Distance via = Distance{d[i][k].value() + d[k][j].value() - c(k)};
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

TEST(ShortestPathsTest, MatchesFloydWarshallOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto params = testing::smallParams(seed, 3, 12);
    params.connected = seed % 3 != 0;
    Instance g = gen::genRandom(params);
    CostFunction c(g);
    auto expected = floydNodeWeighted(g, c);
    for (VertexId s = 0; s < g.numVertices(); ++s) {
      std::vector<VertexId> source{s};
      DistanceMap map = shortestPaths(g, c, source);
      for (VertexId v = 0; v < g.numVertices(); ++v) {
        ASSERT_EQ(map.dist[v], expected[s][v]) << "seed " << seed << " from " << s << " to " << v;
        auto path = map.pathTo(v);
        if (!map.dist[v].isFinite()) {
          EXPECT_TRUE(path.empty());
          continue;
        }
        ASSERT_EQ(path.front(), v);
        ASSERT_EQ(path.back(), s);
        EXPECT_EQ(Distance{costOf(g, path)}, map.dist[v]);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(g.hasEdge(path[i], path[i + 1]));
      }
    }
  }
}

TEST(ShortestPathsTest, SourceSetTakesTheMinimum) {
  Instance g;
  for (int i = 0; i < 5; ++i) g.addVertex("p" + std::to_string(i), i + 1);
  for (VertexId i = 0; i + 1 < 5; ++i) g.addEdge(i, i + 1);
  std::vector<VertexId> sources{0, 4};
  auto map = shortestPaths(g, CostFunction(g), sources);
  EXPECT_EQ(map.dist[0], Distance{Rational(1)});
  EXPECT_EQ(map.dist[3], Distance{Rational(9)});
  EXPECT_EQ(map.dist[2], Distance{Rational(6)});  // 1+2+3 beats 5+4+3
}

TEST(ZeroCostComponentsTest, GroupsZeroVerticesOnly) {
  Instance g;
  g.addVertex("a", 0);
  g.addVertex("b", 0);
  g.addVertex("c", 1);
  g.addVertex("d", 0);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  g.addEdge(2, 3);
  auto comps = zeroCostComponents(g, CostFunction(g));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<VertexId>{3}));
  std::vector<VertexId> zero{2};
  EXPECT_EQ(zeroCostComponents(g, CostFunction(g, zero)).size(), 1u);
}

TEST(NormalizeDemandsTest, MovesDemandsOntoFreshLeaves) {
  Instance g;
  g.addVertex("a", 2);
  g.addVertex("b", 3);
  g.addEdge(0, 1);
  g.addDemand(0, 1, 7);
  g.addDemand(0, 1, 1);
  Instance h = normalizeDemands(g);
  ASSERT_EQ(h.numVertices(), 6u);
  ASSERT_EQ(h.numDemands(), 2u);
  std::vector<VertexId> seen;
  for (DemandId i = 0; i < 2; ++i) {
    const Demand& d = h.demand(i);
    EXPECT_EQ(d.penalty, g.demand(i).penalty);
    for (VertexId t : {d.s, d.t}) {
      EXPECT_GE(t, 2u);
      EXPECT_EQ(h.cost(t), Rational(0));
      EXPECT_EQ(h.neighbors(t).size(), 1u);
      seen.push_back(t);
    }
    EXPECT_TRUE(h.hasEdge(d.s, 0));
    EXPECT_TRUE(h.hasEdge(d.t, 1));
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
}

TEST(SubdivideTest, EdgeCostsBecomeMiddleVertices) {
  EdgeWeightedInstance ew;
  ew.addVertex("a", 1);
  ew.addVertex("b", 2);
  ew.addVertex("c");
  ew.addEdge(0, 1, 5);
  ew.addEdge(1, 2, Rational(1, 2));
  ew.addEdge(0, 1, 3);  // parallel
  ew.root = 0;
  Instance g = subdivideEdgeCosts(ew);
  ASSERT_EQ(g.numVertices(), 6u);
  EXPECT_EQ(g.numEdges(), 6u);
  EXPECT_EQ(g.cost(0), Rational(0));
  EXPECT_EQ(g.prize(1), Rational(2));
  EXPECT_EQ(g.cost(3), Rational(5));
  EXPECT_EQ(g.cost(4), Rational(1, 2));
  EXPECT_EQ(g.cost(5), Rational(3));
  EXPECT_TRUE(g.hasEdge(0, 5) && g.hasEdge(5, 1));
  EXPECT_EQ(g.root(), std::optional<VertexId>(0));
}

TEST(InducedSubinstanceTest, RenumbersAndKeepsSurvivingDemands) {
  Instance g;
  for (int i = 0; i < 4; ++i) g.addVertex("v" + std::to_string(i), i);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  g.addEdge(2, 3);
  g.addDemand(0, 2, 1);
  g.addDemand(1, 3, 1);
  g.setRoot(2);
  g.setBudget(Rational(9));
  Subinstance sub = inducedSubinstance(g, {true, false, true, true});
  EXPECT_EQ(sub.instance.numVertices(), 3u);
  EXPECT_EQ(sub.original, (std::vector<VertexId>{0, 2, 3}));
  EXPECT_FALSE(sub.local[1].has_value());
  EXPECT_EQ(sub.instance.numEdges(), 1u);
  EXPECT_EQ(sub.instance.numDemands(), 1u);
  EXPECT_EQ(sub.instance.root(), std::optional<VertexId>(1));
  EXPECT_EQ(sub.instance.budget(), std::optional<Rational>(9));
}

TEST(ConnectivityTest, ComponentsAndConnectedSets) {
  Instance g;
  for (int i = 0; i < 5; ++i) g.addVertex("v" + std::to_string(i), 1);
  g.addEdge(0, 1);
  g.addEdge(3, 4);
  auto comps = componentsWithin(g, {true, true, true, true, false});
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(comps[2], (std::vector<VertexId>{3}));
  std::vector<VertexId> a{0, 1};
  std::vector<VertexId> b{1, 3};
  EXPECT_TRUE(isConnectedSet(g, a));
  EXPECT_FALSE(isConnectedSet(g, b));
  EXPECT_EQ(costOf(g, b), Rational(2));
}

}  // namespace
}  // namespace nwsteiner
