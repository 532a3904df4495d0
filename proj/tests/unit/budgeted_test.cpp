#include <gtest/gtest.h>

#include <algorithm>

#include "nwsteiner/budgeted.hpp"
#include "nwsteiner/graph.hpp"
#include "nwsteiner/instance_gen.hpp"
#include "nwsteiner/oracle.hpp"
#include "test_support.hpp"

namespace nwsteiner {
namespace {

using budgeted::RootedTree;

Instance pathGraph(const std::vector<Rational>& costs, const std::vector<Rational>& prizes) {
  Instance g;
  for (std::size_t i = 0; i < costs.size(); ++i) g.addVertex("p" + std::to_string(i), costs[i], prizes[i]);
  for (VertexId i = 0; i + 1 < costs.size(); ++i) g.addEdge(i, i + 1);
  return g;
}

TEST(RootedTreeTest, FromVertexSetBuildsBfsParents) {
  Instance g = pathGraph({1, 2, 3, 4}, {4, 3, 2, 1});
  g.addEdge(0, 3);
  std::vector<VertexId> set{0, 1, 3};
  RootedTree t = RootedTree::fromVertexSet(g, 0, set);
  EXPECT_EQ(t.vertices, set);
  EXPECT_EQ(t.parent.at(1), 0u);
  EXPECT_EQ(t.parent.at(3), 0u);
  EXPECT_EQ(t.cost, Rational(7));
  EXPECT_EQ(t.prize, Rational(8));
  EXPECT_EQ(t.ratio(), std::optional<Rational>(Rational(8, 7)));
  EXPECT_TRUE(budgeted::isValidTree(g, t));
  std::vector<VertexId> broken{0, 2};
  EXPECT_THROW(RootedTree::fromVertexSet(g, 0, broken), PreconditionError);
  std::vector<VertexId> rootless{1, 2};
  EXPECT_THROW(RootedTree::fromVertexSet(g, 0, rootless), PreconditionError);
}

TEST(RootedTreeTest, ValidityRejectsFakeEdgesAndWrongTotals) {
  Instance g = pathGraph({1, 1, 1}, {0, 0, 0});
  RootedTree t = testing::wholeTree(g, 0);
  EXPECT_TRUE(budgeted::isValidTree(g, t));
  RootedTree fake = t;
  fake.parent[2] = 0;
  EXPECT_FALSE(budgeted::isValidTree(g, fake));
  RootedTree wrong = t;
  wrong.cost += 1;
  EXPECT_FALSE(budgeted::isValidTree(g, wrong));
}

TEST(MakeProperTest, KeepsVerticesWithinTheBudget) {
  Instance g = pathGraph({1, 2, 3, 4}, {0, 0, 0, 0});
  auto proper = budgeted::makeProper(g, 1, Rational(6));
  // distances from p1: p0 = 3, p1 = 2, p2 = 5, p3 = 9
  EXPECT_EQ(proper.original, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(proper.root, 1u);
  EXPECT_EQ(proper.instance.root(), std::optional<VertexId>(1));
  EXPECT_THROW(budgeted::makeProper(g, 3, Rational(3)), PreconditionError);
}

TEST(ClassifyTreeTest, FlatSaddledNeither) {
  Instance g = pathGraph({1, 2, 7, 1}, {0, 0, 0, 0});
  std::vector<VertexId> flat{0, 1};
  std::vector<VertexId> saddled{2, 3};
  std::vector<VertexId> neither{1, 2, 3};
  EXPECT_EQ(budgeted::classifyTree(g, flat, 10).kind, budgeted::TreeClassKind::Flat);
  auto s = budgeted::classifyTree(g, saddled, 10);
  EXPECT_EQ(s.kind, budgeted::TreeClassKind::Saddled);
  EXPECT_EQ(s.apex, std::optional<VertexId>(2));
  // apex 7 leaves (10-7)/2 = 3/2 for the others; p1 costs 2
  EXPECT_EQ(budgeted::classifyTree(g, neither, 10).kind, budgeted::TreeClassKind::Neither);
  EXPECT_EQ(budgeted::toString(s), "saddled");
}

TEST(GreedyPrefixTest, TakesLargestFirstUntilTheLowerBound) {
  std::vector<Rational> costs{1, 5, 3, 5};
  EXPECT_EQ(budgeted::greedyPrefix(costs, 6), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(budgeted::greedyPrefix(costs, 100), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(budgeted::greedyPrefix(costs, 0).empty());
}

TEST(GreedyPrefixTest, LandsBelowLowerPlusMaxItem) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> costs;
    Rational total = 0;
    Rational largest = 0;
    const std::uint64_t count = 1 + rng.below(8);
    for (std::uint64_t i = 0; i < count; ++i) {
      costs.push_back(rng.rational(0, 10, 4));
      total += costs.back();
      largest = std::max(largest, costs.back());
    }
    Rational lower = rng.rational(0, 30, 2);
    auto chosen = budgeted::greedyPrefix(costs, lower);
    Rational sum = 0;
    for (auto i : chosen) sum += costs[i];
    if (total >= lower) {
      EXPECT_GE(sum, lower);
      if (!chosen.empty() && lower > 0) EXPECT_LT(sum, lower + largest);
    } else {
      EXPECT_EQ(chosen.size(), costs.size());
    }
  }
}

TEST(TrimRootedTest, PreconditionsAreChecked) {
  Instance g = pathGraph({1, 1, 1}, {3, 3, 3});
  auto proper = budgeted::makeProper(g, 0, Rational(2));
  RootedTree t = testing::wholeTree(proper.instance, proper.root);
  EXPECT_THROW(budgeted::trimRooted(t, proper, Rational(100), Rational(1, 2)), PreconditionError);
  EXPECT_THROW(budgeted::trimRooted(t, proper, Rational(1), Rational(0)), PreconditionError);
  EXPECT_THROW(budgeted::trimRooted(t, proper, Rational(1), Rational(3, 2)), PreconditionError);
}

TEST(TrimRootedTest, PrunesWhileRatioAndLowerBoundAllow) {
  Instance g = pathGraph({1, 1, 1}, {3, 3, 3});
  auto proper = budgeted::makeProper(g, 0, Rational(3));
  RootedTree t = testing::wholeTree(proper.instance, proper.root);
  // Leaves p2 then p1 go: each removal keeps ratio 3 and cost >= 3/4.
  auto out = budgeted::trimRooted(t, proper, Rational(3), Rational(1, 2));
  EXPECT_EQ(out.vertices, (std::vector<VertexId>{0}));
}

TEST(TrimRootedTest, WindowAndRatioOnRandomTrees) {
  const Rational epsilons[] = {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 10)};
  int trimmedCount = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    gen::Rng rng(seed);
    Instance g = testing::randomTree(rng, 5 + rng.below(12), 6, 9, 1 + rng.below(3));
    const Rational eps = epsilons[seed % 5];
    const Rational B = g.totalCost() / (2 + rng.below(4)) + Rational(1, 2) + g.cost(0);
    auto proper = budgeted::makeProper(g, 0, B);
    RootedTree t = testing::wholeTree(proper.instance, proper.root);
    if (t.cost == 0 || t.cost < eps * B / 2) continue;
    const Rational gamma = t.prize / t.cost * Rational(1, 1 + static_cast<long>(rng.below(2)));
    auto out = budgeted::trimRooted(t, proper, gamma, eps);
    if (t.cost > (1 + eps) * B) ++trimmedCount;
    ASSERT_TRUE(budgeted::isValidTree(proper.instance, out)) << "seed " << seed;
    EXPECT_EQ(out.root, proper.root);
    EXPECT_GE(out.cost, eps * B / 2) << "seed " << seed;
    EXPECT_LE(out.cost, (1 + eps) * B) << "seed " << seed;
    EXPECT_GE(out.prize, eps * gamma / 4 * out.cost) << "seed " << seed;
  }
  EXPECT_GT(trimmedCount, 50);
}

TEST(TrimUnrootedTest, PreconditionsAreChecked) {
  Instance g = pathGraph({1, 4, 1}, {3, 3, 3});
  RootedTree t = testing::wholeTree(g, 0);
  EXPECT_THROW(budgeted::trimUnrooted(t, g, Rational(6)), PreconditionError);    // c(p1) > B/2
  EXPECT_THROW(budgeted::trimUnrooted(t, g, Rational(100)), PreconditionError);  // cost < B/2
}

TEST(TrimUnrootedTest, WindowAndRatioOnRandomTrees) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    gen::Rng rng(seed * 7919);
    const Rational B = rng.rational(4, 20, 2);
    Instance g;
    const std::size_t n = 3 + rng.below(14);
    for (std::size_t i = 0; i < n; ++i) {
      Rational c = rng.rational(0, 100, 1) * B / 200;  // at most B/2
      g.addVertex("t" + std::to_string(i), c, rng.rational(0, 9, 1 + rng.below(3)));
    }
    for (std::size_t i = 1; i < n; ++i) g.addEdge(rng.below(i), i);
    RootedTree t = testing::wholeTree(g, rng.below(n));
    if (t.cost * 2 < B) continue;
    auto out = budgeted::trimUnrooted(t, g, B);
    const Rational gamma = t.prize / t.cost;
    ASSERT_TRUE(budgeted::isValidTree(g, out)) << "seed " << seed;
    EXPECT_GE(out.cost * 4, B) << "seed " << seed;
    EXPECT_LE(out.cost, B) << "seed " << seed;
    EXPECT_GE(out.prize * 4, gamma * out.cost) << "seed " << seed;
    for (VertexId v : out.vertices) EXPECT_TRUE(t.contains(v));
  }
}

TEST(SplitTest, FlatAndSaddledPartsOnRandomTrees) {
  int split = 0;
  for (std::uint64_t seed = 1; seed <= 5000 && split < 100; ++seed) {
    gen::Rng rng(seed * 31);
    Instance g = testing::randomTree(rng, 2 + rng.below(9), 8, 9, 1);
    RootedTree t = testing::wholeTree(g, rng.below(g.numVertices()));
    const Rational B = t.cost + rng.below(3);
    if (B == 0) continue;
    if (budgeted::classifyTree(g, t.vertices, B).kind != budgeted::TreeClassKind::Neither) continue;
    auto parts = budgeted::splitFlatSaddled(g, t);
    ++split;
    EXPECT_EQ(parts.flatPart.size() + parts.saddledPart.size(), t.vertices.size());
    EXPECT_TRUE(isConnectedSet(g, parts.flatPart));
    EXPECT_TRUE(isConnectedSet(g, parts.saddledPart));
    EXPECT_EQ(budgeted::classifyTree(g, parts.flatPart, B).kind, budgeted::TreeClassKind::Flat);
    EXPECT_EQ(budgeted::classifyTree(g, parts.saddledPart, B).kind, budgeted::TreeClassKind::Saddled);
    EXPECT_GE(std::max(prizeOf(g, parts.flatPart), prizeOf(g, parts.saddledPart)) * 2, t.prize);
  }
  EXPECT_EQ(split, 100);
}

TEST(SolveRootedTest, ExactBackendGuaranteeAgainstOracle) {
  const Rational epsilons[] = {Rational(1), Rational(1, 2), Rational(1, 4)};
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 3, 11));
    const Rational B = g.totalCost() / 3 + g.cost(0);
    const Rational eps = epsilons[seed % 3];
    auto tree = budgeted::solveRootedBudgeted(g, 0, B, eps);
    auto opt = oracle::exactBudgeted(g, 0, B);
    ASSERT_TRUE(opt);
    EXPECT_TRUE(budgeted::isValidTree(g, tree));
    EXPECT_EQ(tree.root, 0u);
    EXPECT_LE(tree.cost, (1 + eps) * B) << "seed " << seed;
    EXPECT_GE(tree.prize, eps * eps / 16 * opt->value) << "seed " << seed;
  }
}

TEST(SolveRootedTest, RootCostingMoreThanBudgetIsRejected) {
  Instance g = pathGraph({5, 1}, {1, 1});
  EXPECT_THROW(budgeted::solveRootedBudgeted(g, 0, Rational(4), Rational(1, 2)), PreconditionError);
}

TEST(SolveUnrootedTest, ExactBackendGuaranteeAgainstOracle) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 2, 10));
    const Rational B = g.totalCost() / 3 + 1;
    bool anyAffordable = false;
    for (VertexId v = 0; v < g.numVertices(); ++v) anyAffordable = anyAffordable || g.cost(v) <= B;
    if (!anyAffordable) {
      EXPECT_THROW(budgeted::solveUnrootedBudgeted(g, B), InfeasibleError);
      continue;
    }
    auto tree = budgeted::solveUnrootedBudgeted(g, B);
    auto opt = oracle::exactBudgeted(g, std::nullopt, B);
    EXPECT_TRUE(budgeted::isValidTree(g, tree));
    EXPECT_LE(tree.cost, B) << "seed " << seed;
    EXPECT_GE(tree.prize * 64, opt->value) << "seed " << seed;
  }
}

TEST(SolveUnrootedTest, InfeasibleWhenEveryVertexIsTooExpensive) {
  Instance g = pathGraph({5, 6}, {1, 1});
  EXPECT_THROW(budgeted::solveUnrootedBudgeted(g, Rational(4)), InfeasibleError);
}

TEST(SolveUnrootedTest, SaddledOptimumIsFound) {
  // Only the expensive hub joins a and b; the flat search alone finds 10.
  Instance g;
  g.addVertex("hub", 9, 0);
  g.addVertex("a", 1, 10);
  g.addVertex("b", 1, 10);
  g.addEdge(0, 1);
  g.addEdge(0, 2);
  auto tree = budgeted::solveUnrootedBudgeted(g, Rational(11));
  EXPECT_LE(tree.cost, Rational(11));
  EXPECT_EQ(tree.prize, Rational(20));
}

TEST(LagrangianBackendTest, StaysWithinTheBudgetWindow) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 3, 12));
    const Rational B = g.totalCost() / 3 + g.cost(0);
    auto rooted = budgeted::solveRootedBudgeted(g, 0, B, Rational(1, 2), budgeted::Backend::Lagrangian);
    EXPECT_TRUE(budgeted::isValidTree(g, rooted));
    EXPECT_LE(rooted.cost, Rational(3, 2) * B);
    auto unrooted = budgeted::solveUnrootedBudgeted(g, B, budgeted::Backend::Lagrangian);
    EXPECT_TRUE(budgeted::isValidTree(g, unrooted));
    EXPECT_LE(unrooted.cost, B);
  }
}

}  // namespace
}  // namespace nwsteiner
