#include <gtest/gtest.h>

#include "nwsteiner/graph.hpp"
#include "nwsteiner/instance_gen.hpp"
#include "nwsteiner/oracle.hpp"
#include "nwsteiner/reductions.hpp"
#include "test_support.hpp"

namespace nwsteiner {
namespace {

using namespace reductions;

Instance isolated(std::size_t n) {
  Instance g;
  for (std::size_t i = 0; i < n; ++i) g.addVertex("v" + std::to_string(i), 1);
  return g;
}

std::vector<VertexId> pickTerminals(const Instance& g, gen::Rng& rng) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.numVertices(); ++v) {
    if (rng.percent(50)) out.push_back(v);
  }
  if (out.empty()) out.push_back(0);
  return out;
}

std::optional<oracle::TreeOptimum> solve(const PendantInstance& p, oracle::TreeVariant variant, std::uint64_t k,
                                         Rational quota = 0, std::optional<VertexId> root = std::nullopt) {
  oracle::TreeQuery q;
  q.variant = variant;
  q.k = k;
  q.quota = std::move(quota);
  q.root = root;
  return oracle::exactQuotaKmst(p, q);
}

TEST(ReductionKindTest, NamesRoundTrip) {
  for (auto kind : {ReductionKind::KSteinerToKMst, ReductionKind::RootedToUnrootedKMst, ReductionKind::QuotaToKSteiner,
                    ReductionKind::KSteinerFromQuota}) {
    EXPECT_EQ(reductionKindFromString(toString(kind)), kind);
  }
  EXPECT_FALSE(reductionKindFromString("nope").has_value());
}

TEST(KSteinerToKMstTest, PendantCountsAndKPrime) {
  auto map = kSteinerToKMst(isolated(5), {0, 3, 3}, 2);
  EXPECT_EQ(map.kPrime, 12u);
  EXPECT_EQ(map.transformed.pendants, (std::vector<std::uint64_t>{5, 0, 0, 5, 0}));
  EXPECT_EQ(map.query.variant, oracle::TreeVariant::KMst);
  EXPECT_EQ(kSteinerToKMst(isolated(5), {1}, 1).kPrime, 6u);
  EXPECT_THROW(kSteinerToKMst(isolated(5), {0, 3}, 3), PreconditionError);
}

TEST(KSteinerToKMstTest, OptimaAgreeOnSmallGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 1, 8));
    gen::Rng rng(seed);
    auto terminals = pickTerminals(g, rng);
    const std::uint64_t k = 1 + rng.below(terminals.size());
    auto before = solve(PendantInstance::withTerminals(g, terminals), oracle::TreeVariant::KSteiner, k);
    auto map = kSteinerToKMst(g, terminals, k);
    auto after = oracle::exactQuotaKmst(map.transformed, map.query);
    ASSERT_EQ(before.has_value(), after.has_value()) << "seed " << seed;
    if (!before) continue;
    EXPECT_EQ(before->value, after->value) << "seed " << seed;
    auto lifted = map.liftBack(after->vertices);
    EXPECT_EQ(costOf(g, lifted), after->value);
    EXPECT_GE(PendantInstance::withTerminals(g, terminals).terminalCount(lifted), k);
  }
}

TEST(RootedToUnrootedTest, PendantsOnTheRoot) {
  auto map = rootedToUnrootedKMst(isolated(6), 2, 3);
  EXPECT_EQ(map.kPrime, 9u);
  EXPECT_EQ(map.transformed.pendants[2], 6u);
  EXPECT_FALSE(map.transformed.graph.root().has_value());
}

TEST(RootedToUnrootedTest, OptimaAgreeAndSolutionsContainTheRoot) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 1, 8));
    gen::Rng rng(seed);
    const VertexId root = rng.below(g.numVertices());
    const std::uint64_t k = rng.below(g.numVertices() + 1);
    auto before = solve(PendantInstance::plain(g), oracle::TreeVariant::KMst, k, 0, root);
    auto map = rootedToUnrootedKMst(g, root, k);
    auto after = oracle::exactQuotaKmst(map.transformed, map.query);
    ASSERT_EQ(before.has_value(), after.has_value()) << "seed " << seed;
    if (!before) continue;
    EXPECT_EQ(before->value, after->value) << "seed " << seed;
    auto lifted = map.liftBack(after->vertices);
    EXPECT_TRUE(std::binary_search(lifted.begin(), lifted.end(), root));
  }
}

TEST(UnrootedViaRootedTest, MinimumOverRoots) {
  Instance one;
  one.addVertex("a", 4);
  EXPECT_EQ(unrootedViaRootedKMst(one, 1)->value, Rational(4));
  Instance two;
  two.addVertex("a", 4);
  two.addVertex("b", 1);
  two.addEdge(0, 1);
  auto best = unrootedViaRootedKMst(two, 1);
  EXPECT_EQ(best->value, Rational(1));
  EXPECT_EQ(best->vertices, (std::vector<VertexId>{1}));
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 1, 8));
    const std::uint64_t k = 1 + seed % g.numVertices();
    auto direct = solve(PendantInstance::plain(g), oracle::TreeVariant::KMst, k);
    auto viaRoots = unrootedViaRootedKMst(g, k);
    ASSERT_EQ(direct.has_value(), viaRoots.has_value());
    if (direct) EXPECT_EQ(direct->value, viaRoots->value) << "seed " << seed;
  }
}

TEST(QuotaToKSteinerTest, PendantFormula) {
  Instance g;
  for (int i = 0; i < 4; ++i) g.addVertex("v" + std::to_string(i), 1, 2);
  auto map = quotaToKSteiner(g, Rational(8), Rational(1, 2));
  EXPECT_EQ(map.transformed.pendants, (std::vector<std::uint64_t>{2, 2, 2, 2}));
  EXPECT_EQ(map.kPrime, 8u);
  EXPECT_TRUE(map.transformed.pendantsAreTerminals);
  EXPECT_EQ(map.query.variant, oracle::TreeVariant::KSteiner);
  EXPECT_THROW(quotaToKSteiner(g, Rational(0), Rational(1, 2)), PreconditionError);
  EXPECT_THROW(quotaToKSteiner(g, Rational(8), Rational(1)), PreconditionError);
}

TEST(QuotaToKSteinerTest, ZeroPrizesGiveNoPendants) {
  auto map = quotaToKSteiner(isolated(3), Rational(5), Rational(1, 3));
  EXPECT_EQ(map.transformed.pendants, (std::vector<std::uint64_t>{0, 0, 0}));
  EXPECT_EQ(map.kPrime, 9u);
  EXPECT_FALSE(oracle::exactQuotaKmst(map.transformed, map.query).has_value());
}

TEST(QuotaToKSteinerTest, LiftedPrizeAndCostSandwich) {
  const Rational epsilons[] = {Rational(1, 2), Rational(1, 3), Rational(1, 5)};
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 1, 8));
    const Rational total = prizeOf(g, testing::allVertices(g));
    if (total == 0) continue;
    const Rational P = total * Rational(1 + static_cast<long>(seed % 3), 4);
    const Rational eps = epsilons[seed % 3];
    auto map = quotaToKSteiner(g, P, eps);
    auto steiner = oracle::exactQuotaKmst(map.transformed, map.query);
    auto quota = solve(PendantInstance::plain(g), oracle::TreeVariant::Quota, 0, P);
    ASSERT_TRUE(quota);
    ASSERT_TRUE(steiner) << "seed " << seed;
    ++solved;
    auto lifted = map.liftBack(steiner->vertices);
    EXPECT_GT(prizeOf(g, lifted), P * (1 - 2 * eps)) << "seed " << seed;
    EXPECT_LE(steiner->value, quota->value) << "seed " << seed;
    auto relaxed = solve(PendantInstance::plain(g), oracle::TreeVariant::Quota, 0, P * (1 - 2 * eps));
    EXPECT_GE(steiner->value, relaxed->value) << "seed " << seed;
  }
  EXPECT_GT(solved, 40);
}

TEST(KSteinerFromQuotaTest, UnitPrizesOnTerminals) {
  Instance g = isolated(4);
  g.setPrize(1, 7);
  auto map = kSteinerFromQuota(g, {0, 2}, 2);
  EXPECT_EQ(map.transformed.graph.prize(0), Rational(1));
  EXPECT_EQ(map.transformed.graph.prize(1), Rational(0));
  EXPECT_EQ(map.query.quota, Rational(2));
  EXPECT_EQ(map.query.variant, oracle::TreeVariant::Quota);
}

TEST(KSteinerFromQuotaTest, OptimaAgreeOnSmallGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 1, 8));
    gen::Rng rng(seed * 3);
    auto terminals = pickTerminals(g, rng);
    const std::uint64_t k = rng.below(terminals.size() + 1);
    auto before = solve(PendantInstance::withTerminals(g, terminals), oracle::TreeVariant::KSteiner, k);
    auto map = kSteinerFromQuota(g, terminals, k);
    auto after = oracle::exactQuotaKmst(map.transformed, map.query);
    ASSERT_EQ(before.has_value(), after.has_value()) << "seed " << seed;
    if (before) EXPECT_EQ(before->value, after->value) << "seed " << seed;
  }
}

TEST(CompositionTest, UnrootedKMstThroughRootedChainToQuota) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance g = gen::genRandom(testing::smallParams(seed, 1, 7));
    const std::uint64_t k = 1 + seed % g.numVertices();
    auto direct = solve(PendantInstance::plain(g), oracle::TreeVariant::KMst, k);
    std::optional<Rational> chained;
    for (VertexId r = 0; r < g.numVertices(); ++r) {
      auto map = rootedToUnrootedKMst(g, r, k);
      auto viaPendants = oracle::exactQuotaKmst(map.transformed, map.query);
      if (viaPendants && (!chained || viaPendants->value < *chained)) chained = viaPendants->value;
    }
    auto quotaMap = kSteinerFromQuota(g, testing::allVertices(g), k);
    auto viaQuota = oracle::exactQuotaKmst(quotaMap.transformed, quotaMap.query);
    ASSERT_TRUE(direct && chained && viaQuota) << "seed " << seed;
    EXPECT_EQ(direct->value, *chained) << "seed " << seed;
    EXPECT_EQ(direct->value, viaQuota->value) << "seed " << seed;
  }
}

}  // namespace
}  // namespace nwsteiner
