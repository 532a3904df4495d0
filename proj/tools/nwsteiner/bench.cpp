#include "bench.hpp"

#include <ostream>
#include <stdexcept>

#include "nwsteiner/budgeted.hpp"
#include "nwsteiner/graph.hpp"
#include "nwsteiner/instance_gen.hpp"
#include "nwsteiner/oracle.hpp"
#include "nwsteiner/pcsf.hpp"

namespace nwsteiner::cli {

namespace {

std::pair<std::uint64_t, std::uint64_t> parseRange(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      auto single = std::stoull(text);
      return {single, single};
    }
    auto lo = std::stoull(text.substr(0, dots));
    auto hi = std::stoull(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty seed range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("seed range must look like a..b, got '" + text + "'");
  }
}

gen::RandomParams paramsFor(std::uint64_t seed, std::size_t maxVertices) {
  gen::RandomParams params;
  params.seed = seed;
  const std::size_t span = maxVertices > 3 ? maxVertices - 3 : 1;
  params.vertices = 4 + seed % span;
  params.chords = seed % 3;
  params.maxCost = 10;
  params.maxPrize = 10;
  return params;
}

bool pcsfRatio(std::uint64_t lo, std::uint64_t hi, std::size_t maxVertices, std::ostream& out) {
  bool allOk = true;
  out << "seed,vertices,demands,objective,optimum,lower_bound,bound,ok\n";
  for (std::uint64_t seed = lo; seed <= hi; ++seed) {
    auto params = paramsFor(seed, maxVertices);
    params.demands = 1 + seed % 3;
    Instance instance = normalizeDemands(gen::genRandom(params));
    auto result = pcsf::solvePcsf(instance);
    auto optimum = oracle::exactPcsf(instance);
    const Rational bound = 2 * harmonic(2 * instance.numDemands());
    const bool ok = result.solution.objective <= bound * optimum.objective &&
                    result.certificate.lowerBound() <= optimum.objective;
    allOk = allOk && ok;
    out << seed << ',' << params.vertices << ',' << instance.numDemands() << ','
        << toString(result.solution.objective) << ',' << toString(optimum.objective) << ','
        << toString(result.certificate.lowerBound()) << ',' << toString(bound) << ',' << (ok ? 1 : 0) << '\n';
  }
  return allOk;
}

bool budgetedSuite(std::uint64_t lo, std::uint64_t hi, std::size_t maxVertices, bool rooted, std::ostream& out) {
  bool allOk = true;
  out << "seed,vertices,budget,epsilon,cost,prize,optimum,required,ok\n";
  const Rational epsilons[] = {Rational(1), Rational(1, 2), Rational(1, 4)};
  for (std::uint64_t seed = lo; seed <= hi; ++seed) {
    auto params = paramsFor(seed, maxVertices);
    Instance instance = gen::genRandom(params);
    Rational B = instance.totalCost() / 3 + 1;
    Rational eps = epsilons[seed % 3];
    budgeted::RootedTree tree;
    std::optional<oracle::TreeOptimum> optimum;
    Rational required;
    bool ok = false;
    if (rooted) {
      if (instance.cost(0) > B) B = instance.cost(0);
      tree = budgeted::solveRootedBudgeted(instance, 0, B, eps);
      optimum = oracle::exactBudgeted(instance, 0, B);
      required = eps * eps / 16 * optimum->value;
      ok = tree.cost <= (1 + eps) * B && tree.prize >= required && tree.contains(0);
    } else {
      eps = 0;
      tree = budgeted::solveUnrootedBudgeted(instance, B);
      optimum = oracle::exactBudgeted(instance, std::nullopt, B);
      required = optimum->value / 64;
      ok = tree.cost <= B && tree.prize >= required;
    }
    ok = ok && isConnectedSet(instance, tree.vertices);
    allOk = allOk && ok;
    out << seed << ',' << params.vertices << ',' << toString(B) << ',' << toString(eps) << ',' << toString(tree.cost)
        << ',' << toString(tree.prize) << ',' << toString(optimum->value) << ',' << toString(required) << ','
        << (ok ? 1 : 0) << '\n';
  }
  return allOk;
}

bool gapSuite(std::uint64_t lo, std::uint64_t hi, std::ostream& out) {
  bool allOk = true;
  out << "k,B,fractional,integral,gap,flow_valid,ok\n";
  for (std::uint64_t k = std::max<std::uint64_t>(lo, 1); k <= hi; ++k) {
    auto gap = gen::genGapInstance(k, k);
    auto integral = oracle::exactBudgeted(gap.nodeWeighted, gap.nodeWeighted.root(), Rational(k));
    const bool flow = gen::verifyFlowSolution(gap);
    const Rational ratio = gap.fractionalValue / integral->value;
    const bool ok = flow && integral->value == 1 && ratio == Rational(k * k, 2 * k - 1);
    allOk = allOk && ok;
    out << k << ',' << k << ',' << toString(gap.fractionalValue) << ',' << toString(integral->value) << ','
        << toString(ratio) << ',' << (flow ? 1 : 0) << ',' << (ok ? 1 : 0) << '\n';
  }
  return allOk;
}

}  // namespace

bool runBench(const std::string& suite, const std::string& seeds, std::size_t maxVertices, std::ostream& out) {
  auto [lo, hi] = parseRange(seeds);
  if (suite == "pcsf-ratio") return pcsfRatio(lo, hi, maxVertices, out);
  if (suite == "budgeted-rooted") return budgetedSuite(lo, hi, maxVertices, true, out);
  if (suite == "budgeted-unrooted") return budgetedSuite(lo, hi, maxVertices, false, out);
  if (suite == "gap") return gapSuite(lo, hi, out);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace nwsteiner::cli
