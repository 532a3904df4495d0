#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nwsteiner/instance.hpp"
#include "nwsteiner/rational.hpp"

namespace nwsteiner::gen {

/// Seeded generator. Uses mt19937_64 with plain modulo reduction instead of
/// the standard distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool percent(unsigned p) { return below(100) < p; }
  Rational rational(long lo, long hi, unsigned long denominator);

 private:
  std::mt19937_64 engine_;
};

/// Fractional solution of the path-flow LP for rooted budgeted trees.
struct FlowSolution {
  struct PathFlow {
    std::vector<VertexId> path;  // root first
    Rational value;
  };
  std::vector<PathFlow> paths;
  std::vector<Rational> edgeValue;  // x_e, indexed like the instance's edges
};

/// Path of B-1 unit edges from the root into the center of a k-leaf star.
/// Leaves carry prize 1; the budget is B. The integral optimum is 1 while the
/// flow LP reaches kB/(B+k-1).
struct GapInstance {
  std::uint64_t B = 0;
  std::uint64_t k = 0;
  EdgeWeightedInstance edgeWeighted;
  Instance nodeWeighted;  // subdivided encoding, same vertex ids for originals
  Rational fractionalValue;
  FlowSolution flow;
};

GapInstance genGapInstance(std::uint64_t B, std::uint64_t k);

/// Checks x_e >= flow through e towards each vertex, per-vertex inflow <= 1,
/// sum of cost(e) x_e <= budget, nonnegativity, that every path is a real
/// root path, and that the objective equals claimedValue.
bool verifyFlowSolution(const EdgeWeightedInstance& instance, VertexId root, const Rational& budget,
                        const FlowSolution& flow, const Rational& claimedValue);
bool verifyFlowSolution(const GapInstance& gap);

/// CNF formula with DIMACS-style literals (+v / -v, variables 1..n).
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;
};

/// Adds a clause (x or not x) for every variable lacking one, then repeats
/// the first tautology until there are at least n+1 clauses.
CnfFormula augmentFormula(const CnfFormula& formula, std::size_t* added = nullptr);

/// Four-layer net-worth gadget: root r (prize epsilon), bridge to r' of cost
/// mK-(n+1)-m, unit edges r'-literal and literal-clause, clause prize K.
/// Net worth is 1+epsilon for satisfiable formulas and at most epsilon
/// otherwise.
struct SatNwInstance {
  CnfFormula formula;  // after augmentation
  std::size_t addedClauses = 0;
  Rational epsilon;
  Rational K;
  EdgeWeightedInstance edgeWeighted;
  Instance nodeWeighted;
  VertexId root = 0;
};

SatNwInstance genSatNw(const CnfFormula& formula, const Rational& epsilon, const Rational& K);

enum class Topology { ErdosRenyi, TreePlusChords };

struct RandomParams {
  std::uint64_t seed = 1;
  std::size_t vertices = 8;
  Topology topology = Topology::TreePlusChords;
  unsigned edgePercent = 30;  // Erdos-Renyi edge probability, percent
  std::size_t chords = 2;     // extra edges on top of the random tree
  bool connected = true;
  long minCost = 0;
  long maxCost = 10;
  unsigned long costDenominator = 1;
  long minPrize = 0;
  long maxPrize = 10;
  std::size_t demands = 0;
  long minPenalty = 0;
  long maxPenalty = 20;
  bool rooted = false;  // root = vertex 0
  std::optional<Rational> budget;
};

Instance genRandom(const RandomParams& params);

}  // namespace nwsteiner::gen
