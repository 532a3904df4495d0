#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nwsteiner/instance.hpp"
#include "nwsteiner/instance_gen.hpp"
#include "nwsteiner/pendant.hpp"
#include "nwsteiner/rational.hpp"

/// Exponential-time exact solvers and independent checkers. Everything here is
/// written without reusing the solver code paths so it can serve as ground
/// truth in tests.
namespace nwsteiner::oracle {

/// Limits every oracle checks before (vertex counts) and during (search
/// states, wall clock) its run.
struct OracleBudget {
  std::size_t maxVertices = 14;  // for subset-enumeration oracles
  std::size_t maxDemands = 4;
  std::size_t maxEnumerationVertices = 64;  // for connected-set enumeration
  std::uint64_t maxStates = 50'000'000;
  std::chrono::milliseconds timeLimit{120'000};

  /// Defaults, with maxVertices overridden by NWSTEINER_ORACLE_MAX_VERTICES
  /// and maxDemands by NWSTEINER_ORACLE_MAX_DEMANDS when set.
  static OracleBudget fromEnvironment();
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- PCSF

struct PcsfOptimum {
  Rational objective;
  std::vector<VertexId> bought;  // non-terminal vertices
};

/// Minimum of cost(X \ terminals) + penalties of demands disconnected in
/// G[X + terminals] over all vertex sets X. Include/exclude search with a
/// rollback union-find and cost pruning. The vertex limit applies to the
/// non-terminal vertices, which are the only ones enumerated.
PcsfOptimum exactPcsf(const Instance& instance, const OracleBudget& budget = {});
/// Same optimum by plain bitmask enumeration and BFS per subset.
PcsfOptimum exactPcsfBySubsets(const Instance& instance, const OracleBudget& budget = {});

// ---------------------------------------------------------------- trees

struct TreeOptimum {
  Rational value;  // prize for budgeted, cost for quota/k-MST, net worth
  std::vector<VertexId> vertices;  // sorted base vertices
};

/// Maximum prize over connected vertex sets (containing the root when given)
/// of cost at most B. The empty set is allowed when unrooted, so the result
/// always exists; it is nullopt only when the root alone exceeds B.
/// Connected-set enumeration with cost pruning.
std::optional<TreeOptimum> exactBudgeted(const Instance& instance, std::optional<VertexId> root,
                                         const Rational& B, const OracleBudget& budget = {});
std::optional<TreeOptimum> exactBudgetedBySubsets(const Instance& instance, std::optional<VertexId> root,
                                                  const Rational& B, const OracleBudget& budget = {});

enum class TreeVariant { KMst, KSteiner, Quota };
std::string toString(TreeVariant variant);

struct TreeQuery {
  TreeVariant variant = TreeVariant::KMst;
  std::uint64_t k = 0;  // vertex count (KMst) or terminal count (KSteiner)
  Rational quota;       // prize target (Quota)
  std::optional<VertexId> root;
};

/// Minimum cost of a connected base set meeting the query, pendants counted
/// through their multiplicities. Cost is the sum of base vertex costs (the
/// pendants are free). nullopt when infeasible. An empty set is considered
/// only for unrooted queries whose target is already met by nothing.
std::optional<TreeOptimum> exactQuotaKmst(const PendantInstance& instance, const TreeQuery& query,
                                          const OracleBudget& budget = {});
std::optional<TreeOptimum> exactQuotaKmstBySubsets(const PendantInstance& instance, const TreeQuery& query,
                                                   const OracleBudget& budget = {});

/// Maximum prize minus cost over connected vertex sets containing the root,
/// or over all nonempty connected sets when unrooted.
TreeOptimum exactNetWorth(const Instance& instance, std::optional<VertexId> root, const OracleBudget& budget = {});

/// Net worth on an edge-weighted graph: every vertex set containing the root
/// is scored by its prize minus the minimum spanning tree weight of the
/// subgraph it induces. Equals exactNetWorth on the subdivided encoding and
/// scales to the hardness gadgets.
TreeOptimum exactNetWorthEdgeWeighted(const EdgeWeightedInstance& instance, std::optional<VertexId> root,
                                      const OracleBudget& budget = {});

bool bruteForceSatisfiable(const gen::CnfFormula& formula);

// ---------------------------------------------------------------- duals

struct DiskSpec {
  VertexId center = 0;  // the disk grows from the zero-cost component of this vertex
  Rational radius;
};

/// One disk's growth replayed step by step: the sets S it assigns positive
/// y(S) to, in growth order (each strictly contains the previous).
struct DiskReplay {
  VertexId center = 0;
  std::vector<VertexId> core;
  struct Step {
    std::vector<bool> members;
    Rational y;
    Rational grownBefore;  // total y of earlier steps
  };
  std::vector<Step> steps;
  std::vector<Rational> load;  // per vertex: sum of y(S) over S with v in boundary(S)
  std::vector<bool> inside;    // absorbed before the radius was reached
  Rational grown;              // sum of all y
  bool leftFamily = false;     // absorbed a vertex of another core
};

struct LaminarReport {
  bool feasible = false;
  bool c1 = false;
  bool c2 = false;
  std::vector<DiskReplay> disks;
  std::vector<std::string> violations;
};

/// Rebuilds the nested set family of every disk by replaying the growth
/// process (absorb tight vertices, raise y of the current set until the next
/// vertex gets tight or the radius is reached) and checks the simplified dual
/// set by set:
///   C1  for every v: sum over disks of y(S) with v in boundary(S) <= c(v)
///   C2  for every recorded S: sum of y(S') over core(S) <= S' <= S is at most
///       half the penalty of the given demands separated by S.
LaminarReport checkLaminarDual(const Instance& instance, const CostFunction& costFn,
                               std::span<const Demand> demands, std::span<const DiskSpec> disks,
                               const OracleBudget& budget = {});

/// Identities the replay must satisfy for a feasible family, with distances
/// recomputed by Bellman-Ford relaxation:
///   total y of each disk is its radius;
///   vertices inside a disk carry load exactly c(v);
///   every set with positive y holds the center and lies inside the continent;
///   a boundary vertex carries R - (d(v) - c(v)).
/// Returns the list of failed identities (empty when all hold).
std::vector<std::string> checkReplayIdentities(const Instance& instance, const CostFunction& costFn,
                                               const LaminarReport& report, std::span<const DiskSpec> disks);

// ---------------------------------------------------------------- validation

enum class ProblemKind { Pcsf, Budgeted, NetWorth };

struct ClaimedSolution {
  std::vector<VertexId> vertices;
  std::optional<Rational> objective;  // PCSF objective or net worth
  std::optional<Rational> cost;
  std::optional<Rational> prize;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
  Rational cost;
  Rational prize;
  Rational objective;
};

/// Independent recomputation of a solution's objective and constraints. For
/// Budgeted the instance's budget and root (when present) are enforced and
/// the vertices must induce a connected subgraph.
ValidationReport validateSolution(const Instance& instance, const ClaimedSolution& solution, ProblemKind kind);

}  // namespace nwsteiner::oracle
