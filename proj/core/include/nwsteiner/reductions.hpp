#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nwsteiner/instance.hpp"
#include "nwsteiner/oracle.hpp"
#include "nwsteiner/pendant.hpp"
#include "nwsteiner/rational.hpp"

/// Cost-preserving transformations among quota trees, rooted and unrooted
/// k-MST and k-Steiner trees. Pendant blow-ups are stored as counts in a
/// PendantInstance, so a transformed solution is a set of base vertices and
/// lifting it back keeps those vertices unchanged.
namespace nwsteiner::reductions {

enum class ReductionKind { KSteinerToKMst, RootedToUnrootedKMst, QuotaToKSteiner, KSteinerFromQuota };
std::string toString(ReductionKind kind);
std::optional<ReductionKind> reductionKindFromString(const std::string& text);

struct ReductionMap {
  ReductionKind kind = ReductionKind::KSteinerToKMst;
  PendantInstance transformed;
  oracle::TreeQuery query;  // the problem to solve on `transformed`
  std::uint64_t kPrime = 0;
  std::size_t originalVertices = 0;

  /// Original solution for a transformed one. Accepts base ids and, for
  /// materialized graphs, pendant ids (which are dropped). Sorted output.
  std::vector<VertexId> liftBack(std::span<const VertexId> transformedSolution) const;
};

/// n zero-cost pendants on every terminal, k-MST with k' = kn + k.
/// Throws PreconditionError when k exceeds the number of terminals.
ReductionMap kSteinerToKMst(const Instance& instance, const std::vector<VertexId>& terminals, std::uint64_t k);

/// n zero-cost pendants on the root, unrooted k-MST with k' = k + n. Every
/// feasible set then contains the root.
ReductionMap rootedToUnrootedKMst(const Instance& instance, VertexId root, std::uint64_t k);

/// Rooted k-MST solver used by unrootedViaRootedKMst: returns the optimum for
/// the given root or nullopt when infeasible.
using RootedKMstSolver =
    std::function<std::optional<oracle::TreeOptimum>(const Instance&, VertexId root, std::uint64_t k)>;

/// Minimum over all roots of the rooted k-MST value. The default solver is
/// the exact oracle.
std::optional<oracle::TreeOptimum> unrootedViaRootedKMst(const Instance& instance, std::uint64_t k,
                                                         const RootedKMstSolver& solver = {});

/// q(u) = ceil(n pi(u) / (eps P)) zero-cost terminal pendants on each u and
/// k = floor(n / eps). A k-Steiner tree lifted back has prize > P(1 - 2 eps),
/// and the k-Steiner optimum is at most the quota optimum.
/// Throws PreconditionError unless P > 0 and 0 < eps < 1.
ReductionMap quotaToKSteiner(const Instance& instance, const Rational& P, const Rational& epsilon);

/// Quota instance with prize 1 on terminals, 0 elsewhere, and quota k.
ReductionMap kSteinerFromQuota(const Instance& instance, const std::vector<VertexId>& terminals, std::uint64_t k);

}  // namespace nwsteiner::reductions
