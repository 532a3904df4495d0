#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nwsteiner/graph.hpp"
#include "nwsteiner/instance.hpp"
#include "nwsteiner/rational.hpp"

/// Primal-dual prize-collecting Steiner forest on node-weighted graphs.
///
/// Each iteration grows one dual disk per core at a common radius until either
/// a core exhausts its penalty budget or a vertex becomes tight for two or
/// more disks. The first case pays the penalties of the demands leaving that
/// core; the second buys shortest paths from the tight vertex to every disk
/// touching it. No moats are merged and nothing is pruned afterwards. The
/// per-iteration records form a certificate of the 2 H_{2h} guarantee.
namespace nwsteiner::pcsf {

using CoreId = std::size_t;

/// Zero-cost component (under the current cost function) holding at least
/// one endpoint of an active demand.
struct Core {
  CoreId id = 0;
  std::vector<VertexId> vertices;
  VertexId center = 0;  // lowest-id terminal in the core
  Rational penaltyBudget;  // half the penalty of active demands leaving the core
};

/// Simultaneous disk-growth state of one iteration. The dual solution is kept
/// implicit: disk k charges vertex v exactly
///   clamp(R - (d_k(v) - c(v)), 0, c(v))
/// at radius R, where d_k is the node-weighted distance from core k.
struct DiskSystem {
  std::size_t iteration = 0;
  CostFunction costFn;
  std::vector<DemandId> activeDemands;
  std::vector<Core> cores;
  std::vector<DistanceMap> distFromCore;
  std::vector<std::optional<CoreId>> coreOf;  // per vertex
  std::optional<Rational> radius;

  /// d_k(v) - c(v): the radius at which disk k starts charging v.
  Distance touchRadius(CoreId k, VertexId v) const;
  /// Charge disk k puts on the C1 constraint of v at the given radius.
  Rational charge(CoreId k, VertexId v, const Rational& radius) const;
};

struct PenaltyTight {
  CoreId core = 0;
};
struct VertexTight {
  VertexId vertex = 0;
  std::vector<CoreId> chargingCores;
};

struct GrowthEvent {
  std::variant<PenaltyTight, VertexTight> kind;
  Rational radius;

  bool isPenalty() const { return std::holds_alternative<PenaltyTight>(kind); }
};

struct EventOutcome {
  std::vector<VertexId> boughtDelta;
  std::vector<DemandId> deactivated;
  std::vector<DemandId> satisfied;  // subset of deactivated whose endpoints got connected
  std::size_t coresRemoved = 0;
  Rational payment;
};

enum class EventKind { Penalty, Vertex };
std::string toString(EventKind kind);

struct CertificateRound {
  std::size_t coreCount = 0;
  Rational radius;
  std::size_t coresRemoved = 0;
  Rational payment;
  EventKind kind = EventKind::Penalty;
  VertexId target = 0;  // center of the core for penalty rounds, tight vertex otherwise
  std::vector<VertexId> bought;
  std::vector<DemandId> deactivated;
};

struct DualCertificate {
  std::vector<CertificateRound> rounds;
  Rational totalCost;
  Rational totalPenaltyPaid;

  /// max_i R_i |T_i|, a lower bound on the LP optimum by weak duality.
  Rational lowerBound() const;
  Rational totalPayment() const;
};

struct PcsfSolution {
  std::vector<VertexId> bought;  // non-terminal vertices X
  std::vector<DemandId> satisfiedDemands;
  std::vector<DemandId> paidDemands;
  Rational objective;
};

struct PcsfResult {
  PcsfSolution solution;
  DualCertificate certificate;
};

/// Cost function, cores and per-core distances for one iteration. Terminals
/// and boughtSoFar are zeroed. Throws PreconditionError if `active` is empty
/// or an active demand already has both endpoints in one core.
DiskSystem buildIteration(const Instance& instance, std::span<const VertexId> boughtSoFar,
                          std::span<const DemandId> active, std::size_t iteration = 1);

/// Smallest radius at which the union of disks stops being dual feasible.
/// Penalty events win ties against vertex events, then lowest id.
GrowthEvent nextEvent(const DiskSystem& sys);

/// Radius at which vertex v becomes over-tight, if at least two disks reach it.
std::optional<Rational> vertexEventRadius(const DiskSystem& sys, VertexId v);

EventOutcome applyEvent(const Instance& instance, const DiskSystem& sys, const GrowthEvent& event);

/// C1 and C2 of the simplified dual for the union of disks of the given radius.
bool verifyDualFeasibility(const DiskSystem& sys, const Rational& radius);

PcsfResult solvePcsf(const Instance& instance);

/// Replays a certificate against the instance: every round is rebuilt with
/// buildIteration and must reproduce the recorded core count, event, radius,
/// purchases, deactivations and payment. Also checks that the radius is the
/// largest feasible one, P_i <= 2 h_i R_i, that the demands end up inactive,
/// and the final totals. Returns the failed checks (empty when valid).
std::vector<std::string> checkCertificate(const Instance& instance, const DualCertificate& certificate,
                                          const Rational& objective, const Rational& lowerBound);

/// Objective of a vertex set: cost of its non-terminal vertices plus penalties
/// of demands whose endpoints are disconnected in G[X + terminals].
Rational pcsfObjective(const Instance& instance, std::span<const VertexId> bought);

/// Prize-collecting Steiner tree as the special case of demands sharing the
/// root: one demand (root, v) with penalty prize(v) per other vertex with
/// positive prize. Existing demands are discarded.
Instance pcstInstance(const Instance& instance, VertexId root);

}  // namespace nwsteiner::pcsf
