#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nwsteiner/instance.hpp"
#include "nwsteiner/rational.hpp"

namespace nwsteiner {

/// Node-weighted shortest-path distances from a source set. The length of a
/// path counts the cost of every vertex on it, both endpoints included, so a
/// source s is at distance costFn(s).
struct DistanceMap {
  std::vector<VertexId> sources;
  std::vector<Distance> dist;
  std::vector<std::optional<VertexId>> pred;

  /// Vertices from v back to the source that realizes dist[v] (v first).
  /// Empty when v is unreachable.
  std::vector<VertexId> pathTo(VertexId v) const;
};

DistanceMap shortestPaths(const Instance& instance, const CostFunction& costFn, std::span<const VertexId> sources);

/// Maximal connected vertex sets of the subgraph induced by the zero-cost
/// vertices. Each set is sorted; sets are ordered by smallest member.
std::vector<std::vector<VertexId>> zeroCostComponents(const Instance& instance, const CostFunction& costFn);

/// Attaches a fresh zero-cost leaf to each endpoint of every demand and moves
/// the demand onto the two new leaves. Terminals become pairwise distinct
/// degree-1 vertices of cost zero; optimal prize-collecting costs are unchanged.
Instance normalizeDemands(const Instance& instance);

/// Replaces every edge (u,v) of cost w by a path u - x - v where x is a new
/// vertex of cost w and prize 0. Original vertices keep their ids and get cost
/// 0; the vertex for edge i has id numVertices() + i. Parallel edges of the
/// input are fine since each becomes its own subdivision vertex.
Instance subdivideEdgeCosts(const EdgeWeightedInstance& input);

/// Subgraph induced by `keep`, with vertex ids renumbered densely. Demands
/// with a dropped endpoint are dropped; root and budget are carried over when
/// the root survives.
struct Subinstance {
  Instance instance;
  std::vector<VertexId> original;  // new id -> id in the parent instance
  std::vector<std::optional<VertexId>> local;  // parent id -> new id
};
Subinstance inducedSubinstance(const Instance& instance, const std::vector<bool>& keep);

/// Connected components of the subgraph induced by `members`.
std::vector<std::vector<VertexId>> componentsWithin(const Instance& instance, const std::vector<bool>& members);

bool isConnectedSet(const Instance& instance, std::span<const VertexId> vertices);

Rational costOf(const Instance& instance, std::span<const VertexId> vertices);
Rational prizeOf(const Instance& instance, std::span<const VertexId> vertices);

}  // namespace nwsteiner
