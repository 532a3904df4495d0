#pragma once

#include <cstdint>
#include <vector>

#include "nwsteiner/instance.hpp"

namespace nwsteiner {

/// A graph plus, per vertex, a count of zero-cost pendant leaves hanging off
/// it. Blow-ups like "attach n zero-cost vertices to every terminal" are kept
/// as counts instead of explicit vertices. A solution is a connected set of
/// base vertices; it implicitly takes every pendant of every chosen vertex.
/// Solutions made of pendant leaves alone are not represented.
struct PendantInstance {
  Instance graph;
  std::vector<std::uint64_t> pendants;
  std::vector<bool> terminal;  // base vertices that count as terminals
  bool pendantsAreTerminals = false;

  static PendantInstance plain(const Instance& graph);
  static PendantInstance withTerminals(const Instance& graph, const std::vector<VertexId>& terminals);

  /// Vertex count of a base set including its pendants.
  std::uint64_t vertexCount(const std::vector<VertexId>& base) const;
  std::uint64_t terminalCount(const std::vector<VertexId>& base) const;
  std::uint64_t totalPendants() const;

  /// Explicit graph with every pendant created as a vertex (ids after the
  /// base vertices). Only sensible for tiny counts.
  struct Materialized {
    Instance graph;
    std::vector<bool> terminal;
  };
  Materialized materialize() const;
};

}  // namespace nwsteiner
