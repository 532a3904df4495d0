#include "nwsteiner/pendant.hpp"

namespace nwsteiner {

PendantInstance PendantInstance::plain(const Instance& graph) {
  PendantInstance out;
  out.graph = graph;
  out.pendants.assign(graph.numVertices(), 0);
  out.terminal.assign(graph.numVertices(), false);
  return out;
}

PendantInstance PendantInstance::withTerminals(const Instance& graph, const std::vector<VertexId>& terminals) {
  PendantInstance out = plain(graph);
  for (VertexId t : terminals) out.terminal.at(t) = true;
  return out;
}

std::uint64_t PendantInstance::vertexCount(const std::vector<VertexId>& base) const {
  std::uint64_t count = 0;
  for (VertexId v : base) count += 1 + pendants[v];
  return count;
}

std::uint64_t PendantInstance::terminalCount(const std::vector<VertexId>& base) const {
  std::uint64_t count = 0;
  for (VertexId v : base) {
    count += terminal[v] ? 1 : 0;
    if (pendantsAreTerminals) count += pendants[v];
  }
  return count;
}

std::uint64_t PendantInstance::totalPendants() const {
  std::uint64_t total = 0;
  for (auto p : pendants) total += p;
  return total;
}

PendantInstance::Materialized PendantInstance::materialize() const {
  Materialized out{graph, terminal};
  for (VertexId v = 0; v < graph.numVertices(); ++v) {
    for (std::uint64_t i = 0; i < pendants[v]; ++i) {
      VertexId leaf = out.graph.addVertex(graph.name(v) + "#" + std::to_string(i), 0, 0);
      out.graph.addEdge(v, leaf);
      out.terminal.push_back(pendantsAreTerminals);
    }
  }
  return out;
}

}  // namespace nwsteiner
