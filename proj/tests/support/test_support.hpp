#pragma once

#include <cstdint>
#include <vector>

#include "nwsteiner/budgeted.hpp"
#include "nwsteiner/instance.hpp"
#include "nwsteiner/instance_gen.hpp"

namespace nwsteiner::testing {

inline gen::RandomParams smallParams(std::uint64_t seed, std::size_t minVertices, std::size_t maxVertices) {
  gen::RandomParams params;
  params.seed = seed;
  params.vertices = minVertices + seed % (maxVertices - minVertices + 1);
  params.topology = seed % 4 == 0 ? gen::Topology::ErdosRenyi : gen::Topology::TreePlusChords;
  params.edgePercent = 35;
  params.chords = seed % 4;
  params.maxCost = 9;
  params.maxPrize = 9;
  params.costDenominator = seed % 5 == 0 ? 3 : 1;
  return params;
}

/// Random tree on n vertices: vertex i > 0 hangs off a uniformly chosen
/// earlier vertex. Costs in [0, maxCost] and prizes in [0, maxPrize], in steps of 1/den.
inline Instance randomTree(gen::Rng& rng, std::size_t n, long maxCost, long maxPrize, unsigned long den) {
  Instance g;
  for (std::size_t i = 0; i < n; ++i) {
    g.addVertex("t" + std::to_string(i), rng.rational(0, maxCost, den), rng.rational(0, maxPrize, den));
  }
  for (std::size_t i = 1; i < n; ++i) g.addEdge(rng.below(i), i);
  return g;
}

inline std::vector<VertexId> allVertices(const Instance& g) {
  std::vector<VertexId> out(g.numVertices());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

inline budgeted::RootedTree wholeTree(const Instance& g, VertexId root) {
  auto all = allVertices(g);
  return budgeted::RootedTree::fromVertexSet(g, root, all);
}

}  // namespace nwsteiner::testing
