#include "nwsteiner/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace nwsteiner {

std::vector<VertexId> DistanceMap::pathTo(VertexId v) const {
  std::vector<VertexId> path;
  if (!dist.at(v).isFinite()) return path;
  std::optional<VertexId> cur = v;
  while (cur) {
    path.push_back(*cur);
    cur = pred[*cur];
  }
  return path;
}

DistanceMap shortestPaths(const Instance& instance, const CostFunction& costFn, std::span<const VertexId> sources) {
  if (sources.empty()) throw PreconditionError("shortestPaths needs at least one source");
  const std::size_t n = instance.numVertices();
  DistanceMap out;
  out.sources.assign(sources.begin(), sources.end());
  std::sort(out.sources.begin(), out.sources.end());
  out.sources.erase(std::unique(out.sources.begin(), out.sources.end()), out.sources.end());
  out.dist.assign(n, Distance::infinity());
  out.pred.assign(n, std::nullopt);

  // Ordered set keyed on (distance, vertex) so ties settle by vertex id.
  std::set<std::pair<Rational, VertexId>> queue;
  for (VertexId s : out.sources) {
    Rational seed = costFn(s);
    out.dist[s] = seed;
    queue.emplace(seed, s);
  }
  std::vector<bool> settled(n, false);
  while (!queue.empty()) {
    auto [d, u] = *queue.begin();
    queue.erase(queue.begin());
    if (settled[u]) continue;
    settled[u] = true;
    for (VertexId w : instance.neighbors(u)) {
      if (settled[w]) continue;
      Rational candidate = d + costFn(w);
      if (!out.dist[w].isFinite() || candidate < out.dist[w].value()) {
        if (out.dist[w].isFinite()) queue.erase({out.dist[w].value(), w});
        out.dist[w] = candidate;
        out.pred[w] = u;
        queue.emplace(std::move(candidate), w);
      }
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> componentsWithin(const Instance& instance, const std::vector<bool>& members) {
  const std::size_t n = instance.numVertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId start = 0; start < n; ++start) {
    if (!members[start] || seen[start]) continue;
    std::vector<VertexId> component;
    std::vector<VertexId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (VertexId w : instance.neighbors(u)) {
        if (members[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::vector<std::vector<VertexId>> zeroCostComponents(const Instance& instance, const CostFunction& costFn) {
  std::vector<bool> zero(instance.numVertices());
  for (VertexId v = 0; v < instance.numVertices(); ++v) zero[v] = costFn.isZero(v);
  return componentsWithin(instance, zero);
}

Instance normalizeDemands(const Instance& instance) {
  Instance out = instance;
  if (instance.numDemands() == 0) return out;
  auto freshName = [&out](const std::string& base) {
    std::string candidate = base;
    for (int attempt = 0; out.findVertex(candidate); ++attempt) candidate = base + "_" + std::to_string(attempt);
    return candidate;
  };
  std::vector<Demand> rewired;
  for (DemandId i = 0; i < instance.numDemands(); ++i) {
    const Demand& d = instance.demand(i);
    VertexId s = out.addVertex(freshName("s" + std::to_string(i) + "@" + instance.name(d.s)), 0);
    out.addEdge(s, d.s);
    VertexId t = out.addVertex(freshName("t" + std::to_string(i) + "@" + instance.name(d.t)), 0);
    out.addEdge(t, d.t);
    rewired.push_back(Demand{s, t, d.penalty});
  }
  out.clearDemands();
  for (const auto& d : rewired) out.addDemand(d.s, d.t, d.penalty);
  return out;
}

Instance subdivideEdgeCosts(const EdgeWeightedInstance& input) {
  Instance out;
  for (VertexId v = 0; v < input.numVertices(); ++v) out.addVertex(input.names[v], 0, input.prizes[v]);
  for (std::size_t i = 0; i < input.edges.size(); ++i) {
    const auto& e = input.edges[i];
    std::string name = "e" + std::to_string(i) + ":" + input.names[e.u] + "-" + input.names[e.v];
    while (out.findVertex(name)) name += "'";
    VertexId x = out.addVertex(name, e.cost, 0);
    out.addEdge(e.u, x);
    out.addEdge(x, e.v);
  }
  for (const auto& d : input.demands) out.addDemand(d.s, d.t, d.penalty);
  out.setRoot(input.root);
  out.setBudget(input.budget);
  return out;
}

Subinstance inducedSubinstance(const Instance& instance, const std::vector<bool>& keep) {
  Subinstance sub;
  sub.local.assign(instance.numVertices(), std::nullopt);
  for (VertexId v = 0; v < instance.numVertices(); ++v) {
    if (!keep[v]) continue;
    sub.local[v] = sub.instance.addVertex(instance.name(v), instance.cost(v), instance.prize(v));
    sub.original.push_back(v);
  }
  for (auto [u, v] : instance.edges()) {
    if (sub.local[u] && sub.local[v]) sub.instance.addEdge(*sub.local[u], *sub.local[v]);
  }
  for (const auto& d : instance.demands()) {
    if (sub.local[d.s] && sub.local[d.t]) sub.instance.addDemand(*sub.local[d.s], *sub.local[d.t], d.penalty);
  }
  if (instance.root() && sub.local[*instance.root()]) sub.instance.setRoot(sub.local[*instance.root()]);
  sub.instance.setBudget(instance.budget());
  return sub;
}

bool isConnectedSet(const Instance& instance, std::span<const VertexId> vertices) {
  if (vertices.empty()) return true;
  std::vector<bool> members(instance.numVertices(), false);
  for (VertexId v : vertices) members.at(v) = true;
  std::vector<bool> seen(instance.numVertices(), false);
  std::vector<VertexId> stack{vertices.front()};
  seen[vertices.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId w : instance.neighbors(u)) {
      if (members[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (bool m : members) distinct += m ? 1 : 0;
  return reached == distinct;
}

Rational costOf(const Instance& instance, std::span<const VertexId> vertices) {
  Rational total = 0;
  for (VertexId v : vertices) total += instance.cost(v);
  return total;
}

Rational prizeOf(const Instance& instance, std::span<const VertexId> vertices) {
  Rational total = 0;
  for (VertexId v : vertices) total += instance.prize(v);
  return total;
}

}  // namespace nwsteiner
