#include "nwsteiner/instance_gen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nwsteiner/graph.hpp"

namespace nwsteiner::gen {

Rational Rng::rational(long lo, long hi, unsigned long denominator) {
  if (denominator == 0) denominator = 1;
  long scaledLo = lo * static_cast<long>(denominator);
  long scaledHi = hi * static_cast<long>(denominator);
  Rational r(between(scaledLo, scaledHi), denominator);
  r.canonicalize();
  return r;
}

GapInstance genGapInstance(std::uint64_t B, std::uint64_t k) {
  if (B < 1 || k < 1) throw PreconditionError("gap instance needs B >= 1 and k >= 1");
  GapInstance gap;
  gap.B = B;
  gap.k = k;
  auto& g = gap.edgeWeighted;
  VertexId previous = g.addVertex("r", 0);
  std::vector<VertexId> spine{previous};
  for (std::uint64_t i = 1; i < B; ++i) {
    VertexId w = g.addVertex("w" + std::to_string(i), 0);
    g.addEdge(previous, w, 1);
    spine.push_back(w);
    previous = w;
  }
  const VertexId center = previous;
  std::vector<VertexId> leaves;
  for (std::uint64_t i = 1; i <= k; ++i) {
    VertexId u = g.addVertex("u" + std::to_string(i), 1);
    g.addEdge(center, u, 1);
    leaves.push_back(u);
  }
  g.root = 0;
  g.budget = Rational(static_cast<unsigned long>(B));
  gap.nodeWeighted = subdivideEdgeCosts(g);

  Rational share(static_cast<unsigned long>(B), static_cast<unsigned long>(B + k - 1));
  share.canonicalize();
  gap.flow.edgeValue.assign(g.edges.size(), share);
  for (VertexId u : leaves) {
    FlowSolution::PathFlow p;
    p.path = spine;
    p.path.push_back(u);
    p.value = share;
    gap.flow.paths.push_back(std::move(p));
  }
  gap.fractionalValue = share * static_cast<unsigned long>(k);
  return gap;
}

bool verifyFlowSolution(const EdgeWeightedInstance& instance, VertexId root, const Rational& budget,
                        const FlowSolution& flow, const Rational& claimedValue) {
  if (flow.edgeValue.size() != instance.edges.size()) return false;
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> edgeIndex;
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    const auto& edge = instance.edges[e];
    edgeIndex[{std::min(edge.u, edge.v), std::max(edge.u, edge.v)}].push_back(e);
    if (flow.edgeValue[e] < 0) return false;
  }
  // (vertex, edge) -> flow through the edge on paths ending at the vertex
  std::map<std::pair<VertexId, std::size_t>, Rational> through;
  std::map<VertexId, Rational> inflow;
  Rational objective = 0;
  for (const auto& p : flow.paths) {
    if (p.value < 0 || p.path.empty() || p.path.front() != root) return false;
    std::set<VertexId> seen(p.path.begin(), p.path.end());
    if (seen.size() != p.path.size()) return false;
    VertexId end = p.path.back();
    if (end >= instance.numVertices()) return false;
    for (std::size_t i = 0; i + 1 < p.path.size(); ++i) {
      VertexId a = p.path[i];
      VertexId b = p.path[i + 1];
      auto it = edgeIndex.find({std::min(a, b), std::max(a, b)});
      if (it == edgeIndex.end() || it->second.size() != 1) return false;
      through[{end, it->second.front()}] += p.value;
    }
    inflow[end] += p.value;
    objective += instance.prizes[end] * p.value;
  }
  for (const auto& [key, value] : through) {
    if (value > flow.edgeValue[key.second]) return false;  // (X)
  }
  for (const auto& [v, value] : inflow) {
    if (value > 1) return false;  // (F)
  }
  Rational spent = 0;
  for (std::size_t e = 0; e < instance.edges.size(); ++e) spent += instance.edges[e].cost * flow.edgeValue[e];
  if (spent > budget) return false;  // (B)
  return objective == claimedValue;
}

bool verifyFlowSolution(const GapInstance& gap) {
  return verifyFlowSolution(gap.edgeWeighted, 0, Rational(static_cast<unsigned long>(gap.B)), gap.flow,
                            gap.fractionalValue);
}

namespace {

bool isTautologyFor(const std::vector<int>& clause, int variable) {
  std::set<int> literals(clause.begin(), clause.end());
  return literals == std::set<int>{-variable, variable};
}

void validateFormula(const CnfFormula& formula) {
  if (formula.variables == 0) throw PreconditionError("formula has no variables");
  for (const auto& clause : formula.clauses) {
    if (clause.empty() || clause.size() > 3) throw PreconditionError("clauses must have 1 to 3 literals");
    for (int literal : clause) {
      auto variable = static_cast<std::size_t>(literal < 0 ? -literal : literal);
      if (literal == 0 || variable > formula.variables) throw PreconditionError("literal out of range");
    }
  }
}

}  // namespace

CnfFormula augmentFormula(const CnfFormula& formula, std::size_t* added) {
  validateFormula(formula);
  CnfFormula out = formula;
  std::size_t count = 0;
  for (std::size_t v = 1; v <= formula.variables; ++v) {
    int x = static_cast<int>(v);
    bool present = std::any_of(out.clauses.begin(), out.clauses.end(),
                               [x](const auto& clause) { return isTautologyFor(clause, x); });
    if (!present) {
      out.clauses.push_back({x, -x});
      ++count;
    }
  }
  while (out.clauses.size() < formula.variables + 1) {
    out.clauses.push_back({1, -1});
    ++count;
  }
  if (added) *added = count;
  return out;
}

SatNwInstance genSatNw(const CnfFormula& formula, const Rational& epsilon, const Rational& K) {
  if (epsilon <= 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in (0,1)");
  SatNwInstance out;
  out.formula = augmentFormula(formula, &out.addedClauses);
  const auto n = static_cast<unsigned long>(out.formula.variables);
  const auto m = static_cast<unsigned long>(out.formula.clauses.size());
  if (K < n + 1) throw PreconditionError("K must be at least n+1");
  out.epsilon = epsilon;
  out.K = K;

  Rational bridge = K * m - (n + 1) - m;
  auto& g = out.edgeWeighted;
  out.root = g.addVertex("r", epsilon);
  VertexId hub = g.addVertex("r'", 0);
  g.addEdge(out.root, hub, bridge);
  std::vector<VertexId> positive;
  std::vector<VertexId> negative;
  for (unsigned long v = 1; v <= n; ++v) {
    positive.push_back(g.addVertex("x" + std::to_string(v), 0));
    g.addEdge(hub, positive.back(), 1);
    negative.push_back(g.addVertex("~x" + std::to_string(v), 0));
    g.addEdge(hub, negative.back(), 1);
  }
  for (std::size_t j = 0; j < out.formula.clauses.size(); ++j) {
    VertexId c = g.addVertex("c" + std::to_string(j + 1), K);
    std::set<int> literals(out.formula.clauses[j].begin(), out.formula.clauses[j].end());
    for (int literal : literals) {
      std::size_t v = static_cast<std::size_t>(literal < 0 ? -literal : literal) - 1;
      g.addEdge(literal > 0 ? positive[v] : negative[v], c, 1);
    }
  }
  g.root = out.root;
  out.nodeWeighted = subdivideEdgeCosts(g);
  return out;
}

Instance genRandom(const RandomParams& params) {
  Rng rng(params.seed);
  Instance g;
  const std::size_t n = params.vertices;
  for (std::size_t v = 0; v < n; ++v) {
    Rational cost = rng.rational(params.minCost, params.maxCost, params.costDenominator);
    Rational prize = rng.rational(params.minPrize, params.maxPrize, params.costDenominator);
    g.addVertex("v" + std::to_string(v), cost, prize);
  }
  auto addRandomChord = [&]() {
    if (n < 2) return;
    for (int attempt = 0; attempt < 32; ++attempt) {
      auto u = static_cast<VertexId>(rng.below(n));
      auto v = static_cast<VertexId>(rng.below(n));
      if (u != v && !g.hasEdge(u, v)) {
        g.addEdge(u, v);
        return;
      }
    }
  };
  if (params.topology == Topology::TreePlusChords) {
    for (VertexId v = 1; v < n; ++v) g.addEdge(static_cast<VertexId>(rng.below(v)), v);
    for (std::size_t i = 0; i < params.chords; ++i) addRandomChord();
  } else {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (rng.percent(params.edgePercent)) g.addEdge(u, v);
      }
    }
    if (params.connected) {
      auto components = componentsWithin(g, std::vector<bool>(n, true));
      for (std::size_t i = 1; i < components.size(); ++i) {
        const auto& here = components[i];
        const auto& earlier = components[rng.below(i)];
        g.addEdge(earlier[rng.below(earlier.size())], here[rng.below(here.size())]);
      }
    }
  }
  if (n >= 2) {
    for (std::size_t i = 0; i < params.demands; ++i) {
      auto s = static_cast<VertexId>(rng.below(n));
      auto t = static_cast<VertexId>(rng.below(n - 1));
      if (t >= s) ++t;
      g.addDemand(s, t, rng.rational(params.minPenalty, params.maxPenalty, params.costDenominator));
    }
  }
  if (params.rooted && n > 0) g.setRoot(0);
  g.setBudget(params.budget);
  return g;
}

}  // namespace nwsteiner::gen
