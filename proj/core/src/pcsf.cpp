#include "nwsteiner/pcsf.hpp"

#include <algorithm>
#include <set>

namespace nwsteiner::pcsf {

namespace {

std::vector<std::optional<std::size_t>> componentIndex(std::size_t n,
                                                       const std::vector<std::vector<VertexId>>& components) {
  std::vector<std::optional<std::size_t>> index(n);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (VertexId v : components[c]) index[v] = c;
  }
  return index;
}

// Number of zero-cost components holding an endpoint of an active demand.
std::size_t countCores(const Instance& instance, const CostFunction& costFn, std::span<const DemandId> active) {
  auto components = zeroCostComponents(instance, costFn);
  auto index = componentIndex(instance.numVertices(), components);
  std::set<std::size_t> cores;
  for (DemandId i : active) {
    const Demand& d = instance.demand(i);
    cores.insert(*index[d.s]);
    cores.insert(*index[d.t]);
  }
  return cores.size();
}

}  // namespace

std::string toString(EventKind kind) { return kind == EventKind::Penalty ? "penalty" : "vertex"; }

Distance DiskSystem::touchRadius(CoreId k, VertexId v) const {
  const Distance& d = distFromCore[k].dist[v];
  if (!d.isFinite()) return d;
  return Distance{d.value() - costFn(v)};
}

Rational DiskSystem::charge(CoreId k, VertexId v, const Rational& r) const {
  Distance a = touchRadius(k, v);
  if (!a.isFinite() || r <= a.value()) return 0;
  Rational c = costFn(v);
  Rational grown = r - a.value();
  return grown < c ? grown : c;
}

Rational DualCertificate::lowerBound() const {
  Rational best = 0;
  for (const auto& round : rounds) {
    Rational value = round.radius * static_cast<unsigned long>(round.coreCount);
    if (value > best) best = value;
  }
  return best;
}

Rational DualCertificate::totalPayment() const {
  Rational total = 0;
  for (const auto& round : rounds) total += round.payment;
  return total;
}

DiskSystem buildIteration(const Instance& instance, std::span<const VertexId> boughtSoFar,
                          std::span<const DemandId> active, std::size_t iteration) {
  if (active.empty()) throw PreconditionError("buildIteration needs at least one active demand");
  std::vector<VertexId> zeroed = instance.terminals();
  zeroed.insert(zeroed.end(), boughtSoFar.begin(), boughtSoFar.end());
  DiskSystem sys{iteration, CostFunction(instance, zeroed), {active.begin(), active.end()}, {}, {}, {}, std::nullopt};
  std::sort(sys.activeDemands.begin(), sys.activeDemands.end());

  auto components = zeroCostComponents(instance, sys.costFn);
  auto index = componentIndex(instance.numVertices(), components);

  std::vector<bool> hasEndpoint(components.size(), false);
  for (DemandId i : sys.activeDemands) {
    const Demand& d = instance.demand(i);
    if (index[d.s] == index[d.t]) {
      throw PreconditionError("active demand " + std::to_string(i) + " already has both endpoints in one core");
    }
    hasEndpoint[*index[d.s]] = true;
    hasEndpoint[*index[d.t]] = true;
  }

  sys.coreOf.assign(instance.numVertices(), std::nullopt);
  std::vector<std::optional<CoreId>> coreOfComponent(components.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!hasEndpoint[c]) continue;
    Core core;
    core.id = sys.cores.size();
    core.vertices = components[c];
    core.penaltyBudget = 0;
    coreOfComponent[c] = core.id;
    for (VertexId v : core.vertices) sys.coreOf[v] = core.id;
    sys.cores.push_back(std::move(core));
  }
  std::vector<std::optional<VertexId>> center(sys.cores.size());
  for (DemandId i : sys.activeDemands) {
    const Demand& d = instance.demand(i);
    for (VertexId endpoint : {d.s, d.t}) {
      CoreId k = *sys.coreOf[endpoint];
      sys.cores[k].penaltyBudget += d.penalty / 2;
      if (!center[k] || endpoint < *center[k]) center[k] = endpoint;
    }
  }
  for (auto& core : sys.cores) {
    core.center = *center[core.id];
    sys.distFromCore.push_back(shortestPaths(instance, sys.costFn, core.vertices));
  }
  return sys;
}

std::optional<Rational> vertexEventRadius(const DiskSystem& sys, VertexId v) {
  Rational c = sys.costFn(v);
  if (c == 0) return std::nullopt;
  std::vector<Rational> touch;
  for (CoreId k = 0; k < sys.cores.size(); ++k) {
    Distance a = sys.touchRadius(k, v);
    if (a.isFinite()) touch.push_back(a.value());
  }
  if (touch.size() < 2) return std::nullopt;
  std::sort(touch.begin(), touch.end());

  // f(R) = sum_k max(0, R - a_k) is piecewise linear with slope j on
  // [a_(j), a_(j+1)]. The event is the first R >= a_(2) with f(R) >= c.
  Rational prefix = touch[0] + touch[1];
  if (touch[1] - touch[0] >= c) return touch[1];
  for (std::size_t j = 2; j <= touch.size(); ++j) {
    Rational r = (c + prefix) / static_cast<unsigned long>(j);
    if (j == touch.size() || r <= touch[j]) return r;
    prefix += touch[j];
  }
  return std::nullopt;  // unreachable: the last segment always returns
}

GrowthEvent nextEvent(const DiskSystem& sys) {
  if (sys.cores.empty()) throw PreconditionError("nextEvent needs at least one core");
  std::optional<GrowthEvent> best;
  for (const auto& core : sys.cores) {
    if (!best || core.penaltyBudget < best->radius) best = GrowthEvent{PenaltyTight{core.id}, core.penaltyBudget};
  }
  const std::size_t n = sys.costFn.instance().numVertices();
  for (VertexId v = 0; v < n; ++v) {
    auto r = vertexEventRadius(sys, v);
    if (!r || *r >= best->radius) continue;
    VertexTight tight{v, {}};
    for (CoreId k = 0; k < sys.cores.size(); ++k) {
      Distance a = sys.touchRadius(k, v);
      if (a.isFinite() && a.value() <= *r) tight.chargingCores.push_back(k);
    }
    best = GrowthEvent{std::move(tight), *r};
  }
  return *best;
}

EventOutcome applyEvent(const Instance& instance, const DiskSystem& sys, const GrowthEvent& event) {
  EventOutcome out;
  out.payment = 0;
  CostFunction next = sys.costFn;
  if (const auto* penalty = std::get_if<PenaltyTight>(&event.kind)) {
    for (DemandId i : sys.activeDemands) {
      const Demand& d = instance.demand(i);
      if (sys.coreOf[d.s] == penalty->core || sys.coreOf[d.t] == penalty->core) {
        out.deactivated.push_back(i);
        out.payment += d.penalty;
      }
    }
  } else {
    const auto& tight = std::get<VertexTight>(event.kind);
    std::set<VertexId> delta;
    for (CoreId k : tight.chargingCores) {
      for (VertexId u : sys.distFromCore[k].pathTo(tight.vertex)) {
        if (sys.costFn(u) > 0) delta.insert(u);
      }
    }
    out.boughtDelta.assign(delta.begin(), delta.end());
    for (VertexId u : out.boughtDelta) out.payment += sys.costFn(u);
    next = sys.costFn.withZeroed(out.boughtDelta);
    auto components = zeroCostComponents(instance, next);
    auto index = componentIndex(instance.numVertices(), components);
    for (DemandId i : sys.activeDemands) {
      const Demand& d = instance.demand(i);
      if (index[d.s] == index[d.t]) {
        out.deactivated.push_back(i);
        out.satisfied.push_back(i);
      }
    }
  }
  std::vector<DemandId> remaining;
  std::set_difference(sys.activeDemands.begin(), sys.activeDemands.end(), out.deactivated.begin(),
                      out.deactivated.end(), std::back_inserter(remaining));
  std::size_t after = remaining.empty() ? 0 : countCores(instance, next, remaining);
  out.coresRemoved = sys.cores.size() - after;
  return out;
}

bool verifyDualFeasibility(const DiskSystem& sys, const Rational& radius) {
  if (radius < 0) return false;
  for (const auto& core : sys.cores) {
    if (radius > core.penaltyBudget) return false;
  }
  const std::size_t n = sys.costFn.instance().numVertices();
  for (VertexId v = 0; v < n; ++v) {
    Rational c = sys.costFn(v);
    Rational load = 0;
    for (CoreId k = 0; k < sys.cores.size(); ++k) load += sys.charge(k, v, radius);
    if (load > c) return false;
  }
  return true;
}

PcsfResult solvePcsf(const Instance& instance) {
  PcsfResult result;
  const std::vector<VertexId> terminals = instance.terminals();
  std::vector<bool> isTerminal(instance.numVertices(), false);
  for (VertexId t : terminals) isTerminal[t] = true;

  std::set<VertexId> bought;
  std::vector<DemandId> active;
  std::vector<DemandId> satisfied;
  std::vector<DemandId> paid;
  {
    CostFunction initial(instance, terminals);
    auto index = componentIndex(instance.numVertices(), zeroCostComponents(instance, initial));
    for (DemandId i = 0; i < instance.numDemands(); ++i) {
      const Demand& d = instance.demand(i);
      (index[d.s] == index[d.t] ? satisfied : active).push_back(i);
    }
  }

  for (std::size_t iteration = 1; !active.empty(); ++iteration) {
    std::vector<VertexId> soFar(bought.begin(), bought.end());
    DiskSystem sys = buildIteration(instance, soFar, active, iteration);
    GrowthEvent event = nextEvent(sys);
    EventOutcome outcome = applyEvent(instance, sys, event);

    CertificateRound round;
    round.coreCount = sys.cores.size();
    round.radius = event.radius;
    round.coresRemoved = outcome.coresRemoved;
    round.payment = outcome.payment;
    round.bought = outcome.boughtDelta;
    round.deactivated = outcome.deactivated;
    if (const auto* penalty = std::get_if<PenaltyTight>(&event.kind)) {
      round.kind = EventKind::Penalty;
      round.target = sys.cores[penalty->core].center;
      paid.insert(paid.end(), outcome.deactivated.begin(), outcome.deactivated.end());
    } else {
      round.kind = EventKind::Vertex;
      round.target = std::get<VertexTight>(event.kind).vertex;
      satisfied.insert(satisfied.end(), outcome.satisfied.begin(), outcome.satisfied.end());
    }
    result.certificate.rounds.push_back(std::move(round));

    bought.insert(outcome.boughtDelta.begin(), outcome.boughtDelta.end());
    std::vector<DemandId> remaining;
    std::set_difference(active.begin(), active.end(), outcome.deactivated.begin(), outcome.deactivated.end(),
                        std::back_inserter(remaining));
    active = std::move(remaining);
  }

  // Zero-cost vertices joining satisfied endpoints are free; take them so the
  // satisfied demands are connected inside the returned set itself.
  {
    std::vector<VertexId> zeroed(bought.begin(), bought.end());
    zeroed.insert(zeroed.end(), terminals.begin(), terminals.end());
    CostFunction final(instance, zeroed);
    auto components = zeroCostComponents(instance, final);
    auto index = componentIndex(instance.numVertices(), components);
    for (DemandId i : satisfied) {
      for (VertexId v : components[*index[instance.demand(i).s]]) bought.insert(v);
    }
  }

  auto& solution = result.solution;
  for (VertexId v : bought) {
    if (!isTerminal[v]) solution.bought.push_back(v);
  }
  std::sort(satisfied.begin(), satisfied.end());
  std::sort(paid.begin(), paid.end());
  solution.satisfiedDemands = satisfied;
  solution.paidDemands = paid;
  Rational cost = costOf(instance, solution.bought);
  Rational penalties = 0;
  for (DemandId i : paid) penalties += instance.demand(i).penalty;
  solution.objective = cost + penalties;
  result.certificate.totalCost = cost;
  result.certificate.totalPenaltyPaid = penalties;
  return result;
}

std::vector<std::string> checkCertificate(const Instance& instance, const DualCertificate& certificate,
                                          const Rational& objective, const Rational& lowerBound) {
  std::vector<std::string> problems;
  const std::vector<VertexId> terminals = instance.terminals();
  std::vector<DemandId> active;
  {
    CostFunction initial(instance, terminals);
    auto index = componentIndex(instance.numVertices(), zeroCostComponents(instance, initial));
    for (DemandId i = 0; i < instance.numDemands(); ++i) {
      if (index[instance.demand(i).s] != index[instance.demand(i).t]) active.push_back(i);
    }
  }
  std::set<VertexId> bought;
  Rational penalties = 0;
  const Rational delta(1, 1000000);
  for (std::size_t i = 0; i < certificate.rounds.size(); ++i) {
    const CertificateRound& round = certificate.rounds[i];
    const std::string at = "round " + std::to_string(i + 1) + ": ";
    if (active.empty()) {
      problems.push_back(at + "no active demands left");
      break;
    }
    std::vector<VertexId> soFar(bought.begin(), bought.end());
    DiskSystem sys = buildIteration(instance, soFar, active, i + 1);
    GrowthEvent event = nextEvent(sys);
    EventOutcome outcome = applyEvent(instance, sys, event);
    const EventKind kind = event.isPenalty() ? EventKind::Penalty : EventKind::Vertex;
    const VertexId target = event.isPenalty() ? sys.cores[std::get<PenaltyTight>(event.kind).core].center
                                              : std::get<VertexTight>(event.kind).vertex;
    if (round.coreCount != sys.cores.size()) problems.push_back(at + "core count differs");
    if (round.radius != event.radius) problems.push_back(at + "radius differs");
    if (round.kind != kind || round.target != target) problems.push_back(at + "event differs");
    if (!verifyDualFeasibility(sys, round.radius)) problems.push_back(at + "disks infeasible at the radius");
    if (verifyDualFeasibility(sys, round.radius + delta)) problems.push_back(at + "radius is not maximal");
    if (round.bought != outcome.boughtDelta) problems.push_back(at + "purchases differ");
    if (round.deactivated != outcome.deactivated) problems.push_back(at + "deactivated demands differ");
    if (round.coresRemoved != outcome.coresRemoved || round.coresRemoved == 0) {
      problems.push_back(at + "removed core count differs");
    }
    if (round.payment != outcome.payment) problems.push_back(at + "payment differs");
    if (round.payment > 2 * round.radius * static_cast<unsigned long>(round.coresRemoved)) {
      problems.push_back(at + "payment exceeds 2 h R");
    }
    if (kind == EventKind::Penalty) penalties += outcome.payment;
    bought.insert(outcome.boughtDelta.begin(), outcome.boughtDelta.end());
    std::vector<DemandId> remaining;
    std::set_difference(active.begin(), active.end(), outcome.deactivated.begin(), outcome.deactivated.end(),
                        std::back_inserter(remaining));
    active = std::move(remaining);
  }
  if (!active.empty()) problems.push_back("demands remain active after the last round");
  std::vector<bool> isTerminal(instance.numVertices(), false);
  for (VertexId t : terminals) isTerminal[t] = true;
  Rational cost = 0;
  for (VertexId v : bought) {
    if (!isTerminal[v]) cost += instance.cost(v);
  }
  if (cost != certificate.totalCost) problems.push_back("total cost differs from the purchases");
  if (penalties != certificate.totalPenaltyPaid) problems.push_back("total penalty differs from the penalty rounds");
  if (objective != cost + penalties) problems.push_back("objective differs from cost plus penalties");
  if (certificate.totalPayment() < objective) problems.push_back("payments sum below the objective");
  if (lowerBound != certificate.lowerBound()) problems.push_back("lower bound differs from max R_i |T_i|");
  return problems;
}

Rational pcsfObjective(const Instance& instance, std::span<const VertexId> bought) {
  std::vector<bool> members(instance.numVertices(), false);
  for (VertexId v : instance.terminals()) members[v] = true;
  Rational total = 0;
  for (VertexId v : bought) {
    if (!members[v]) total += instance.cost(v);
    members[v] = true;
  }
  auto index = componentIndex(instance.numVertices(), componentsWithin(instance, members));
  for (const auto& d : instance.demands()) {
    if (index[d.s] != index[d.t]) total += d.penalty;
  }
  return total;
}

Instance pcstInstance(const Instance& instance, VertexId root) {
  if (root >= instance.numVertices()) throw PreconditionError("PCST root out of range");
  Instance out = instance;
  out.clearDemands();
  for (VertexId v = 0; v < instance.numVertices(); ++v) {
    if (v != root && instance.prize(v) > 0) out.addDemand(root, v, instance.prize(v));
  }
  out.setRoot(root);
  return out;
}

}  // namespace nwsteiner::pcsf
