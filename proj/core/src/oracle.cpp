#include "nwsteiner/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>

#include "nwsteiner/graph.hpp"

namespace nwsteiner::oracle {

using nwsteiner::toString;

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Counts search states and enforces the state and wall-clock limits.
class Guard {
 public:
  explicit Guard(const OracleBudget& budget) : budget_(budget), start_(Clock::now()) {}

  void tick() {
    if (++states_ > budget_.maxStates) {
      throw OracleBudgetExceeded("oracle search exceeded " + std::to_string(budget_.maxStates) + " states");
    }
    if ((states_ & 0xfff) == 0 && Clock::now() - start_ > budget_.timeLimit) {
      throw OracleBudgetExceeded("oracle search exceeded its time limit");
    }
  }

 private:
  const OracleBudget& budget_;
  Clock::time_point start_;
  std::uint64_t states_ = 0;
};

void requireSubsetLimit(std::size_t count, const OracleBudget& budget, const char* what) {
  if (count > budget.maxVertices || count >= 63) {
    throw OracleBudgetExceeded(std::string(what) + ": " + std::to_string(count) + " vertices to enumerate, limit " +
                               std::to_string(budget.maxVertices));
  }
}

void requireEnumerationLimit(std::size_t count, const OracleBudget& budget) {
  if (count > budget.maxEnumerationVertices || count > 64) {
    throw OracleBudgetExceeded("connected-set enumeration limited to " +
                               std::to_string(std::min<std::size_t>(budget.maxEnumerationVertices, 64)) +
                               " vertices, got " + std::to_string(count));
  }
}

std::vector<Mask> adjacencyMasks(const Instance& instance) {
  std::vector<Mask> adj(instance.numVertices(), 0);
  for (const auto& [u, v] : instance.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

std::vector<VertexId> membersOf(Mask mask) {
  std::vector<VertexId> out;
  while (mask) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

bool connectedMask(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) return false;
  Mask reached = set & (~set + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

// Component label per vertex of G[members] (unlabelled vertices get npos).
std::vector<std::size_t> labelComponents(const Instance& instance, const std::vector<bool>& members) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(instance.numVertices(), npos);
  std::size_t next = 0;
  for (VertexId s = 0; s < instance.numVertices(); ++s) {
    if (!members[s] || label[s] != npos) continue;
    std::deque<VertexId> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : instance.neighbors(u)) {
        if (members[w] && label[w] == npos) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

// Union-find with undo, no path compression.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
  }
  std::size_t checkpoint() const { return history_.size(); }
  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      std::size_t b = history_.back();
      history_.pop_back();
      std::size_t a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

void requireDemandLimit(const Instance& instance, const OracleBudget& budget) {
  if (instance.numDemands() > budget.maxDemands) {
    throw OracleBudgetExceeded("PCSF oracle limited to " + std::to_string(budget.maxDemands) + " demands, got " +
                               std::to_string(instance.numDemands()));
  }
}

std::vector<VertexId> nonTerminals(const Instance& instance) {
  std::vector<bool> terminal(instance.numVertices(), false);
  for (VertexId t : instance.terminals()) terminal[t] = true;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < instance.numVertices(); ++v) {
    if (!terminal[v]) out.push_back(v);
  }
  return out;
}

// Better solution for a minimisation: smaller value, then lexicographically
// smaller vertex list.
bool betterMin(const Rational& value, const std::vector<VertexId>& set, const std::optional<TreeOptimum>& best) {
  if (!best) return true;
  int c = cmp(value, best->value);
  return c < 0 || (c == 0 && set < best->vertices);
}

bool betterMax(const Rational& value, const Rational& cost, const std::vector<VertexId>& set, const Rational& bestCost,
               const std::optional<TreeOptimum>& best) {
  if (!best) return true;
  int c = cmp(value, best->value);
  if (c != 0) return c > 0;
  int d = cmp(cost, bestCost);
  if (d != 0) return d < 0;
  return set < best->vertices;
}

// Canonical enumeration of connected vertex sets. With an anchor given, only
// sets containing it are produced; otherwise every nonempty connected set is
// produced once, grown from its smallest vertex. `admit(set, v)` may refuse
// to extend `set` by v, which also refuses every superset of set + v within
// that branch; it must therefore only refuse for reasons monotone under
// adding vertices.
class ConnectedSets {
 public:
  using Visit = std::function<void(Mask)>;
  using Admit = std::function<bool(Mask, VertexId)>;

  ConnectedSets(const Instance& instance, const OracleBudget& budget)
      : adj_(adjacencyMasks(instance)), n_(instance.numVertices()), guard_(budget) {
    requireEnumerationLimit(n_, budget);
  }

  void run(std::optional<VertexId> anchor, const Admit& admit, const Visit& visit) {
    admit_ = &admit;
    visit_ = &visit;
    if (anchor) {
      grow(Mask{1} << *anchor, adj_[*anchor], Mask{1} << *anchor);
      return;
    }
    for (VertexId a = 0; a < n_; ++a) {
      if (!admit(0, a)) continue;
      Mask below = (Mask{1} << a) - 1;
      Mask self = Mask{1} << a;
      grow(self, adj_[a] & ~below, below | self);
    }
  }

 private:
  void grow(Mask set, Mask extension, Mask excluded) {
    guard_.tick();
    (*visit_)(set);
    extension &= ~excluded & ~set;
    while (extension) {
      auto v = static_cast<VertexId>(std::countr_zero(extension));
      Mask bit = Mask{1} << v;
      extension &= ~bit;
      if ((*admit_)(set, v)) {
        Mask next = extension | (adj_[v] & ~set & ~excluded & ~bit);
        grow(set | bit, next, excluded);
      }
      excluded |= bit;
    }
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  Guard guard_;
  const Admit* admit_ = nullptr;
  const Visit* visit_ = nullptr;
};

Rational maskCost(const Instance& instance, Mask set) {
  Rational total = 0;
  for (VertexId v : membersOf(set)) total += instance.cost(v);
  return total;
}

Rational maskPrize(const Instance& instance, Mask set) {
  Rational total = 0;
  for (VertexId v : membersOf(set)) total += instance.prize(v);
  return total;
}

}  // namespace

OracleBudget OracleBudget::fromEnvironment() {
  OracleBudget budget;
  if (const char* text = std::getenv("NWSTEINER_ORACLE_MAX_VERTICES")) {
    budget.maxVertices = static_cast<std::size_t>(std::strtoull(text, nullptr, 10));
  }
  if (const char* text = std::getenv("NWSTEINER_ORACLE_MAX_DEMANDS")) {
    budget.maxDemands = static_cast<std::size_t>(std::strtoull(text, nullptr, 10));
  }
  return budget;
}

std::string toString(TreeVariant variant) {
  switch (variant) {
    case TreeVariant::KMst: return "kmst";
    case TreeVariant::KSteiner: return "ksteiner";
    case TreeVariant::Quota: return "quota";
  }
  return "?";
}

// ---------------------------------------------------------------- PCSF

PcsfOptimum exactPcsf(const Instance& instance, const OracleBudget& budget) {
  requireDemandLimit(instance, budget);
  const std::vector<VertexId> free = nonTerminals(instance);
  requireSubsetLimit(free.size(), budget, "PCSF oracle");
  Guard guard(budget);

  const std::size_t n = instance.numVertices();
  std::vector<bool> member(n, false);
  RollbackDsu dsu(n);
  for (VertexId t : instance.terminals()) member[t] = true;
  for (const auto& [u, v] : instance.edges()) {
    if (member[u] && member[v]) dsu.unite(u, v);
  }

  std::optional<PcsfOptimum> best;
  std::vector<VertexId> chosen;
  std::function<void(std::size_t, const Rational&)> search = [&](std::size_t i, const Rational& cost) {
    guard.tick();
    if (best && cost >= best->objective) return;
    if (i == free.size()) {
      Rational total = cost;
      for (const auto& d : instance.demands()) {
        if (dsu.find(d.s) != dsu.find(d.t)) total += d.penalty;
      }
      if (!best || total < best->objective) best = PcsfOptimum{total, chosen};
      return;
    }
    VertexId v = free[i];
    std::size_t mark = dsu.checkpoint();
    member[v] = true;
    for (VertexId w : instance.neighbors(v)) {
      if (member[w]) dsu.unite(v, w);
    }
    chosen.push_back(v);
    search(i + 1, cost + instance.cost(v));
    chosen.pop_back();
    member[v] = false;
    dsu.rollback(mark);
    search(i + 1, cost);
  };
  search(0, Rational(0));
  return *best;
}

PcsfOptimum exactPcsfBySubsets(const Instance& instance, const OracleBudget& budget) {
  requireDemandLimit(instance, budget);
  const std::vector<VertexId> free = nonTerminals(instance);
  requireSubsetLimit(free.size(), budget, "PCSF oracle");
  Guard guard(budget);
  const std::vector<VertexId> terminals = instance.terminals();

  std::optional<PcsfOptimum> best;
  for (Mask mask = 0; mask < (Mask{1} << free.size()); ++mask) {
    guard.tick();
    std::vector<bool> member(instance.numVertices(), false);
    for (VertexId t : terminals) member[t] = true;
    std::vector<VertexId> chosen;
    Rational total = 0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1) {
        member[free[i]] = true;
        chosen.push_back(free[i]);
        total += instance.cost(free[i]);
      }
    }
    auto label = labelComponents(instance, member);
    for (const auto& d : instance.demands()) {
      if (label[d.s] != label[d.t]) total += d.penalty;
    }
    if (!best || total < best->objective || (total == best->objective && chosen < best->bought)) {
      best = PcsfOptimum{total, chosen};
    }
  }
  return *best;
}

// ---------------------------------------------------------------- budgeted

std::optional<TreeOptimum> exactBudgeted(const Instance& instance, std::optional<VertexId> root, const Rational& B,
                                         const OracleBudget& budget) {
  if (root && instance.cost(*root) > B) return std::nullopt;
  ConnectedSets sets(instance, budget);
  std::optional<TreeOptimum> best;
  Rational bestCost = 0;
  if (!root) best = TreeOptimum{0, {}};

  auto admit = [&](Mask set, VertexId v) { return maskCost(instance, set) + instance.cost(v) <= B; };
  auto visit = [&](Mask set) {
    Rational prize = maskPrize(instance, set);
    Rational cost = maskCost(instance, set);
    auto members = membersOf(set);
    if (betterMax(prize, cost, members, bestCost, best)) {
      best = TreeOptimum{prize, members};
      bestCost = cost;
    }
  };
  sets.run(root, admit, visit);
  return best;
}

std::optional<TreeOptimum> exactBudgetedBySubsets(const Instance& instance, std::optional<VertexId> root,
                                                  const Rational& B, const OracleBudget& budget) {
  const std::size_t n = instance.numVertices();
  requireSubsetLimit(n, budget, "budgeted oracle");
  if (root && instance.cost(*root) > B) return std::nullopt;
  Guard guard(budget);
  auto adj = adjacencyMasks(instance);
  std::optional<TreeOptimum> best;
  Rational bestCost = 0;
  if (!root) best = TreeOptimum{0, {}};
  for (Mask set = 1; set < (Mask{1} << n); ++set) {
    guard.tick();
    if (root && !(set >> *root & 1)) continue;
    Rational cost = maskCost(instance, set);
    if (cost > B || !connectedMask(adj, set)) continue;
    Rational prize = maskPrize(instance, set);
    auto members = membersOf(set);
    if (betterMax(prize, cost, members, bestCost, best)) {
      best = TreeOptimum{prize, members};
      bestCost = cost;
    }
  }
  return best;
}

// ---------------------------------------------------------------- quota / k-MST

namespace {

bool meetsTarget(const PendantInstance& instance, const TreeQuery& query, const std::vector<VertexId>& set) {
  switch (query.variant) {
    case TreeVariant::KMst: return instance.vertexCount(set) >= query.k;
    case TreeVariant::KSteiner: return instance.terminalCount(set) >= query.k;
    case TreeVariant::Quota: return prizeOf(instance.graph, set) >= query.quota;
  }
  return false;
}

std::optional<TreeOptimum> emptyIfAllowed(const TreeQuery& query) {
  bool trivial = query.variant == TreeVariant::Quota ? query.quota <= 0 : query.k == 0;
  if (!query.root && trivial) return TreeOptimum{0, {}};
  return std::nullopt;
}

void checkPendantShape(const PendantInstance& instance) {
  if (instance.pendants.size() != instance.graph.numVertices() ||
      instance.terminal.size() != instance.graph.numVertices()) {
    throw PreconditionError("pendant counts and terminal flags must cover every vertex");
  }
}

}  // namespace

std::optional<TreeOptimum> exactQuotaKmst(const PendantInstance& instance, const TreeQuery& query,
                                          const OracleBudget& budget) {
  checkPendantShape(instance);
  const Instance& g = instance.graph;
  ConnectedSets sets(g, budget);
  std::optional<TreeOptimum> best = emptyIfAllowed(query);
  auto admit = [&](Mask set, VertexId v) {
    return !best || maskCost(g, set) + g.cost(v) <= best->value;
  };
  auto visit = [&](Mask set) {
    auto members = membersOf(set);
    if (!meetsTarget(instance, query, members)) return;
    Rational cost = maskCost(g, set);
    if (betterMin(cost, members, best)) best = TreeOptimum{cost, members};
  };
  sets.run(query.root, admit, visit);
  return best;
}

std::optional<TreeOptimum> exactQuotaKmstBySubsets(const PendantInstance& instance, const TreeQuery& query,
                                                   const OracleBudget& budget) {
  checkPendantShape(instance);
  const Instance& g = instance.graph;
  const std::size_t n = g.numVertices();
  requireSubsetLimit(n, budget, "quota/k-MST oracle");
  Guard guard(budget);
  auto adj = adjacencyMasks(g);
  std::optional<TreeOptimum> best = emptyIfAllowed(query);
  for (Mask set = 1; set < (Mask{1} << n); ++set) {
    guard.tick();
    if (query.root && !(set >> *query.root & 1)) continue;
    if (!connectedMask(adj, set)) continue;
    auto members = membersOf(set);
    if (!meetsTarget(instance, query, members)) continue;
    Rational cost = maskCost(g, set);
    if (betterMin(cost, members, best)) best = TreeOptimum{cost, members};
  }
  return best;
}

// ---------------------------------------------------------------- net worth

TreeOptimum exactNetWorth(const Instance& instance, std::optional<VertexId> root, const OracleBudget& budget) {
  if (instance.numVertices() == 0) throw PreconditionError("net worth of an empty graph");
  ConnectedSets sets(instance, budget);
  std::optional<TreeOptimum> best;
  auto admit = [](Mask, VertexId) { return true; };
  auto visit = [&](Mask set) {
    Rational value = maskPrize(instance, set) - maskCost(instance, set);
    auto members = membersOf(set);
    if (!best || value > best->value || (value == best->value && members < best->vertices)) {
      best = TreeOptimum{value, members};
    }
  };
  sets.run(root, admit, visit);
  return *best;
}

TreeOptimum exactNetWorthEdgeWeighted(const EdgeWeightedInstance& instance, std::optional<VertexId> root,
                                      const OracleBudget& budget) {
  const std::size_t n = instance.numVertices();
  if (n == 0) throw PreconditionError("net worth of an empty graph");
  requireSubsetLimit(n, budget, "edge-weighted net worth oracle");
  Guard guard(budget);

  std::vector<std::size_t> order(instance.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return instance.edges[a].cost < instance.edges[b].cost; });

  std::optional<TreeOptimum> best;
  for (Mask set = 1; set < (Mask{1} << n); ++set) {
    guard.tick();
    if (root && !(set >> *root & 1)) continue;
    RollbackDsu dsu(n);
    std::size_t merges = 0;
    Rational weight = 0;
    for (std::size_t e : order) {
      const auto& edge = instance.edges[e];
      if (!(set >> edge.u & 1) || !(set >> edge.v & 1)) continue;
      if (dsu.find(edge.u) == dsu.find(edge.v)) continue;
      dsu.unite(edge.u, edge.v);
      weight += edge.cost;
      ++merges;
    }
    auto members = membersOf(set);
    if (merges + 1 != members.size()) continue;  // G[set] disconnected
    Rational value = -weight;
    for (VertexId v : members) value += instance.prizes[v];
    if (!best || value > best->value || (value == best->value && members < best->vertices)) {
      best = TreeOptimum{value, members};
    }
  }
  return *best;
}

bool bruteForceSatisfiable(const gen::CnfFormula& formula) {
  if (formula.variables >= 63) throw OracleBudgetExceeded("too many variables for brute-force SAT");
  for (Mask assignment = 0; assignment < (Mask{1} << formula.variables); ++assignment) {
    bool all = std::all_of(formula.clauses.begin(), formula.clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int literal) {
        auto v = static_cast<std::size_t>(literal < 0 ? -literal : literal) - 1;
        bool value = assignment >> v & 1;
        return literal > 0 ? value : !value;
      });
    });
    if (all) return true;
  }
  return false;
}

// ---------------------------------------------------------------- duals

namespace {

std::vector<VertexId> zeroComponentOf(const Instance& instance, const CostFunction& costFn, VertexId start) {
  std::vector<bool> seen(instance.numVertices(), false);
  std::vector<VertexId> out;
  if (costFn(start) != 0) return {start};
  std::deque<VertexId> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    out.push_back(u);
    for (VertexId w : instance.neighbors(u)) {
      if (!seen[w] && costFn(w) == 0) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiskReplay replayDisk(const Instance& instance, const CostFunction& costFn, const DiskSpec& spec,
                      const std::vector<std::optional<std::size_t>>& diskOfCoreVertex, std::size_t self) {
  const std::size_t n = instance.numVertices();
  DiskReplay replay;
  replay.center = spec.center;
  replay.core = zeroComponentOf(instance, costFn, spec.center);
  replay.load.assign(n, Rational(0));
  replay.inside.assign(n, false);
  for (VertexId v : replay.core) replay.inside[v] = true;
  Rational grown = 0;

  auto boundary = [&]() {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
      if (replay.inside[v]) continue;
      for (VertexId w : instance.neighbors(v)) {
        if (replay.inside[w]) {
          out.push_back(v);
          break;
        }
      }
    }
    return out;
  };

  while (grown < spec.radius) {
    // Absorb every boundary vertex whose constraint is tight, until none is.
    for (bool changed = true; changed;) {
      changed = false;
      for (VertexId v : boundary()) {
        if (replay.load[v] != costFn(v)) continue;
        replay.inside[v] = true;
        changed = true;
        if (diskOfCoreVertex[v] && *diskOfCoreVertex[v] != self) replay.leftFamily = true;
      }
    }
    Rational step = spec.radius - grown;
    const auto edge = boundary();
    for (VertexId v : edge) {
      Rational slack = costFn(v) - replay.load[v];
      if (slack < step) step = slack;
    }
    replay.steps.push_back({replay.inside, step, grown});
    for (VertexId v : edge) replay.load[v] += step;
    grown += step;
  }
  replay.grown = grown;
  return replay;
}

}  // namespace

LaminarReport checkLaminarDual(const Instance& instance, const CostFunction& costFn, std::span<const Demand> demands,
                               std::span<const DiskSpec> disks, const OracleBudget& budget) {
  requireEnumerationLimit(instance.numVertices(), budget);
  const std::size_t n = instance.numVertices();
  LaminarReport report;
  report.c1 = true;
  report.c2 = true;

  std::vector<std::optional<std::size_t>> diskOfCoreVertex(n);
  for (std::size_t k = 0; k < disks.size(); ++k) {
    if (disks[k].radius < 0) throw PreconditionError("negative disk radius");
    for (VertexId v : zeroComponentOf(instance, costFn, disks[k].center)) diskOfCoreVertex[v] = k;
  }
  for (std::size_t k = 0; k < disks.size(); ++k) {
    report.disks.push_back(replayDisk(instance, costFn, disks[k], diskOfCoreVertex, k));
    if (report.disks.back().leftFamily) {
      report.violations.push_back("disk " + std::to_string(k) + " absorbed another core");
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    Rational total = 0;
    for (const auto& disk : report.disks) total += disk.load[v];
    if (total > costFn(v)) {
      report.c1 = false;
      report.violations.push_back("C1 violated at vertex " + instance.name(v) + ": load " + toString(total) +
                                  " > cost " + toString(costFn(v)));
    }
  }

  for (std::size_t k = 0; k < report.disks.size(); ++k) {
    for (const auto& step : report.disks[k].steps) {
      Rational separated = 0;
      for (const auto& d : demands) {
        if (step.members[d.s] != step.members[d.t]) separated += d.penalty;
      }
      Rational lhs = step.grownBefore + step.y;
      if (lhs > separated / 2) {
        report.c2 = false;
        report.violations.push_back("C2 violated for a set of disk " + std::to_string(k) + ": " + toString(lhs) +
                                    " > " + toString(separated / 2));
        break;
      }
    }
  }

  bool left = std::any_of(report.disks.begin(), report.disks.end(), [](const auto& d) { return d.leftFamily; });
  report.feasible = report.c1 && report.c2 && !left;
  return report;
}

std::vector<std::string> checkReplayIdentities(const Instance& instance, const CostFunction& costFn,
                                               const LaminarReport& report, std::span<const DiskSpec> disks) {
  std::vector<std::string> failures;
  const std::size_t n = instance.numVertices();
  for (std::size_t k = 0; k < report.disks.size() && k < disks.size(); ++k) {
    const DiskReplay& disk = report.disks[k];
    const Rational& R = disks[k].radius;
    const std::string tag = "disk " + std::to_string(k) + ": ";
    if (disk.leftFamily) {
      failures.push_back(tag + "left its family, identities undefined");
      continue;
    }

    // Node-weighted distances by Bellman-Ford relaxation from the core.
    std::vector<Distance> d(n, Distance::infinity());
    for (VertexId v : disk.core) d[v] = Distance{costFn(v)};
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [u, v] : instance.edges()) {
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
          Distance candidate = d[a] + costFn(b);
          if (candidate < d[b]) {
            d[b] = candidate;
            changed = true;
          }
        }
      }
    }

    if (disk.grown != R) failures.push_back(tag + "total y " + toString(disk.grown) + " differs from radius");
    for (VertexId v = 0; v < n; ++v) {
      if (!d[v].isFinite()) {
        if (disk.load[v] != 0) failures.push_back(tag + "unreachable vertex carries load");
        continue;
      }
      const Rational& dist = d[v].value();
      if (dist < R) {
        if (!disk.inside[v]) failures.push_back(tag + instance.name(v) + " closer than R but not inside");
        if (disk.load[v] != costFn(v)) {
          failures.push_back(tag + "inside vertex " + instance.name(v) + " not tight");
        }
        continue;
      }
      if (disk.inside[v]) failures.push_back(tag + instance.name(v) + " absorbed at distance >= R");
      Rational touch = dist - costFn(v);
      Rational expected = touch < R ? R - touch : Rational(0);
      if (disk.load[v] != expected) {
        failures.push_back(tag + "boundary load of " + instance.name(v) + " is " + toString(disk.load[v]) +
                           ", expected " + toString(expected));
      }
    }
    for (const auto& step : disk.steps) {
      if (step.y <= 0) failures.push_back(tag + "recorded a set with nonpositive y");
      if (!step.members[disk.center]) failures.push_back(tag + "set without the center");
      for (VertexId v = 0; v < n; ++v) {
        if (step.members[v] && !(d[v].isFinite() && d[v].value() < R)) {
          failures.push_back(tag + "set reaches outside the continent at " + instance.name(v));
          break;
        }
      }
    }
  }
  return failures;
}

// ---------------------------------------------------------------- validation

ValidationReport validateSolution(const Instance& instance, const ClaimedSolution& solution, ProblemKind kind) {
  ValidationReport report;
  const std::size_t n = instance.numVertices();
  std::vector<bool> member(n, false);
  for (VertexId v : solution.vertices) {
    if (v >= n) {
      report.problems.push_back("vertex id " + std::to_string(v) + " out of range");
      continue;
    }
    if (member[v]) report.problems.push_back("vertex " + instance.name(v) + " listed twice");
    member[v] = true;
  }
  auto fail = [&](std::string message) { report.problems.push_back(std::move(message)); };

  if (kind == ProblemKind::Pcsf) {
    std::vector<bool> terminal(n, false);
    for (VertexId t : instance.terminals()) terminal[t] = true;
    Rational cost = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (member[v] && !terminal[v]) cost += instance.cost(v);
    }
    std::vector<bool> closure = member;
    for (VertexId v = 0; v < n; ++v) closure[v] = closure[v] || terminal[v];
    auto label = labelComponents(instance, closure);
    Rational penalties = 0;
    for (const auto& d : instance.demands()) {
      if (label[d.s] != label[d.t]) penalties += d.penalty;
    }
    report.cost = cost;
    report.objective = cost + penalties;
    if (solution.objective && *solution.objective != report.objective) {
      fail("claimed objective " + toString(*solution.objective) + " differs from recomputed " +
           toString(report.objective));
    }
  } else {
    Rational cost = 0;
    Rational prize = 0;
    std::size_t count = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!member[v]) continue;
      cost += instance.cost(v);
      prize += instance.prize(v);
      ++count;
    }
    report.cost = cost;
    report.prize = prize;
    report.objective = kind == ProblemKind::NetWorth ? prize - cost : prize;
    if (count == 0) {
      fail("empty vertex set");
    } else {
      auto label = labelComponents(instance, member);
      for (VertexId v = 0; v < n; ++v) {
        if (member[v] && label[v] != 0) {
          fail("vertex set is not connected");
          break;
        }
      }
    }
    if (instance.root() && !(*instance.root() < n && member[*instance.root()])) fail("root not in the solution");
    if (kind == ProblemKind::Budgeted && instance.budget() && cost > *instance.budget()) {
      fail("cost " + toString(cost) + " exceeds budget " + toString(*instance.budget()));
    }
    if (solution.cost && *solution.cost != cost) fail("claimed cost differs from recomputed " + toString(cost));
    if (solution.prize && *solution.prize != prize) fail("claimed prize differs from recomputed " + toString(prize));
    if (solution.objective && *solution.objective != report.objective) {
      fail("claimed objective differs from recomputed " + toString(report.objective));
    }
  }
  report.ok = report.problems.empty();
  return report;
}

}  // namespace nwsteiner::oracle
