#include "nwsteiner/budgeted.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "nwsteiner/graph.hpp"
#include "nwsteiner/pcsf.hpp"

namespace nwsteiner::budgeted {

using nwsteiner::toString;

std::optional<Rational> RootedTree::ratio() const {
  if (cost == 0) return std::nullopt;
  return Rational(prize / cost);
}

bool RootedTree::contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

RootedTree RootedTree::fromVertexSet(const Instance& instance, VertexId root, std::span<const VertexId> vertices) {
  std::vector<bool> member(instance.numVertices(), false);
  for (VertexId v : vertices) member.at(v) = true;
  if (!member.at(root)) throw PreconditionError("vertex set does not contain the root");
  RootedTree tree;
  tree.root = root;
  tree.cost = 0;
  tree.prize = 0;
  std::vector<bool> seen(instance.numVertices(), false);
  std::deque<VertexId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    tree.vertices.push_back(u);
    tree.cost += instance.cost(u);
    tree.prize += instance.prize(u);
    for (VertexId w : instance.neighbors(u)) {
      if (member[w] && !seen[w]) {
        seen[w] = true;
        tree.parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  for (VertexId v : vertices) {
    if (!seen[v]) throw PreconditionError("vertex set is not connected");
  }
  std::sort(tree.vertices.begin(), tree.vertices.end());
  return tree;
}

bool isValidTree(const Instance& instance, const RootedTree& tree) {
  if (!std::is_sorted(tree.vertices.begin(), tree.vertices.end())) return false;
  if (std::adjacent_find(tree.vertices.begin(), tree.vertices.end()) != tree.vertices.end()) return false;
  if (!tree.contains(tree.root) || tree.parent.count(tree.root) != 0) return false;
  if (tree.parent.size() + 1 != tree.vertices.size()) return false;
  for (const auto& [child, parent] : tree.parent) {
    if (!tree.contains(child) || !tree.contains(parent) || !instance.hasEdge(child, parent)) return false;
  }
  for (VertexId v : tree.vertices) {
    VertexId cur = v;
    for (std::size_t steps = 0; cur != tree.root; ++steps) {
      if (steps > tree.vertices.size()) return false;
      cur = tree.parent.at(cur);
    }
  }
  return costOf(instance, tree.vertices) == tree.cost && prizeOf(instance, tree.vertices) == tree.prize;
}

ProperInstance makeProper(const Instance& instance, VertexId root, const Rational& B) {
  if (root >= instance.numVertices()) throw PreconditionError("root out of range");
  if (instance.cost(root) > B) throw PreconditionError("the root alone costs more than the budget");
  std::vector<VertexId> source{root};
  DistanceMap dist = shortestPaths(instance, CostFunction(instance), source);
  std::vector<bool> keep(instance.numVertices());
  for (VertexId v = 0; v < instance.numVertices(); ++v) keep[v] = dist.dist[v] <= Distance{B};
  Subinstance sub = inducedSubinstance(instance, keep);
  ProperInstance proper{std::move(sub.instance), *sub.local[root], B, std::move(sub.original)};
  proper.instance.clearDemands();
  proper.instance.setRoot(proper.root);
  proper.instance.setBudget(B);
  return proper;
}

TreeClass classifyTree(const Instance& instance, std::span<const VertexId> vertices, const Rational& B) {
  if (vertices.empty()) return {TreeClassKind::Flat, std::nullopt};
  VertexId x = vertices.front();
  for (VertexId v : vertices) {
    if (instance.cost(v) > instance.cost(x) || (instance.cost(v) == instance.cost(x) && v < x)) x = v;
  }
  if (instance.cost(x) * 2 <= B) return {TreeClassKind::Flat, std::nullopt};
  Rational rest = B - instance.cost(x);
  for (VertexId v : vertices) {
    if (v != x && instance.cost(v) * 2 > rest) return {TreeClassKind::Neither, std::nullopt};
  }
  return {TreeClassKind::Saddled, x};
}

std::string toString(const TreeClass& treeClass) {
  switch (treeClass.kind) {
    case TreeClassKind::Flat: return "flat";
    case TreeClassKind::Saddled: return "saddled";
    case TreeClassKind::Neither: return "neither";
  }
  return "?";
}

std::string toString(Backend backend) { return backend == Backend::Exact ? "exact" : "lagrangian"; }

std::vector<std::size_t> greedyPrefix(std::span<const Rational> costs, const Rational& lower) {
  std::vector<std::size_t> order(costs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return costs[a] > costs[b]; });
  std::vector<std::size_t> chosen;
  Rational total = 0;
  for (std::size_t i : order) {
    if (total >= lower) break;
    chosen.push_back(i);
    total += costs[i];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

// Mutable view of a tree for the trimming procedures: parent links over the
// vertices still alive and subtree totals.
class TreeWork {
 public:
  TreeWork(const RootedTree& tree, const Instance& weights) : weights_(weights), root_(tree.root) {
    for (VertexId v : tree.vertices) alive_.insert(v);
    parent_ = tree.parent;
    for (const auto& [child, parent] : parent_) children_[parent].insert(child);
  }

  VertexId root() const { return root_; }

  // Vertices of the live tree in DFS post-order, children by ascending id.
  std::vector<VertexId> postOrder(VertexId from) const {
    std::vector<VertexId> order;
    std::vector<std::pair<VertexId, bool>> stack{{from, false}};
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        order.push_back(v);
        continue;
      }
      stack.emplace_back(v, true);
      auto it = children_.find(v);
      if (it == children_.end()) continue;
      for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) stack.emplace_back(*c, false);
    }
    return order;
  }

  std::vector<VertexId> childrenOf(VertexId v) const {
    auto it = children_.find(v);
    if (it == children_.end()) return {};
    return {it->second.begin(), it->second.end()};
  }

  void computeTotals() {
    subCost_.clear();
    subPrize_.clear();
    for (VertexId v : postOrder(root_)) {
      Rational c = weights_.cost(v);
      Rational p = weights_.prize(v);
      for (VertexId child : childrenOf(v)) {
        c += subCost_[child];
        p += subPrize_[child];
      }
      subCost_[v] = c;
      subPrize_[v] = p;
    }
  }

  const Rational& subCost(VertexId v) const { return subCost_.at(v); }
  const Rational& subPrize(VertexId v) const { return subPrize_.at(v); }

  // Drops the subtree of v and fixes the totals of its ancestors.
  void removeSubtree(VertexId v) {
    Rational c = subCost_.at(v);
    Rational p = subPrize_.at(v);
    for (VertexId u : postOrder(v)) {
      alive_.erase(u);
      children_.erase(u);
    }
    VertexId up = parent_.at(v);
    children_[up].erase(v);
    for (VertexId u : postOrder(v)) parent_.erase(u);
    parent_.erase(v);
    for (VertexId a = up;; a = parent_.at(a)) {
      subCost_[a] -= c;
      subPrize_[a] -= p;
      if (a == root_) break;
    }
  }

  bool isAlive(VertexId v) const { return alive_.count(v) != 0; }

  std::vector<VertexId> subtreeVertices(VertexId v) const { return postOrder(v); }

 private:
  const Instance& weights_;
  VertexId root_;
  std::set<VertexId> alive_;
  std::map<VertexId, VertexId> parent_;
  std::map<VertexId, std::set<VertexId>> children_;
  std::map<VertexId, Rational> subCost_;
  std::map<VertexId, Rational> subPrize_;
};

bool ratioAtLeast(const Rational& prize, const Rational& cost, const Rational& gamma) { return prize >= gamma * cost; }

// Removes subtrees while the remainder keeps ratio >= gamma and cost >= floor,
// until no subtree qualifies.
void pruneSubtrees(TreeWork& work, const Rational& gamma, const Rational& floor) {
  work.computeTotals();
  for (bool removed = true; removed;) {
    removed = false;
    for (VertexId v : work.postOrder(work.root())) {
      if (v == work.root() || !work.isAlive(v)) continue;
      Rational restCost = work.subCost(work.root()) - work.subCost(v);
      Rational restPrize = work.subPrize(work.root()) - work.subPrize(v);
      if (restCost >= floor && ratioAtLeast(restPrize, restCost, gamma)) {
        work.removeSubtree(v);
        removed = true;
      }
    }
  }
}

struct Located {
  VertexId vertex;
  bool rich;
};

// Lowest rich subtree (all subtrees meet the ratio and cost >= threshold), or
// failing that the lowest subtree whose own ratio is below gamma.
std::optional<Located> locate(const TreeWork& work, const Rational& gamma, const Rational& threshold) {
  const auto order = work.postOrder(work.root());
  std::map<VertexId, bool> allGood;
  std::optional<VertexId> lowestBad;
  for (VertexId v : order) {
    bool good = ratioAtLeast(work.subPrize(v), work.subCost(v), gamma);
    if (!good && !lowestBad) lowestBad = v;
    for (VertexId c : work.childrenOf(v)) good = good && allGood[c];
    allGood[v] = good;
    if (good && work.subCost(v) >= threshold) return Located{v, true};
  }
  if (lowestBad) return Located{*lowestBad, false};
  return std::nullopt;
}

// Root of `top` plus a greedy selection of its immediate subtrees whose total
// cost reaches `lower`.
std::vector<VertexId> rootWithSubtrees(const TreeWork& work, VertexId top, const Rational& lower) {
  auto children = work.childrenOf(top);
  std::vector<Rational> costs;
  for (VertexId c : children) costs.push_back(work.subCost(c));
  std::vector<VertexId> kept{top};
  for (std::size_t i : greedyPrefix(costs, lower)) {
    auto part = work.subtreeVertices(children[i]);
    kept.insert(kept.end(), part.begin(), part.end());
  }
  return kept;
}

RootedTree restrictTree(const RootedTree& tree, const Instance& weights, VertexId newRoot,
                        const std::vector<VertexId>& keep) {
  RootedTree out;
  out.root = newRoot;
  out.vertices = keep;
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  for (VertexId v : out.vertices) {
    if (v != newRoot) out.parent[v] = tree.parent.at(v);
  }
  out.cost = costOf(weights, out.vertices);
  out.prize = prizeOf(weights, out.vertices);
  return out;
}

void requireTreeShape(const RootedTree& tree, const Instance& weights) {
  if (!isValidTree(weights, tree)) throw PreconditionError("input is not a valid rooted tree of the graph");
}

RootedTree liftTree(const RootedTree& tree, const std::vector<VertexId>& original) {
  RootedTree out;
  out.root = original.at(tree.root);
  for (VertexId v : tree.vertices) out.vertices.push_back(original.at(v));
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& [child, parent] : tree.parent) out.parent[original.at(child)] = original.at(parent);
  out.cost = tree.cost;
  out.prize = tree.prize;
  return out;
}

}  // namespace

RootedTree trimRooted(const RootedTree& tree, const ProperInstance& proper, const Rational& gamma,
                      const Rational& epsilon) {
  const Instance& g = proper.instance;
  const Rational& B = proper.budget;
  if (epsilon <= 0 || epsilon > 1) throw PreconditionError("epsilon must lie in (0,1]");
  if (B <= 0) throw PreconditionError("budget must be positive");
  if (gamma < 0) throw PreconditionError("gamma must be nonnegative");
  requireTreeShape(tree, g);
  if (tree.root != proper.root) throw PreconditionError("tree is not rooted at the proper instance's root");
  if (!ratioAtLeast(tree.prize, tree.cost, gamma)) throw PreconditionError("tree ratio is below gamma");
  const Rational half = epsilon * B / 2;
  if (tree.cost < half) throw PreconditionError("tree costs less than eps*B/2");
  std::vector<VertexId> source{proper.root};
  const DistanceMap dist = shortestPaths(g, CostFunction(g), source);
  for (VertexId v = 0; v < g.numVertices(); ++v) {
    if (!(dist.dist[v] <= Distance{B})) throw PreconditionError("graph is not B-proper for the root");
  }

  TreeWork work(tree, g);
  pruneSubtrees(work, gamma, half);
  if (work.subCost(work.root()) <= (1 + epsilon) * B) {
    auto kept = work.subtreeVertices(work.root());
    return restrictTree(tree, g, tree.root, kept);
  }

  auto found = locate(work, gamma, half);
  if (!found) throw std::logic_error("trimming found neither a rich nor a low-ratio subtree");
  const VertexId top = found->vertex;
  std::vector<VertexId> kept;
  if (found->rich) {
    Rational below = work.subCost(top) - g.cost(top);
    kept = below < half ? work.subtreeVertices(top) : rootWithSubtrees(work, top, half);
  } else {
    kept = rootWithSubtrees(work, top, half);
  }
  auto path = dist.pathTo(top);
  kept.insert(kept.end(), path.begin(), path.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return RootedTree::fromVertexSet(g, proper.root, kept);
}

RootedTree trimUnrooted(const RootedTree& tree, const Instance& weights, const Rational& B,
                        std::optional<Rational> gamma) {
  if (B <= 0) throw PreconditionError("budget must be positive");
  requireTreeShape(tree, weights);
  if (tree.cost * 2 < B) throw PreconditionError("tree costs less than B/2");
  for (VertexId v : tree.vertices) {
    if (weights.cost(v) * 2 > B) throw PreconditionError("a tree vertex costs more than B/2");
  }
  const Rational g = gamma ? *gamma : Rational(tree.prize / tree.cost);
  if (g < 0) throw PreconditionError("gamma must be nonnegative");
  if (!ratioAtLeast(tree.prize, tree.cost, g)) throw PreconditionError("tree ratio is below gamma");
  const Rational quarter = B / 4;

  TreeWork work(tree, weights);
  pruneSubtrees(work, g, quarter);
  if (work.subCost(work.root()) <= B) return restrictTree(tree, weights, tree.root, work.subtreeVertices(work.root()));

  auto found = locate(work, g, quarter);
  if (!found) throw std::logic_error("trimming found neither a rich nor a low-ratio subtree");
  const VertexId top = found->vertex;
  std::vector<VertexId> kept;
  if (found->rich && work.subCost(top) - weights.cost(top) < quarter) {
    kept = work.subtreeVertices(top);
  } else {
    kept = rootWithSubtrees(work, top, quarter);
  }
  return restrictTree(tree, weights, top, kept);
}

namespace {

RootedTree rootOnly(const Instance& g, VertexId root) {
  std::vector<VertexId> single{root};
  return RootedTree::fromVertexSet(g, root, single);
}

// Better tree: larger prize, then smaller cost, then smaller vertex list.
bool betterTree(const RootedTree& a, const RootedTree& b) {
  if (a.prize != b.prize) return a.prize > b.prize;
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.vertices < b.vertices;
}

RootedTree lagrangianTree(const ProperInstance& proper, const Rational& lambda) {
  const Instance& g = proper.instance;
  Instance scaled = g;
  for (VertexId v = 0; v < g.numVertices(); ++v) scaled.setPrize(v, g.prize(v) * lambda);
  Instance normalized = normalizeDemands(pcsf::pcstInstance(scaled, proper.root));
  auto result = pcsf::solvePcsf(normalized);
  std::vector<bool> member(g.numVertices(), false);
  member[proper.root] = true;
  for (VertexId v : result.solution.bought) {
    if (v < g.numVertices()) member[v] = true;
  }
  for (const auto& component : componentsWithin(g, member)) {
    if (std::binary_search(component.begin(), component.end(), proper.root)) {
      return RootedTree::fromVertexSet(g, proper.root, component);
    }
  }
  return rootOnly(g, proper.root);
}

}  // namespace

RootedTree relaxedBudgetedSolve(const ProperInstance& proper, Backend backend, const oracle::OracleBudget& limits) {
  const Instance& g = proper.instance;
  const Rational cap = proper.budget * 2;
  if (backend == Backend::Exact) {
    auto best = oracle::exactBudgeted(g, proper.root, cap, limits);
    if (!best) throw PreconditionError("the root alone costs more than twice the budget");
    return RootedTree::fromVertexSet(g, proper.root, best->vertices);
  }

  RootedTree best = rootOnly(g, proper.root);
  Rational smallestPrize = 0;
  for (VertexId v = 0; v < g.numVertices(); ++v) {
    if (g.prize(v) > 0 && (smallestPrize == 0 || g.prize(v) < smallestPrize)) smallestPrize = g.prize(v);
  }
  if (smallestPrize == 0) return best;
  Rational lo = 0;
  Rational hi = g.totalCost() / smallestPrize + 1;
  for (int iteration = 0; iteration < 24; ++iteration) {
    Rational mid = (lo + hi) / 2;
    RootedTree candidate = lagrangianTree(proper, mid);
    if (candidate.cost <= cap) {
      if (betterTree(candidate, best)) best = candidate;
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

RootedTree solveRootedBudgeted(const Instance& instance, VertexId root, const Rational& B, const Rational& epsilon,
                               Backend backend, const oracle::OracleBudget& limits) {
  if (epsilon <= 0 || epsilon > 1) throw PreconditionError("epsilon must lie in (0,1]");
  ProperInstance proper = makeProper(instance, root, B);
  RootedTree tree = relaxedBudgetedSolve(proper, backend, limits);
  if (tree.cost > (1 + epsilon) * B) {
    Rational gamma = tree.prize / tree.cost;
    tree = trimRooted(tree, proper, gamma, epsilon);
  }
  return liftTree(tree, proper.original);
}

namespace {

// Best flat tree rooted at any guessed vertex (or only at `forced`), built
// in `g` where every allowed vertex already costs at most B/2.
std::optional<RootedTree> flatSearch(const Instance& g, const Rational& B, std::optional<VertexId> forced,
                                     Backend backend, const oracle::OracleBudget& limits) {
  std::optional<RootedTree> best;
  for (VertexId guess = 0; guess < g.numVertices(); ++guess) {
    if (forced && guess != *forced) continue;
    ProperInstance proper = makeProper(g, guess, B);
    RootedTree tree = relaxedBudgetedSolve(proper, backend, limits);
    if (tree.cost > B) tree = trimUnrooted(tree, proper.instance, B);
    tree = liftTree(tree, proper.original);
    if (!best || betterTree(tree, *best)) best = tree;
  }
  return best;
}

}  // namespace

RootedTree solveUnrootedBudgeted(const Instance& instance, const Rational& B, Backend backend,
                                 const oracle::OracleBudget& limits) {
  const std::size_t n = instance.numVertices();
  bool affordable = false;
  for (VertexId v = 0; v < n; ++v) affordable = affordable || instance.cost(v) <= B;
  if (!affordable) throw InfeasibleError("every vertex costs more than the budget");

  std::optional<RootedTree> best;
  auto consider = [&](const RootedTree& candidate) {
    if (!best || betterTree(candidate, *best)) best = candidate;
  };

  {
    std::vector<bool> keep(n);
    for (VertexId v = 0; v < n; ++v) keep[v] = instance.cost(v) * 2 <= B;
    Subinstance sub = inducedSubinstance(instance, keep);
    sub.instance.clearDemands();
    sub.instance.setRoot(std::nullopt);
    if (auto flat = flatSearch(sub.instance, B, std::nullopt, backend, limits)) {
      consider(liftTree(*flat, sub.original));
    }
  }

  for (VertexId x = 0; x < n; ++x) {
    const Rational& cx = instance.cost(x);
    if (cx * 2 <= B || cx > B) continue;
    const Rational rest = B - cx;
    Instance modified = instance;
    modified.setCost(x, 0);
    std::vector<bool> keep(n);
    for (VertexId v = 0; v < n; ++v) keep[v] = v == x || modified.cost(v) * 2 <= rest;
    Subinstance sub = inducedSubinstance(modified, keep);
    sub.instance.clearDemands();
    sub.instance.setRoot(std::nullopt);
    auto saddled = flatSearch(sub.instance, rest, sub.local[x], backend, limits);
    if (!saddled) continue;
    RootedTree lifted = liftTree(*saddled, sub.original);
    lifted.cost = costOf(instance, lifted.vertices);
    lifted.prize = prizeOf(instance, lifted.vertices);
    consider(lifted);
  }
  return *best;
}

FlatSaddledSplit splitFlatSaddled(const Instance& instance, const RootedTree& tree) {
  if (tree.vertices.size() < 2) throw PreconditionError("split needs a tree with at least two vertices");
  auto costlier = [&](VertexId a, VertexId b) {
    return instance.cost(a) > instance.cost(b) || (instance.cost(a) == instance.cost(b) && a < b);
  };
  FlatSaddledSplit split;
  split.x = tree.vertices.front();
  for (VertexId v : tree.vertices) {
    if (costlier(v, split.x)) split.x = v;
  }
  std::optional<VertexId> y;
  for (VertexId v : tree.vertices) {
    if (v != split.x && (!y || costlier(v, *y))) y = v;
  }
  split.y = *y;

  auto ancestors = [&](VertexId v) {
    std::vector<VertexId> chain{v};
    while (chain.back() != tree.root) chain.push_back(tree.parent.at(chain.back()));
    return chain;
  };
  // Neighbour of y on the tree path towards x.
  auto upFromX = ancestors(split.x);
  VertexId towards;
  auto it = std::find(upFromX.begin(), upFromX.end(), split.y);
  if (it != upFromX.end()) {
    towards = *(it - 1);  // y is an ancestor of x: step down towards x
  } else {
    towards = tree.parent.at(split.y);
  }

  std::map<VertexId, std::vector<VertexId>> adjacent;
  for (const auto& [child, parent] : tree.parent) {
    if ((child == split.y && parent == towards) || (child == towards && parent == split.y)) continue;
    adjacent[child].push_back(parent);
    adjacent[parent].push_back(child);
  }
  std::set<VertexId> side{split.y};
  std::vector<VertexId> stack{split.y};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : adjacent[u]) {
      if (side.insert(w).second) stack.push_back(w);
    }
  }
  for (VertexId v : tree.vertices) (side.count(v) ? split.flatPart : split.saddledPart).push_back(v);
  return split;
}

}  // namespace nwsteiner::budgeted
