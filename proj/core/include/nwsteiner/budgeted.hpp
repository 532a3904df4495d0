#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nwsteiner/instance.hpp"
#include "nwsteiner/oracle.hpp"
#include "nwsteiner/rational.hpp"

/// Budgeted node-weighted Steiner trees: ratio-preserving trimming of rooted
/// and unrooted trees, the rooted (1+eps)-violation algorithm and the unrooted
/// algorithm that never exceeds the budget.
namespace nwsteiner::budgeted {

/// Tree on a subset of the graph's vertices, given by parent links towards
/// the root. The subtree of v is every vertex whose root path passes v.
struct RootedTree {
  VertexId root = 0;
  std::vector<VertexId> vertices;      // sorted, includes the root
  std::map<VertexId, VertexId> parent;  // every vertex except the root
  Rational cost;
  Rational prize;

  std::optional<Rational> ratio() const;
  bool contains(VertexId v) const;

  /// BFS tree of the subgraph induced by `vertices`, neighbours visited in id
  /// order. Throws PreconditionError if the set is disconnected or lacks the
  /// root.
  static RootedTree fromVertexSet(const Instance& instance, VertexId root, std::span<const VertexId> vertices);
};

/// Parent links are graph edges, every vertex reaches the root, and cost and
/// prize match the instance.
bool isValidTree(const Instance& instance, const RootedTree& tree);

/// Graph in which every vertex is within node-weighted distance B of the root.
struct ProperInstance {
  Instance instance;
  VertexId root = 0;
  Rational budget;
  std::vector<VertexId> original;  // local id -> id in the input instance
};

/// Drops every vertex farther than B from the root. Throws PreconditionError
/// when the root alone costs more than B.
ProperInstance makeProper(const Instance& instance, VertexId root, const Rational& B);

enum class TreeClassKind { Flat, Saddled, Neither };

struct TreeClass {
  TreeClassKind kind = TreeClassKind::Flat;
  std::optional<VertexId> apex;  // the expensive vertex of a saddled tree
};

/// Flat: every vertex costs at most B/2. Saddled: the costliest vertex x has
/// c(x) > B/2 and every other vertex costs at most (B - c(x))/2.
TreeClass classifyTree(const Instance& instance, std::span<const VertexId> vertices, const Rational& B);
std::string toString(const TreeClass& treeClass);

/// Indices of a greedy prefix of `costs` in descending order (ties by index)
/// whose sum first reaches `lower`. If every cost is at most U the sum lands
/// in [lower, lower + U). Returns every index when the total stays below.
std::vector<std::size_t> greedyPrefix(std::span<const Rational> costs, const Rational& lower);

/// Trims a tree rooted at proper.root with prize >= gamma * cost and cost at
/// least eps*B/2 into a tree containing the root with
///   eps*B/2 <= cost <= (1+eps)*B   and   prize >= (eps/4) * gamma * cost.
/// The result may include one shortest path to the root from the proper graph.
/// Throws PreconditionError when an input condition fails.
RootedTree trimRooted(const RootedTree& tree, const ProperInstance& proper, const Rational& gamma,
                      const Rational& epsilon);

/// Trims a tree whose vertices each cost at most B/2 and whose total cost is
/// at least B/2 into a subtree with B/4 <= cost <= B and
/// prize >= (gamma/4) * cost. gamma defaults to the tree's own ratio. Only
/// vertex weights are read from `weights`.
RootedTree trimUnrooted(const RootedTree& tree, const Instance& weights, const Rational& B,
                        std::optional<Rational> gamma = std::nullopt);

enum class Backend {
  Exact,       // exhaustive maximum-prize tree within twice the budget
  Lagrangian,  // heuristic: bisection on a prize multiplier over the PCST solver
};
std::string toString(Backend backend);

/// Tree containing the root with cost at most 2B and, for the exact backend,
/// prize at least the best prize achievable within budget B.
RootedTree relaxedBudgetedSolve(const ProperInstance& proper, Backend backend,
                                const oracle::OracleBudget& limits = {});

/// Rooted budgeted tree with cost at most (1+eps)B. With the exact backend
/// the prize is at least eps^2/16 of the best tree within B.
RootedTree solveRootedBudgeted(const Instance& instance, VertexId root, const Rational& B, const Rational& epsilon,
                               Backend backend = Backend::Exact, const oracle::OracleBudget& limits = {});

/// Unrooted budgeted tree of cost at most B: best of a flat search (vertices
/// of cost <= B/2, every root guessed, trimmed when over B) and a saddled
/// search (an apex x with B/2 < c(x) <= B made free, budget B - c(x)). With
/// the exact backend the prize is at least 1/64 of the optimum. Throws
/// InfeasibleError when every vertex costs more than B.
RootedTree solveUnrootedBudgeted(const Instance& instance, const Rational& B, Backend backend = Backend::Exact,
                                 const oracle::OracleBudget& limits = {});

/// Cutting a tree that is neither flat nor saddled at the edge next to its
/// second-costliest vertex y on the path to the costliest x: the y side is
/// flat and the x side saddled, provided the tree costs at most B.
struct FlatSaddledSplit {
  VertexId x = 0;
  VertexId y = 0;
  std::vector<VertexId> flatPart;
  std::vector<VertexId> saddledPart;
};
FlatSaddledSplit splitFlatSaddled(const Instance& instance, const RootedTree& tree);

}  // namespace nwsteiner::budgeted
