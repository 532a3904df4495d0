#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nwsteiner/rational.hpp"

namespace nwsteiner {

using VertexId = std::size_t;
using DemandId = std::size_t;

/// Thrown when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a problem has no feasible solution.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string name;
  Rational cost;
  Rational prize;
};

struct Demand {
  VertexId s = 0;
  VertexId t = 0;
  Rational penalty;
};

/// Undirected simple graph with a nonnegative cost and prize on every vertex,
/// connectivity demands with penalties, and an optional root and budget.
///
/// Vertex ids are dense (0..n-1) in insertion order; the external string name
/// of each vertex is kept for I/O.
class Instance {
 public:
  VertexId addVertex(std::string name, Rational cost, Rational prize = 0);
  /// Rejects self-loops, unknown endpoints and parallel edges.
  void addEdge(VertexId u, VertexId v);
  DemandId addDemand(VertexId s, VertexId t, Rational penalty);

  std::size_t numVertices() const { return vertices_.size(); }
  std::size_t numEdges() const { return edges_.size(); }
  std::size_t numDemands() const { return demands_.size(); }

  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Rational& cost(VertexId v) const { return vertices_.at(v).cost; }
  const Rational& prize(VertexId v) const { return vertices_.at(v).prize; }
  const std::string& name(VertexId v) const { return vertices_.at(v).name; }
  void setCost(VertexId v, Rational cost);
  void setPrize(VertexId v, Rational prize);

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  bool hasEdge(VertexId u, VertexId v) const;

  const std::vector<Demand>& demands() const { return demands_; }
  const Demand& demand(DemandId i) const { return demands_.at(i); }
  void clearDemands() { demands_.clear(); }

  const std::optional<VertexId>& root() const { return root_; }
  void setRoot(std::optional<VertexId> root);
  const std::optional<Rational>& budget() const { return budget_; }
  void setBudget(std::optional<Rational> budget);

  std::optional<VertexId> findVertex(const std::string& name) const;

  /// Endpoints of all demands, sorted and deduplicated.
  std::vector<VertexId> terminals() const;
  Rational totalCost() const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<Demand> demands_;
  std::optional<VertexId> root_;
  std::optional<Rational> budget_;
  std::map<std::string, VertexId> nameIndex_;
};

/// Instance whose costs live on edges; vertices carry prizes only.
struct EdgeWeightedInstance {
  struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Rational cost;
  };
  std::vector<std::string> names;
  std::vector<Rational> prizes;
  std::vector<Edge> edges;
  std::vector<Demand> demands;
  std::optional<VertexId> root;
  std::optional<Rational> budget;

  VertexId addVertex(std::string name, Rational prize = 0);
  void addEdge(VertexId u, VertexId v, Rational cost);
  std::size_t numVertices() const { return names.size(); }
};

/// A vertex cost function c[Z -> 0]: the instance's costs with a set of
/// vertices overridden to zero. Holds a reference to the instance, which must
/// outlive it.
class CostFunction {
 public:
  explicit CostFunction(const Instance& base);
  CostFunction(const Instance& base, std::span<const VertexId> zeroed);

  Rational operator()(VertexId v) const { return zeroed_[v] ? Rational(0) : base_->cost(v); }
  bool isZeroed(VertexId v) const { return zeroed_[v]; }
  bool isZero(VertexId v) const { return zeroed_[v] || base_->cost(v) == 0; }
  /// Copy with additional vertices zeroed.
  CostFunction withZeroed(std::span<const VertexId> more) const;
  std::vector<VertexId> zeroedVertices() const;
  const Instance& instance() const { return *base_; }

 private:
  const Instance* base_;
  std::vector<bool> zeroed_;
};

}  // namespace nwsteiner
