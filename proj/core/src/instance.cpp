#include "nwsteiner/instance.hpp"

#include <algorithm>

namespace nwsteiner {

VertexId Instance::addVertex(std::string name, Rational cost, Rational prize) {
  if (cost < 0) throw PreconditionError("negative vertex cost");
  if (prize < 0) throw PreconditionError("negative vertex prize");
  VertexId id = vertices_.size();
  if (name.empty()) name = std::to_string(id);
  if (nameIndex_.count(name) != 0) throw PreconditionError("duplicate vertex name '" + name + "'");
  nameIndex_.emplace(name, id);
  vertices_.push_back(Vertex{std::move(name), std::move(cost), std::move(prize)});
  adjacency_.emplace_back();
  return id;
}

void Instance::addEdge(VertexId u, VertexId v) {
  if (u >= numVertices() || v >= numVertices()) throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("self-loop at vertex '" + name(u) + "'");
  if (hasEdge(u, v)) throw PreconditionError("parallel edge " + name(u) + "-" + name(v));
  auto insertSorted = [](std::vector<VertexId>& list, VertexId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insertSorted(adjacency_[u], v);
  insertSorted(adjacency_[v], u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Instance::hasEdge(VertexId u, VertexId v) const {
  if (u >= numVertices() || v >= numVertices()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

DemandId Instance::addDemand(VertexId s, VertexId t, Rational penalty) {
  if (s >= numVertices() || t >= numVertices()) throw PreconditionError("demand endpoint out of range");
  if (penalty < 0) throw PreconditionError("negative demand penalty");
  demands_.push_back(Demand{s, t, std::move(penalty)});
  return demands_.size() - 1;
}

void Instance::setCost(VertexId v, Rational cost) {
  if (cost < 0) throw PreconditionError("negative vertex cost");
  vertices_.at(v).cost = std::move(cost);
}

void Instance::setPrize(VertexId v, Rational prize) {
  if (prize < 0) throw PreconditionError("negative vertex prize");
  vertices_.at(v).prize = std::move(prize);
}

void Instance::setRoot(std::optional<VertexId> root) {
  if (root && *root >= numVertices()) throw PreconditionError("root out of range");
  root_ = root;
}

void Instance::setBudget(std::optional<Rational> budget) {
  if (budget && *budget < 0) throw PreconditionError("negative budget");
  budget_ = std::move(budget);
}

std::optional<VertexId> Instance::findVertex(const std::string& name) const {
  auto it = nameIndex_.find(name);
  if (it == nameIndex_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Instance::terminals() const {
  std::vector<VertexId> out;
  for (const auto& d : demands_) {
    out.push_back(d.s);
    out.push_back(d.t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational Instance::totalCost() const {
  Rational total = 0;
  for (const auto& v : vertices_) total += v.cost;
  return total;
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.numVertices() != b.numVertices() || a.edges_.size() != b.edges_.size() ||
      a.demands_.size() != b.demands_.size() || a.root_ != b.root_ || a.budget_ != b.budget_) {
    return false;
  }
  for (VertexId v = 0; v < a.numVertices(); ++v) {
    const auto& x = a.vertices_[v];
    const auto& y = b.vertices_[v];
    if (x.name != y.name || x.cost != y.cost || x.prize != y.prize) return false;
    if (a.adjacency_[v] != b.adjacency_[v]) return false;
  }
  for (std::size_t i = 0; i < a.demands_.size(); ++i) {
    const auto& x = a.demands_[i];
    const auto& y = b.demands_[i];
    if (x.s != y.s || x.t != y.t || x.penalty != y.penalty) return false;
  }
  return true;
}

VertexId EdgeWeightedInstance::addVertex(std::string name, Rational prize) {
  if (prize < 0) throw PreconditionError("negative vertex prize");
  VertexId id = names.size();
  if (name.empty()) name = std::to_string(id);
  names.push_back(std::move(name));
  prizes.push_back(std::move(prize));
  return id;
}

void EdgeWeightedInstance::addEdge(VertexId u, VertexId v, Rational cost) {
  if (u >= numVertices() || v >= numVertices()) throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("self-loop in edge-weighted instance");
  if (cost < 0) throw PreconditionError("negative edge cost");
  edges.push_back(Edge{u, v, std::move(cost)});
}

CostFunction::CostFunction(const Instance& base) : base_(&base), zeroed_(base.numVertices(), false) {}

CostFunction::CostFunction(const Instance& base, std::span<const VertexId> zeroed) : CostFunction(base) {
  for (VertexId v : zeroed) zeroed_.at(v) = true;
}

CostFunction CostFunction::withZeroed(std::span<const VertexId> more) const {
  CostFunction copy = *this;
  for (VertexId v : more) copy.zeroed_.at(v) = true;
  return copy;
}

std::vector<VertexId> CostFunction::zeroedVertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < zeroed_.size(); ++v) {
    if (zeroed_[v]) out.push_back(v);
  }
  return out;
}

}  // namespace nwsteiner
