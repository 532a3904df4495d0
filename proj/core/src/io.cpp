#include "nwsteiner/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nwsteiner/graph.hpp"

namespace nwsteiner::io {

using Json = nlohmann::ordered_json;

namespace {

Json parseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rationalFrom(const Json& value, const std::string& where) {
  try {
    if (value.is_string()) return parseRational(value.get<std::string>());
    if (value.is_number()) return parseRational(value.dump());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number or a \"p/q\" string");
}

std::string nameFrom(const Json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw ParseError(where + ": expected a vertex id");
}

VertexId vertexFrom(const Instance& instance, const Json& value, const std::string& where) {
  std::string name = nameFrom(value, where);
  auto v = instance.findVertex(name);
  if (!v) throw ParseError(where + ": unknown vertex '" + name + "'");
  return *v;
}

const Json& field(const Json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

Instance instanceFromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance: expected an object");
  Instance instance;
  const Json& vertices = field(doc, "vertices", "instance");
  if (!vertices.is_array()) throw ParseError("vertices: expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const Json& v = vertices[i];
    std::string name = nameFrom(field(v, "id", where), where + ".id");
    if (instance.findVertex(name)) throw ParseError(where + ": duplicate id '" + name + "'");
    Rational cost = v.contains("cost") ? rationalFrom(v["cost"], where + ".cost") : Rational(0);
    Rational prize = v.contains("prize") ? rationalFrom(v["prize"], where + ".prize") : Rational(0);
    if (cost < 0 || prize < 0) throw ParseError(where + ": negative cost or prize");
    instance.addVertex(name, cost, prize);
  }
  if (doc.contains("edges")) {
    const Json& edges = doc["edges"];
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!edges[i].is_array() || edges[i].size() != 2) throw ParseError(where + ": expected [u, v]");
      VertexId u = vertexFrom(instance, edges[i][0], where);
      VertexId w = vertexFrom(instance, edges[i][1], where);
      try {
        instance.addEdge(u, w);
      } catch (const PreconditionError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  if (doc.contains("demands")) {
    const Json& demands = doc["demands"];
    for (std::size_t i = 0; i < demands.size(); ++i) {
      const std::string where = "demands[" + std::to_string(i) + "]";
      const Json& d = demands[i];
      VertexId s = vertexFrom(instance, field(d, "s", where), where + ".s");
      VertexId t = vertexFrom(instance, field(d, "t", where), where + ".t");
      Rational penalty = rationalFrom(field(d, "penalty", where), where + ".penalty");
      try {
        instance.addDemand(s, t, penalty);
      } catch (const PreconditionError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  if (doc.contains("root") && !doc["root"].is_null()) instance.setRoot(vertexFrom(instance, doc["root"], "root"));
  if (doc.contains("budget") && !doc["budget"].is_null()) {
    Rational budget = rationalFrom(doc["budget"], "budget");
    if (budget < 0) throw ParseError("budget: negative");
    instance.setBudget(budget);
  }
  return instance;
}

Json instanceJson(const Instance& instance) {
  Json doc;
  Json vertices = Json::array();
  for (VertexId v = 0; v < instance.numVertices(); ++v) {
    vertices.push_back({{"id", instance.name(v)}, {"cost", toString(instance.cost(v))},
                        {"prize", toString(instance.prize(v))}});
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& [u, v] : instance.edges()) edges.push_back({instance.name(u), instance.name(v)});
  doc["edges"] = std::move(edges);
  Json demands = Json::array();
  for (const Demand& d : instance.demands()) {
    demands.push_back({{"s", instance.name(d.s)}, {"t", instance.name(d.t)}, {"penalty", toString(d.penalty)}});
  }
  doc["demands"] = std::move(demands);
  if (instance.root()) doc["root"] = instance.name(*instance.root());
  if (instance.budget()) doc["budget"] = toString(*instance.budget());
  return doc;
}

Json namesOf(const Instance& instance, std::span<const VertexId> vertices) {
  Json out = Json::array();
  for (VertexId v : vertices) out.push_back(instance.name(v));
  return out;
}

std::size_t countFrom(const Json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
    throw ParseError(where + ": expected a nonnegative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

Instance parseInstanceJson(std::string_view text) { return instanceFromJson(parseJson(text)); }

std::string instanceToJson(const Instance& instance) { return instanceJson(instance).dump(2) + "\n"; }

PendantInstance parsePendantInstanceJson(std::string_view text) {
  Json doc = parseJson(text);
  PendantInstance out = PendantInstance::plain(instanceFromJson(doc));
  if (doc.contains("pendants")) {
    for (const auto& [name, count] : doc["pendants"].items()) {
      VertexId v = vertexFrom(out.graph, Json(name), "pendants");
      out.pendants[v] = countFrom(count, "pendants." + name);
    }
  }
  if (doc.contains("terminals")) {
    for (const Json& t : doc["terminals"]) out.terminal[vertexFrom(out.graph, t, "terminals")] = true;
  }
  if (doc.contains("pendantsAreTerminals")) out.pendantsAreTerminals = doc["pendantsAreTerminals"].get<bool>();
  return out;
}

std::string pendantInstanceToJson(const PendantInstance& instance) {
  Json doc = instanceJson(instance.graph);
  Json pendants = Json::object();
  for (VertexId v = 0; v < instance.graph.numVertices(); ++v) {
    if (instance.pendants[v] > 0) pendants[instance.graph.name(v)] = instance.pendants[v];
  }
  doc["pendants"] = std::move(pendants);
  Json terminals = Json::array();
  for (VertexId v = 0; v < instance.graph.numVertices(); ++v) {
    if (instance.terminal[v]) terminals.push_back(instance.graph.name(v));
  }
  doc["terminals"] = std::move(terminals);
  doc["pendantsAreTerminals"] = instance.pendantsAreTerminals;
  return doc.dump(2) + "\n";
}

std::string certificateToJson(const pcsf::DualCertificate& certificate, const Rational& objective) {
  Json rounds = Json::array();
  for (const auto& r : certificate.rounds) {
    rounds.push_back({{"coreCount", r.coreCount},
                      {"radius", toString(r.radius)},
                      {"removed", r.coresRemoved},
                      {"payment", toString(r.payment)},
                      {"kind", pcsf::toString(r.kind)},
                      {"target", r.target},
                      {"bought", r.bought},
                      {"deactivated", r.deactivated}});
  }
  Json doc;
  doc["rounds"] = std::move(rounds);
  doc["objective"] = toString(objective);
  doc["lowerBound"] = toString(certificate.lowerBound());
  doc["totalCost"] = toString(certificate.totalCost);
  doc["totalPenaltyPaid"] = toString(certificate.totalPenaltyPaid);
  return doc.dump(2) + "\n";
}

CertificateFile parseCertificateJson(std::string_view text) {
  Json doc = parseJson(text);
  if (!doc.is_object()) throw ParseError("certificate: expected an object");
  CertificateFile out;
  const Json& rounds = field(doc, "rounds", "certificate");
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const std::string where = "rounds[" + std::to_string(i) + "]";
    const Json& r = rounds[i];
    pcsf::CertificateRound round;
    round.coreCount = countFrom(field(r, "coreCount", where), where + ".coreCount");
    round.radius = rationalFrom(field(r, "radius", where), where + ".radius");
    round.coresRemoved = countFrom(field(r, "removed", where), where + ".removed");
    round.payment = rationalFrom(field(r, "payment", where), where + ".payment");
    const std::string kind = field(r, "kind", where).get<std::string>();
    if (kind == "penalty") {
      round.kind = pcsf::EventKind::Penalty;
    } else if (kind == "vertex") {
      round.kind = pcsf::EventKind::Vertex;
    } else {
      throw ParseError(where + ".kind: expected \"penalty\" or \"vertex\"");
    }
    if (r.contains("target")) round.target = countFrom(r["target"], where + ".target");
    if (r.contains("bought")) {
      for (const Json& v : r["bought"]) round.bought.push_back(countFrom(v, where + ".bought"));
    }
    if (r.contains("deactivated")) {
      for (const Json& d : r["deactivated"]) round.deactivated.push_back(countFrom(d, where + ".deactivated"));
    }
    out.certificate.rounds.push_back(std::move(round));
  }
  out.objective = rationalFrom(field(doc, "objective", "certificate"), "objective");
  out.lowerBound = rationalFrom(field(doc, "lowerBound", "certificate"), "lowerBound");
  if (doc.contains("totalCost")) out.certificate.totalCost = rationalFrom(doc["totalCost"], "totalCost");
  if (doc.contains("totalPenaltyPaid")) {
    out.certificate.totalPenaltyPaid = rationalFrom(doc["totalPenaltyPaid"], "totalPenaltyPaid");
  }
  return out;
}

std::string pcsfSolutionToJson(const Instance& instance, const pcsf::PcsfSolution& solution,
                               const Rational& lowerBound) {
  Json doc;
  doc["objective"] = toString(solution.objective);
  doc["lowerBound"] = toString(lowerBound);
  doc["bought"] = namesOf(instance, solution.bought);
  doc["satisfiedDemands"] = solution.satisfiedDemands;
  doc["paidDemands"] = solution.paidDemands;
  return doc.dump(2) + "\n";
}

std::string treeToJson(const Instance& instance, const budgeted::RootedTree& tree, const Rational& budget) {
  Json doc;
  doc["root"] = instance.name(tree.root);
  doc["vertices"] = namesOf(instance, tree.vertices);
  doc["cost"] = toString(tree.cost);
  doc["prize"] = toString(tree.prize);
  auto ratio = tree.ratio();
  doc["ratio"] = ratio ? Json(toString(*ratio)) : Json(nullptr);
  doc["class"] = budgeted::toString(budgeted::classifyTree(instance, tree.vertices, budget));
  return doc.dump(2) + "\n";
}

std::string treeOptimumToJson(const Instance& instance, const oracle::TreeOptimum& optimum) {
  Json doc;
  doc["value"] = toString(optimum.value);
  doc["vertices"] = namesOf(instance, optimum.vertices);
  return doc.dump(2) + "\n";
}

std::string reductionDescriptorToJson(const reductions::ReductionMap& map) {
  Json doc;
  doc["kind"] = reductions::toString(map.kind);
  doc["variant"] = oracle::toString(map.query.variant);
  doc["kPrime"] = map.kPrime;
  if (map.query.variant == oracle::TreeVariant::Quota) doc["quota"] = toString(map.query.quota);
  doc["root"] = map.query.root ? Json(map.transformed.graph.name(*map.query.root)) : Json(nullptr);
  doc["originalVertices"] = map.originalVertices;
  doc["liftBack"] = "keep vertices with id below originalVertices";
  return doc.dump(2) + "\n";
}

Instance parseStp(std::istream& in) {
  struct RawEdge {
    std::size_t u, v;
    Rational w;
  };
  std::size_t n = 0;
  std::vector<RawEdge> edges;
  std::vector<std::size_t> terminals;
  std::map<std::size_t, Rational> terminalPrizes;
  std::vector<Rational> nodeWeights;
  std::size_t sequentialWeights = 0;
  std::optional<std::size_t> root;

  auto checkNode = [&](std::size_t v, std::size_t line) {
    if (v < 1 || v > n) throw ParseError("line " + std::to_string(line) + ": node " + std::to_string(v) + " out of range");
  };
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    std::istringstream ls(text);
    std::string key;
    if (!(ls >> key)) continue;
    std::string lower = key;
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto readNode = [&]() {
      long long v = 0;
      if (!(ls >> v) || v < 0) throw ParseError("line " + std::to_string(line) + ": expected a node number");
      checkNode(static_cast<std::size_t>(v), line);
      return static_cast<std::size_t>(v - 1);
    };
    auto readRational = [&]() {
      std::string token;
      if (!(ls >> token)) throw ParseError("line " + std::to_string(line) + ": expected a number");
      return parseRational(token);
    };
    if (lower == "nodes") {
      if (!(ls >> n)) throw ParseError("line " + std::to_string(line) + ": bad Nodes line");
      nodeWeights.assign(n, Rational(0));
    } else if (lower == "e" || lower == "a") {
      std::size_t u = readNode();
      std::size_t v = readNode();
      Rational w = 0;
      std::string token;
      if (ls >> token) w = parseRational(token);
      if (w < 0) throw ParseError("line " + std::to_string(line) + ": negative edge weight");
      edges.push_back({u, v, w});
    } else if (lower == "t") {
      terminals.push_back(readNode());
    } else if (lower == "tp") {
      std::size_t v = readNode();
      terminalPrizes[v] = readRational();
    } else if (lower == "root") {
      root = readNode();
    } else if (lower == "nw") {
      std::vector<std::string> tokens;
      for (std::string token; ls >> token;) tokens.push_back(token);
      if (tokens.size() == 2) {
        long long v = std::stoll(tokens[0]);
        checkNode(static_cast<std::size_t>(v), line);
        nodeWeights[static_cast<std::size_t>(v - 1)] = parseRational(tokens[1]);
      } else if (tokens.size() == 1) {
        if (sequentialWeights >= n) throw ParseError("line " + std::to_string(line) + ": too many NW lines");
        nodeWeights[sequentialWeights++] = parseRational(tokens[0]);
      } else {
        throw ParseError("line " + std::to_string(line) + ": bad NW line");
      }
    } else if (lower == "eof") {
      break;
    }
  }
  if (n == 0) throw ParseError("STP: missing Nodes line");
  for (const Rational& w : nodeWeights) {
    if (w < 0) throw ParseError("STP: negative node weight");
  }

  bool edgeWeighted = false;
  for (const auto& e : edges) edgeWeighted = edgeWeighted || e.w != 0;
  Instance instance;
  if (edgeWeighted) {
    EdgeWeightedInstance ew;
    for (std::size_t v = 0; v < n; ++v) ew.addVertex(std::to_string(v + 1));
    for (const auto& e : edges) ew.addEdge(e.u, e.v, e.w);
    instance = subdivideEdgeCosts(ew);
    for (std::size_t v = 0; v < n; ++v) instance.setCost(v, nodeWeights[v]);
  } else {
    for (std::size_t v = 0; v < n; ++v) instance.addVertex(std::to_string(v + 1), nodeWeights[v]);
    for (const auto& e : edges) {
      if (e.u != e.v && !instance.hasEdge(e.u, e.v)) instance.addEdge(e.u, e.v);
    }
  }
  for (const auto& [v, p] : terminalPrizes) instance.setPrize(v, p);
  if (root) instance.setRoot(*root);

  std::vector<std::size_t> plain;
  for (std::size_t t : terminals) {
    if (!terminalPrizes.count(t)) plain.push_back(t);
  }
  if (!plain.empty()) {
    const std::size_t anchor = root ? *root : plain.front();
    const Rational penalty = instance.totalCost() + 1;
    for (std::size_t t : plain) {
      if (t != anchor) instance.addDemand(anchor, t, penalty);
    }
  }
  return instance;
}

gen::CnfFormula parseCnf(std::istream& in) {
  gen::CnfFormula formula;
  bool header = false;
  std::size_t declaredClauses = 0;
  std::vector<int> current;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    std::istringstream ls(text);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c' || first == "%") continue;
    if (first == "p") {
      std::string format;
      if (!(ls >> format >> formula.variables >> declaredClauses) || format != "cnf") {
        throw ParseError("line " + std::to_string(line) + ": expected 'p cnf <variables> <clauses>'");
      }
      header = true;
      continue;
    }
    if (!header) throw ParseError("line " + std::to_string(line) + ": clause before the 'p cnf' header");
    std::istringstream all(text);
    for (std::string token; all >> token;) {
      int literal = 0;
      try {
        literal = std::stoi(token);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": bad literal '" + token + "'");
      }
      if (literal == 0) {
        formula.clauses.push_back(current);
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::abs(literal)) > formula.variables) {
        throw ParseError("line " + std::to_string(line) + ": literal " + token + " out of range");
      }
      current.push_back(literal);
    }
  }
  if (!header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) formula.clauses.push_back(current);
  if (formula.clauses.size() != declaredClauses) {
    throw ParseError("header declares " + std::to_string(declaredClauses) + " clauses, found " +
                     std::to_string(formula.clauses.size()));
  }
  return formula;
}

std::string cnfToString(const gen::CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variables << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (int literal : clause) out << literal << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

Instance readInstanceFile(const std::filesystem::path& path) {
  if (path.extension() == ".stp") {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parseStp(in);
  }
  return parseInstanceJson(readFile(path));
}

}  // namespace nwsteiner::io
