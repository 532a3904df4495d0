// nwsteiner: command-line front end for the solvers, generators, reductions,
// oracles and verifiers.
//
// Exit codes: 0 success, 1 infeasible input or failed verification,
// 2 usage or input error, 3 oracle limits exceeded.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "bench.hpp"
#include "nwsteiner/budgeted.hpp"
#include "nwsteiner/graph.hpp"
#include "nwsteiner/instance_gen.hpp"
#include "nwsteiner/io.hpp"
#include "nwsteiner/oracle.hpp"
#include "nwsteiner/pcsf.hpp"
#include "nwsteiner/reductions.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace nwsteiner;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kOracleLimit = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string instancePath;
  std::string secondPath;
  std::string outputPath;
  std::string certificatePath;
  std::string treePath;
  std::string solutionPath;
  std::string descriptorPath;
  std::string cnfPath;
  std::string root;
  std::string budget;
  std::string epsilon;
  std::string gamma;
  std::string quota;
  std::string backend = "exact";
  std::string kind;
  std::string terminals;
  std::string topology = "tree";
  std::string seeds = "1..20";
  std::string suite;
  std::string scale = "1";
  std::string K;
  std::uint64_t k = 0;
  std::uint64_t gapB = 0;
  std::uint64_t gapK = 0;
  std::uint64_t seed = 1;
  std::size_t vertices = 8;
  std::size_t demands = 0;
  std::size_t chords = 2;
  unsigned edgePercent = 30;
  long maxCost = 10;
  long maxPrize = 10;
  long maxPenalty = 20;
  unsigned long denominator = 1;
  bool rooted = false;
  bool steiner = false;
};

void emit(const Options& options, const Json& result) {
  if (options.format == "json") {
    std::cout << result.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : result.items()) {
    std::cout << key << ": ";
    if (value.is_string()) {
      std::cout << value.get<std::string>();
    } else if (value.is_array()) {
      bool first = true;
      for (const auto& item : value) {
        if (!first) std::cout << ' ';
        std::cout << (item.is_string() ? item.get<std::string>() : item.dump());
        first = false;
      }
    } else {
      std::cout << value.dump();
    }
    std::cout << "\n";
  }
}

void writeOrPrint(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    io::writeFile(path, contents);
  }
}

Rational rationalOption(const std::string& text, const char* name) {
  try {
    return parseRational(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

VertexId vertexByName(const Instance& instance, const std::string& name) {
  auto v = instance.findVertex(name);
  if (!v) throw UsageError("unknown vertex '" + name + "'");
  return *v;
}

std::optional<VertexId> rootOf(const Options& options, const Instance& instance) {
  if (!options.root.empty()) return vertexByName(instance, options.root);
  return instance.root();
}

Rational budgetOf(const Options& options, const Instance& instance) {
  if (!options.budget.empty()) return rationalOption(options.budget, "budget");
  if (instance.budget()) return *instance.budget();
  throw UsageError("a budget is required (--budget or \"budget\" in the instance)");
}

std::vector<VertexId> verticesFromJson(const Instance& instance, const Json& list) {
  std::vector<VertexId> out;
  for (const auto& item : list) {
    out.push_back(vertexByName(instance, item.is_string() ? item.get<std::string>() : item.dump()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> terminalList(const Options& options, const Instance& instance) {
  if (options.terminals.empty()) return instance.terminals();
  std::vector<VertexId> out;
  std::stringstream in(options.terminals);
  for (std::string name; std::getline(in, name, ',');) {
    if (!name.empty()) out.push_back(vertexByName(instance, name));
  }
  return out;
}

Json parseJsonFile(const std::string& path) {
  try {
    return Json::parse(io::readFile(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json namesJson(const Instance& instance, const std::vector<VertexId>& vertices) {
  Json out = Json::array();
  for (VertexId v : vertices) out.push_back(instance.name(v));
  return out;
}

Json treeJson(const Instance& instance, const budgeted::RootedTree& tree, const Rational& budget) {
  return Json::parse(io::treeToJson(instance, tree, budget));
}

// ------------------------------------------------------------------ solve

int solvePcsfCommand(const Options& options, std::optional<std::string> pcstRoot) {
  Instance instance = io::readInstanceFile(options.instancePath);
  if (pcstRoot) instance = pcsf::pcstInstance(instance, vertexByName(instance, *pcstRoot));
  const std::size_t n = instance.numVertices();
  Instance normalized = normalizeDemands(instance);
  pcsf::PcsfResult result = pcsf::solvePcsf(normalized);
  if (!options.certificatePath.empty()) {
    io::writeFile(options.certificatePath, io::certificateToJson(result.certificate, result.solution.objective));
  }
  std::vector<VertexId> bought;
  for (VertexId v : result.solution.bought) {
    if (v < n) bought.push_back(v);
  }
  Json out;
  out["objective"] = toString(result.solution.objective);
  out["lowerBound"] = toString(result.certificate.lowerBound());
  out["rounds"] = result.certificate.rounds.size();
  out["bought"] = namesJson(instance, bought);
  out["satisfiedDemands"] = result.solution.satisfiedDemands;
  out["paidDemands"] = result.solution.paidDemands;
  emit(options, out);
  return kOk;
}

budgeted::Backend backendOf(const Options& options) {
  if (options.backend == "exact") return budgeted::Backend::Exact;
  if (options.backend == "lagrangian") return budgeted::Backend::Lagrangian;
  throw UsageError("--backend must be exact or lagrangian");
}

int solveBudgetedCommand(const Options& options) {
  Instance instance = io::readInstanceFile(options.instancePath);
  const Rational B = budgetOf(options, instance);
  const auto limits = oracle::OracleBudget::fromEnvironment();
  const auto backend = backendOf(options);
  budgeted::RootedTree tree;
  if (auto root = rootOf(options, instance)) {
    const Rational eps = options.epsilon.empty() ? Rational(1, 2) : rationalOption(options.epsilon, "epsilon");
    tree = budgeted::solveRootedBudgeted(instance, *root, B, eps, backend, limits);
  } else {
    tree = budgeted::solveUnrootedBudgeted(instance, B, backend, limits);
  }
  emit(options, treeJson(instance, tree, B));
  return kOk;
}

// ------------------------------------------------------------------ trim

budgeted::RootedTree readTree(const Instance& instance, const std::string& path) {
  Json doc = parseJsonFile(path);
  if (!doc.contains("root") || !doc.contains("vertices")) throw ParseError(path + ": expected root and vertices");
  const Json& rootField = doc["root"];
  VertexId root = vertexByName(instance, rootField.is_string() ? rootField.get<std::string>() : rootField.dump());
  auto vertices = verticesFromJson(instance, doc["vertices"]);
  return budgeted::RootedTree::fromVertexSet(instance, root, vertices);
}

int trimCommand(const Options& options, bool rooted) {
  Instance instance = io::readInstanceFile(options.instancePath);
  const Rational B = budgetOf(options, instance);
  budgeted::RootedTree tree = readTree(instance, options.treePath);
  std::optional<Rational> gamma;
  if (!options.gamma.empty()) gamma = rationalOption(options.gamma, "gamma");
  budgeted::RootedTree trimmed;
  if (rooted) {
    const Rational eps = options.epsilon.empty() ? Rational(1, 2) : rationalOption(options.epsilon, "epsilon");
    budgeted::ProperInstance proper = budgeted::makeProper(instance, tree.root, B);
    std::vector<std::optional<VertexId>> local(instance.numVertices());
    for (VertexId i = 0; i < proper.original.size(); ++i) local[proper.original[i]] = i;
    std::vector<VertexId> inside;
    for (VertexId v : tree.vertices) {
      if (!local[v]) throw PreconditionError("tree vertex " + instance.name(v) + " is farther than B from the root");
      inside.push_back(*local[v]);
    }
    auto localTree = budgeted::RootedTree::fromVertexSet(proper.instance, proper.root, inside);
    Rational g = gamma ? *gamma : Rational(localTree.prize / localTree.cost);
    auto result = budgeted::trimRooted(localTree, proper, g, eps);
    std::vector<VertexId> mapped;
    for (VertexId v : result.vertices) mapped.push_back(proper.original[v]);
    std::sort(mapped.begin(), mapped.end());
    trimmed = budgeted::RootedTree::fromVertexSet(instance, tree.root, mapped);
  } else {
    trimmed = budgeted::trimUnrooted(tree, instance, B, gamma);
  }
  emit(options, treeJson(instance, trimmed, B));
  return kOk;
}

// ------------------------------------------------------------------ reduce

int reduceCommand(const Options& options) {
  auto kind = reductions::reductionKindFromString(options.kind);
  if (!kind) {
    throw UsageError("unknown reduction '" + options.kind +
                     "' (ksteiner-to-kmst, rooted-to-unrooted-kmst, quota-to-ksteiner, ksteiner-from-quota)");
  }
  Instance instance = io::readInstanceFile(options.instancePath);
  reductions::ReductionMap map;
  switch (*kind) {
    case reductions::ReductionKind::KSteinerToKMst:
      map = reductions::kSteinerToKMst(instance, terminalList(options, instance), options.k);
      break;
    case reductions::ReductionKind::RootedToUnrootedKMst: {
      auto root = rootOf(options, instance);
      if (!root) throw UsageError("rooted-to-unrooted-kmst needs --root");
      map = reductions::rootedToUnrootedKMst(instance, *root, options.k);
      break;
    }
    case reductions::ReductionKind::QuotaToKSteiner:
      if (options.quota.empty() || options.epsilon.empty()) throw UsageError("quota-to-ksteiner needs --quota and --epsilon");
      map = reductions::quotaToKSteiner(instance, rationalOption(options.quota, "quota"),
                                        rationalOption(options.epsilon, "epsilon"));
      break;
    case reductions::ReductionKind::KSteinerFromQuota:
      map = reductions::kSteinerFromQuota(instance, terminalList(options, instance), options.k);
      break;
  }
  writeOrPrint(options.outputPath, io::pendantInstanceToJson(map.transformed));
  std::string descriptor = options.descriptorPath;
  if (descriptor.empty() && !options.outputPath.empty() && options.outputPath != "-") {
    std::filesystem::path out(options.outputPath);
    descriptor = (out.parent_path() / (out.stem().string() + ".liftback.json")).string();
  }
  if (!descriptor.empty()) io::writeFile(descriptor, io::reductionDescriptorToJson(map));
  std::cerr << "reduction " << reductions::toString(map.kind) << ": k' = " << map.kPrime << "\n";
  return kOk;
}

// ------------------------------------------------------------------ generate

int generateCommand(const Options& options, const std::string& what) {
  if (what == "gap") {
    if (options.gapB < 1 || options.gapK < 1) throw UsageError("generate gap needs --B >= 1 and --k >= 1");
    auto gap = gen::genGapInstance(options.gapB, options.gapK);
    writeOrPrint(options.outputPath, io::instanceToJson(gap.nodeWeighted));
    std::cerr << "fractional value " << toString(gap.fractionalValue) << ", integral optimum 1\n";
  } else if (what == "satnw") {
    if (options.cnfPath.empty()) throw UsageError("generate satnw needs --cnf");
    std::ifstream in(options.cnfPath);
    if (!in) throw ParseError("cannot open " + options.cnfPath);
    gen::CnfFormula formula = io::parseCnf(in);
    const Rational eps = options.epsilon.empty() ? Rational(1, 2) : rationalOption(options.epsilon, "epsilon");
    const auto augmented = gen::augmentFormula(formula);
    const Rational K = options.K.empty() ? Rational(static_cast<unsigned long>(augmented.variables + 1))
                                         : rationalOption(options.K, "K");
    auto sat = gen::genSatNw(formula, eps, K);
    writeOrPrint(options.outputPath, io::instanceToJson(sat.nodeWeighted));
    std::cerr << "augmented with " << sat.addedClauses << " clauses; m = " << sat.formula.clauses.size()
              << ", K = " << toString(sat.K) << "\n";
  } else {
    gen::RandomParams params;
    params.seed = options.seed;
    params.vertices = options.vertices;
    if (options.topology == "tree") {
      params.topology = gen::Topology::TreePlusChords;
    } else if (options.topology == "er") {
      params.topology = gen::Topology::ErdosRenyi;
    } else {
      throw UsageError("--topology must be tree or er");
    }
    params.edgePercent = options.edgePercent;
    params.chords = options.chords;
    params.maxCost = options.maxCost;
    params.maxPrize = options.maxPrize;
    params.maxPenalty = options.maxPenalty;
    params.costDenominator = options.denominator;
    params.demands = options.demands;
    params.rooted = options.rooted;
    if (!options.budget.empty()) params.budget = rationalOption(options.budget, "budget");
    writeOrPrint(options.outputPath, io::instanceToJson(gen::genRandom(params)));
  }
  return kOk;
}

// ------------------------------------------------------------------ oracle

int oracleCommand(const Options& options, const std::string& what) {
  const auto limits = oracle::OracleBudget::fromEnvironment();
  Json out;
  if (what == "kmst" || what == "quota") {
    PendantInstance pendant = io::parsePendantInstanceJson(io::readFile(options.instancePath));
    oracle::TreeQuery query;
    if (what == "kmst") {
      query.variant = options.steiner ? oracle::TreeVariant::KSteiner : oracle::TreeVariant::KMst;
      query.k = options.k;
    } else {
      if (options.quota.empty()) throw UsageError("oracle quota needs --quota");
      query.variant = oracle::TreeVariant::Quota;
      query.quota = rationalOption(options.quota, "quota");
    }
    query.root = rootOf(options, pendant.graph);
    auto best = oracle::exactQuotaKmst(pendant, query, limits);
    if (!best) {
      std::cerr << "infeasible\n";
      return kFailed;
    }
    out["variant"] = oracle::toString(query.variant);
    out["cost"] = toString(best->value);
    out["vertices"] = namesJson(pendant.graph, best->vertices);
    emit(options, out);
    return kOk;
  }
  Instance instance = io::readInstanceFile(options.instancePath);
  if (what == "pcsf") {
    const std::size_t n = instance.numVertices();
    auto best = oracle::exactPcsf(normalizeDemands(instance), limits);
    std::vector<VertexId> bought;
    for (VertexId v : best.bought) {
      if (v < n) bought.push_back(v);
    }
    out["objective"] = toString(best.objective);
    out["bought"] = namesJson(instance, bought);
  } else if (what == "budgeted") {
    auto best = oracle::exactBudgeted(instance, rootOf(options, instance), budgetOf(options, instance), limits);
    if (!best) {
      std::cerr << "infeasible: the root alone exceeds the budget\n";
      return kFailed;
    }
    out["prize"] = toString(best->value);
    out["cost"] = toString(costOf(instance, best->vertices));
    out["vertices"] = namesJson(instance, best->vertices);
  } else {
    auto best = oracle::exactNetWorth(instance, rootOf(options, instance), limits);
    out["netWorth"] = toString(best.value);
    out["vertices"] = namesJson(instance, best.vertices);
  }
  emit(options, out);
  return kOk;
}

// ------------------------------------------------------------------ verify

int verifyDualCommand(const Options& options) {
  auto file = io::parseCertificateJson(io::readFile(options.instancePath));
  Instance instance = normalizeDemands(io::readInstanceFile(options.secondPath));
  auto problems = pcsf::checkCertificate(instance, file.certificate, file.objective, file.lowerBound);
  Json out;
  out["valid"] = problems.empty();
  out["rounds"] = file.certificate.rounds.size();
  out["problems"] = problems;
  emit(options, out);
  return problems.empty() ? kOk : kFailed;
}

int verifySolutionCommand(const Options& options) {
  Instance instance = io::readInstanceFile(options.instancePath);
  oracle::ProblemKind kind;
  if (options.kind == "pcsf") {
    kind = oracle::ProblemKind::Pcsf;
    // matches `solve pcsf`: demands sit on fresh zero-cost leaves
    instance = normalizeDemands(instance);
  } else if (options.kind == "budgeted") {
    kind = oracle::ProblemKind::Budgeted;
  } else if (options.kind == "networth") {
    kind = oracle::ProblemKind::NetWorth;
  } else {
    throw UsageError("--kind must be pcsf, budgeted or networth");
  }
  if (!options.budget.empty()) instance.setBudget(rationalOption(options.budget, "budget"));
  if (!options.root.empty()) instance.setRoot(vertexByName(instance, options.root));
  Json doc = parseJsonFile(options.solutionPath);
  oracle::ClaimedSolution claim;
  if (doc.contains("vertices")) {
    claim.vertices = verticesFromJson(instance, doc["vertices"]);
  } else if (doc.contains("bought")) {
    claim.vertices = verticesFromJson(instance, doc["bought"]);
  } else {
    throw ParseError(options.solutionPath + ": expected \"vertices\" or \"bought\"");
  }
  auto optionalRational = [&](const char* key) -> std::optional<Rational> {
    if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
    const Json& value = doc[key];
    return parseRational(value.is_string() ? value.get<std::string>() : value.dump());
  };
  claim.objective = optionalRational(kind == oracle::ProblemKind::NetWorth ? "netWorth" : "objective");
  claim.cost = optionalRational("cost");
  claim.prize = optionalRational("prize");
  auto report = oracle::validateSolution(instance, claim, kind);
  Json out;
  out["valid"] = report.ok;
  out["cost"] = toString(report.cost);
  out["prize"] = toString(report.prize);
  out["objective"] = toString(report.objective);
  out["problems"] = report.problems;
  emit(options, out);
  return report.ok ? kOk : kFailed;
}

int verifyFlowCommand(const Options& options) {
  if (options.gapB < 1 || options.gapK < 1) throw UsageError("verify flow needs --B >= 1 and --k >= 1");
  auto gap = gen::genGapInstance(options.gapB, options.gapK);
  const Rational factor = rationalOption(options.scale, "scale");
  for (auto& path : gap.flow.paths) path.value *= factor;
  for (auto& x : gap.flow.edgeValue) x *= factor;
  const Rational claimed = gap.fractionalValue * factor;
  const bool ok = gen::verifyFlowSolution(gap.edgeWeighted, *gap.edgeWeighted.root, *gap.edgeWeighted.budget,
                                          gap.flow, claimed);
  Json out;
  out["valid"] = ok;
  out["fractionalValue"] = toString(claimed);
  out["B"] = options.gapB;
  out["k"] = options.gapK;
  emit(options, out);
  return ok ? kOk : kFailed;
}

// ------------------------------------------------------------------ wiring

void addFormat(CLI::App* app, Options& options) {
  app->add_option("--format", options.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  Options options;
  std::function<int()> run;
  CLI::App app{"Node-weighted Steiner forest and budgeted tree toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  addFormat(&app, options);

  // solve
  auto* solve = app.add_subcommand("solve", "Run a solver");
  solve->require_subcommand(1);
  {
    auto* cmd = solve->add_subcommand("pcsf", "Prize-collecting Steiner forest (primal-dual); demands are moved onto fresh zero-cost leaves first, so endpoint costs count");
    cmd->add_option("instance", options.instancePath, "Instance file (.json or .stp)")->required();
    cmd->add_option("--certificate", options.certificatePath, "Write the dual certificate here");
    cmd->callback([&] { run = [&] { return solvePcsfCommand(options, std::nullopt); }; });
  }
  {
    auto* cmd = solve->add_subcommand("pcst", "Prize-collecting Steiner tree, demands (root, v) with penalty prize(v)");
    cmd->add_option("instance", options.instancePath)->required();
    cmd->add_option("--root", options.root, "Root vertex")->required();
    cmd->add_option("--certificate", options.certificatePath);
    cmd->callback([&] { run = [&] { return solvePcsfCommand(options, options.root); }; });
  }
  {
    auto* cmd = solve->add_subcommand("budgeted", "Budgeted maximum-prize tree");
    cmd->add_option("instance", options.instancePath)->required();
    cmd->add_option("--budget", options.budget, "Budget B (rational)");
    cmd->add_option("--root", options.root, "Root vertex; unrooted when absent");
    cmd->add_option("--epsilon", options.epsilon, "Budget violation for the rooted variant (default 1/2)");
    cmd->add_option("--backend", options.backend, "exact or lagrangian")->check(CLI::IsMember({"exact", "lagrangian"}));
    cmd->callback([&] { run = [&] { return solveBudgetedCommand(options); }; });
  }

  // trim
  auto* trim = app.add_subcommand("trim", "Trim a tree to the budget window");
  trim->require_subcommand(1);
  for (const char* mode : {"rooted", "unrooted"}) {
    auto* cmd = trim->add_subcommand(mode);
    cmd->add_option("instance", options.instancePath)->required();
    cmd->add_option("--tree", options.treePath, "JSON with root and vertices")->required();
    cmd->add_option("--budget", options.budget);
    cmd->add_option("--gamma", options.gamma, "Ratio to preserve (default: the tree's own)");
    if (std::string(mode) == "rooted") cmd->add_option("--epsilon", options.epsilon);
    const bool rooted = std::string(mode) == "rooted";
    cmd->callback([&, rooted] { run = [&, rooted] { return trimCommand(options, rooted); }; });
  }

  // reduce
  {
    auto* cmd = app.add_subcommand("reduce", "Transform an instance between k-MST, k-Steiner and quota problems");
    cmd->add_option("kind", options.kind, "Reduction kind")->required();
    cmd->add_option("instance", options.instancePath)->required();
    cmd->add_option("--k", options.k, "k");
    cmd->add_option("--root", options.root);
    cmd->add_option("--terminals", options.terminals, "Comma-separated terminal names (default: demand endpoints)");
    cmd->add_option("--quota", options.quota);
    cmd->add_option("--epsilon", options.epsilon);
    cmd->add_option("-o,--output", options.outputPath, "Transformed instance (default stdout)");
    cmd->add_option("--liftback", options.descriptorPath, "Lift-back descriptor (default <output>.liftback.json)");
    cmd->callback([&] { run = [&] { return reduceCommand(options); }; });
  }

  // generate
  auto* generate = app.add_subcommand("generate", "Generate instances");
  generate->require_subcommand(1);
  {
    auto* cmd = generate->add_subcommand("gap", "Integrality-gap family");
    cmd->add_option("--B", options.gapB)->required();
    cmd->add_option("--k", options.gapK)->required();
    cmd->add_option("-o,--output", options.outputPath);
    cmd->callback([&] { run = [&] { return generateCommand(options, "gap"); }; });
  }
  {
    auto* cmd = generate->add_subcommand("satnw", "Net-worth gadget of a CNF formula");
    cmd->add_option("--cnf", options.cnfPath, "DIMACS CNF file")->required();
    cmd->add_option("--epsilon", options.epsilon, "Root prize in (0,1), default 1/2");
    cmd->add_option("--K", options.K, "Clause prize, at least n+1 (default n+1)");
    cmd->add_option("-o,--output", options.outputPath);
    cmd->callback([&] { run = [&] { return generateCommand(options, "satnw"); }; });
  }
  {
    auto* cmd = generate->add_subcommand("random", "Seeded random instance");
    cmd->add_option("--seed", options.seed);
    cmd->add_option("--vertices", options.vertices);
    cmd->add_option("--topology", options.topology, "tree or er")->check(CLI::IsMember({"tree", "er"}));
    cmd->add_option("--edge-percent", options.edgePercent);
    cmd->add_option("--chords", options.chords);
    cmd->add_option("--demands", options.demands);
    cmd->add_option("--max-cost", options.maxCost);
    cmd->add_option("--max-prize", options.maxPrize);
    cmd->add_option("--max-penalty", options.maxPenalty);
    cmd->add_option("--denominator", options.denominator);
    cmd->add_flag("--rooted", options.rooted, "Root at the first vertex");
    cmd->add_option("--budget", options.budget);
    cmd->add_option("-o,--output", options.outputPath);
    cmd->callback([&] { run = [&] { return generateCommand(options, "random"); }; });
  }

  // oracle
  auto* oracleCmd = app.add_subcommand("oracle", "Exhaustive exact solvers for small instances");
  oracleCmd->require_subcommand(1);
  for (const char* what : {"pcsf", "budgeted", "kmst", "quota", "networth"}) {
    auto* cmd = oracleCmd->add_subcommand(what);
    cmd->add_option("instance", options.instancePath)->required();
    cmd->add_option("--root", options.root);
    cmd->add_option("--budget", options.budget);
    cmd->add_option("--k", options.k);
    cmd->add_option("--quota", options.quota);
    cmd->add_flag("--steiner", options.steiner, "Count terminals instead of vertices (kmst)");
    const std::string name = what;
    cmd->callback([&, name] { run = [&, name] { return oracleCommand(options, name); }; });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Independent checks");
  verify->require_subcommand(1);
  {
    auto* cmd = verify->add_subcommand("dual", "Replay a PCSF certificate");
    cmd->add_option("certificate", options.instancePath)->required();
    cmd->add_option("instance", options.secondPath)->required();
    cmd->callback([&] { run = [&] { return verifyDualCommand(options); }; });
  }
  {
    auto* cmd = verify->add_subcommand("solution", "Recompute and check a claimed solution");
    cmd->add_option("instance", options.instancePath)->required();
    cmd->add_option("--solution", options.solutionPath)->required();
    cmd->add_option("--kind", options.kind, "pcsf, budgeted or networth")->required();
    cmd->add_option("--budget", options.budget);
    cmd->add_option("--root", options.root);
    cmd->callback([&] { run = [&] { return verifySolutionCommand(options); }; });
  }
  {
    auto* cmd = verify->add_subcommand("flow", "Check the fractional flow of a gap instance");
    cmd->add_option("--B", options.gapB)->required();
    cmd->add_option("--k", options.gapK)->required();
    cmd->add_option("--scale", options.scale, "Multiply the flow before checking");
    cmd->callback([&] { run = [&] { return verifyFlowCommand(options); }; });
  }

  // bench
  {
    auto* cmd = app.add_subcommand("bench", "Batch property suites, CSV on stdout");
    cmd->add_option("--suite", options.suite, "pcsf-ratio, budgeted-rooted, budgeted-unrooted or gap")->required();
    cmd->add_option("--seeds", options.seeds, "Seed range a..b");
    cmd->add_option("--vertices", options.vertices, "Maximum vertex count");
    cmd->callback([&] {
      run = [&] {
        return nwsteiner::cli::runBench(options.suite, options.seeds, options.vertices, std::cout) ? kOk : kFailed;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kFailed;
  } catch (const oracle::OracleBudgetExceeded& e) {
    std::cerr << "oracle limit exceeded: " << e.what() << "\n";
    return kOracleLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
