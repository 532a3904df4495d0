#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "nwsteiner/budgeted.hpp"
#include "nwsteiner/instance.hpp"
#include "nwsteiner/instance_gen.hpp"
#include "nwsteiner/oracle.hpp"
#include "nwsteiner/pcsf.hpp"
#include "nwsteiner/pendant.hpp"
#include "nwsteiner/rational.hpp"
#include "nwsteiner/reductions.hpp"

/// Text formats. Every rational is written as a "p/q" (or integer) string so
/// that parse -> serialize -> parse is the identity. On input, numbers may
/// also be JSON integers or decimals, which are read exactly.
///
/// Instance JSON:
///   {"vertices":[{"id":"a","cost":"1/2","prize":"3"}],
///    "edges":[["a","b"]],
///    "demands":[{"s":"a","t":"b","penalty":"5"}],
///    "root":"a", "budget":"4"}
/// with "root" and "budget" optional. A pendant instance adds
///   "pendants":{"a":3}, "terminals":["a"], "pendantsAreTerminals":true.
/// All errors are reported as ParseError with a short location hint.
namespace nwsteiner::io {

Instance parseInstanceJson(std::string_view text);
std::string instanceToJson(const Instance& instance);

PendantInstance parsePendantInstanceJson(std::string_view text);
std::string pendantInstanceToJson(const PendantInstance& instance);

/// Certificate file: per-round records plus objective and lower bound.
struct CertificateFile {
  pcsf::DualCertificate certificate;
  Rational objective;
  Rational lowerBound;
};
std::string certificateToJson(const pcsf::DualCertificate& certificate, const Rational& objective);
CertificateFile parseCertificateJson(std::string_view text);

std::string pcsfSolutionToJson(const Instance& instance, const pcsf::PcsfSolution& solution,
                               const Rational& lowerBound);
std::string treeToJson(const Instance& instance, const budgeted::RootedTree& tree, const Rational& budget);
std::string treeOptimumToJson(const Instance& instance, const oracle::TreeOptimum& optimum);

/// Descriptor written next to a transformed instance by `reduce`.
std::string reductionDescriptorToJson(const reductions::ReductionMap& map);

/// DIMACS STP. Reads E/A edges, T terminals, TP terminal prizes, Root and
/// node weights (NW lines, either "NW v w" or one "NW w" per node in order).
/// Vertices are named "1".."n". Edge weights that are not all zero turn the
/// file into an edge-weighted instance that is subdivided (edge vertices are
/// named "e<i>:u-v"), after which node weights are restored on the original
/// vertices. Plain terminals become demands from the root (or the first
/// terminal) with a penalty exceeding the total cost, so connecting them is
/// always optimal.
Instance parseStp(std::istream& in);

/// DIMACS CNF ("p cnf n m", clauses terminated by 0, "c" comments).
gen::CnfFormula parseCnf(std::istream& in);
std::string cnfToString(const gen::CnfFormula& formula);

/// Instance from a file: ".stp" files go through parseStp, everything else is
/// read as instance JSON.
Instance readInstanceFile(const std::filesystem::path& path);
std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, const std::string& contents);

}  // namespace nwsteiner::io
