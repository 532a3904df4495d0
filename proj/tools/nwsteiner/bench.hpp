#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace nwsteiner::cli {

/// Runs a named property suite over a seed range "a..b" and writes one CSV
/// row per seed. Returns false when any row violates its guarantee; throws
/// std::invalid_argument on an unknown suite or a malformed range.
bool runBench(const std::string& suite, const std::string& seeds, std::size_t maxVertices, std::ostream& out);

}  // namespace nwsteiner::cli
