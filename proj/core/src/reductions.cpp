#include "nwsteiner/reductions.hpp"

#include <algorithm>

namespace nwsteiner::reductions {

using nwsteiner::toString;

std::string toString(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::KSteinerToKMst: return "ksteiner-to-kmst";
    case ReductionKind::RootedToUnrootedKMst: return "rooted-to-unrooted-kmst";
    case ReductionKind::QuotaToKSteiner: return "quota-to-ksteiner";
    case ReductionKind::KSteinerFromQuota: return "ksteiner-from-quota";
  }
  return "?";
}

std::optional<ReductionKind> reductionKindFromString(const std::string& text) {
  for (auto kind : {ReductionKind::KSteinerToKMst, ReductionKind::RootedToUnrootedKMst, ReductionKind::QuotaToKSteiner,
                    ReductionKind::KSteinerFromQuota}) {
    if (toString(kind) == text) return kind;
  }
  return std::nullopt;
}

std::vector<VertexId> ReductionMap::liftBack(std::span<const VertexId> transformedSolution) const {
  std::vector<VertexId> out;
  for (VertexId v : transformedSolution) {
    if (v < originalVertices) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

ReductionMap start(ReductionKind kind, const Instance& instance) {
  ReductionMap map;
  map.kind = kind;
  map.transformed = PendantInstance::plain(instance);
  map.originalVertices = instance.numVertices();
  return map;
}

void checkVertex(const Instance& instance, VertexId v) {
  if (v >= instance.numVertices()) throw PreconditionError("vertex id out of range");
}

}  // namespace

ReductionMap kSteinerToKMst(const Instance& instance, const std::vector<VertexId>& terminals, std::uint64_t k) {
  std::vector<VertexId> distinct = terminals;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (VertexId t : distinct) checkVertex(instance, t);
  if (k > distinct.size()) throw PreconditionError("k exceeds the number of terminals");
  const std::uint64_t n = instance.numVertices();
  ReductionMap map = start(ReductionKind::KSteinerToKMst, instance);
  for (VertexId t : distinct) map.transformed.pendants[t] = n;
  map.kPrime = k * n + k;
  map.query.variant = oracle::TreeVariant::KMst;
  map.query.k = map.kPrime;
  return map;
}

ReductionMap rootedToUnrootedKMst(const Instance& instance, VertexId root, std::uint64_t k) {
  checkVertex(instance, root);
  const std::uint64_t n = instance.numVertices();
  ReductionMap map = start(ReductionKind::RootedToUnrootedKMst, instance);
  map.transformed.pendants[root] = n;
  map.transformed.graph.setRoot(std::nullopt);
  map.kPrime = k + n;
  map.query.variant = oracle::TreeVariant::KMst;
  map.query.k = map.kPrime;
  return map;
}

std::optional<oracle::TreeOptimum> unrootedViaRootedKMst(const Instance& instance, std::uint64_t k,
                                                         const RootedKMstSolver& solver) {
  RootedKMstSolver solve = solver;
  if (!solve) {
    solve = [](const Instance& g, VertexId root, std::uint64_t count) {
      oracle::TreeQuery query;
      query.variant = oracle::TreeVariant::KMst;
      query.k = count;
      query.root = root;
      return oracle::exactQuotaKmst(PendantInstance::plain(g), query);
    };
  }
  std::optional<oracle::TreeOptimum> best;
  for (VertexId r = 0; r < instance.numVertices(); ++r) {
    auto candidate = solve(instance, r, k);
    if (!candidate) continue;
    if (!best || candidate->value < best->value ||
        (candidate->value == best->value && candidate->vertices < best->vertices)) {
      best = std::move(candidate);
    }
  }
  return best;
}

ReductionMap quotaToKSteiner(const Instance& instance, const Rational& P, const Rational& epsilon) {
  if (P <= 0) throw PreconditionError("quota must be positive");
  if (epsilon <= 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in (0,1)");
  const std::uint64_t n = instance.numVertices();
  ReductionMap map = start(ReductionKind::QuotaToKSteiner, instance);
  map.transformed.pendantsAreTerminals = true;
  for (VertexId u = 0; u < n; ++u) {
    Rational scaled = Rational(n) * instance.prize(u) / (epsilon * P);
    mpz_class up;
    mpz_cdiv_q(up.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (!up.fits_ulong_p()) throw PreconditionError("pendant count does not fit in 64 bits");
    map.transformed.pendants[u] = up.get_ui();
  }
  Rational bound = Rational(n) / epsilon;
  mpz_class down;
  mpz_fdiv_q(down.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  map.kPrime = down.get_ui();
  map.query.variant = oracle::TreeVariant::KSteiner;
  map.query.k = map.kPrime;
  return map;
}

ReductionMap kSteinerFromQuota(const Instance& instance, const std::vector<VertexId>& terminals, std::uint64_t k) {
  ReductionMap map = start(ReductionKind::KSteinerFromQuota, instance);
  Instance& g = map.transformed.graph;
  for (VertexId v = 0; v < g.numVertices(); ++v) g.setPrize(v, 0);
  for (VertexId t : terminals) {
    checkVertex(instance, t);
    g.setPrize(t, 1);
  }
  map.kPrime = k;
  map.query.variant = oracle::TreeVariant::Quota;
  map.query.quota = Rational(static_cast<unsigned long>(k));
  return map;
}

}  // namespace nwsteiner::reductions
