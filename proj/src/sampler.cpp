#include "ftmd/sampler.hpp"

#include <algorithm>
#include <random>

#include "ftmd/compose.hpp"
#include "ftmd/error.hpp"
#include "ftmd/families.hpp"

namespace ftmd {

namespace {

// Bounded draw that does not depend on the standard library's
// distribution implementation, so samples match across toolchains.
int draw(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

struct Owner {
  int piece;
  Vertex local;
};

std::vector<PieceSpec> draw_pieces(std::mt19937_64& rng, const SamplerOptions& options) {
  std::vector<PoolGraph> pool = decomposition_pool();
  if (options.cliques_only) {
    std::erase_if(pool, [](const PoolGraph& p) {
      return p.name.front() != 'K' || p.name.find(',') != std::string::npos;
    });
  }
  const int k = draw(rng, options.min_pieces, options.max_pieces);
  std::vector<int> picks;
  int order = 0;
  while (static_cast<int>(picks.size()) < k) {
    const int pick = draw(rng, 0, static_cast<int>(pool.size()) - 1);
    const int grown = order + pool[pick].graph.order() - (picks.empty() ? 0 : 1);
    const int remaining = k - static_cast<int>(picks.size()) - 1;
    // every later piece adds at least two new vertices
    if (grown + 2 * remaining > options.max_order) {
      if (picks.empty() || pool[pick].graph.order() == 3) return {};
      continue;
    }
    picks.push_back(pick);
    order = grown;
  }

  std::vector<PieceSpec> pieces;
  std::vector<Owner> owners;  // by global label
  int names = 0;
  for (int i = 0; i < k; ++i) {
    const Graph& g = pool[picks[i]].graph;
    pieces.push_back({g, {}});
    Vertex glued = -1;
    if (i > 0) {
      const Owner target = owners[draw(rng, 0, static_cast<int>(owners.size()) - 1)];
      glued = draw(rng, 0, g.order() - 1);
      auto& host = pieces[target.piece].anchors;
      auto [it, fresh] = host.emplace(target.local, "a" + std::to_string(names));
      if (fresh) ++names;
      pieces[i].anchors.emplace(glued, it->second);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != glued) owners.push_back({i, v});
    }
  }
  return pieces;
}

}  // namespace

const std::vector<PoolGraph>& decomposition_pool() {
  static const std::vector<PoolGraph> pool = [] {
    std::vector<PoolGraph> p;
    for (int n = 3; n <= 5; ++n) p.push_back({"K" + std::to_string(n), families::complete(n)});
    for (int n = 4; n <= 8; ++n) p.push_back({"C" + std::to_string(n), families::cycle(n)});
    p.push_back({"paw", families::paw()});
    p.push_back({"K1,3", families::star(3)});
    p.push_back({"K1,4", families::star(4)});
    for (int n = 3; n <= 5; ++n) p.push_back({"P" + std::to_string(n), families::path(n)});
    return p;
  }();
  return pool;
}

std::uint64_t instance_seed(std::uint64_t batch_seed, std::uint64_t index) {
  // splitmix64 finaliser
  std::uint64_t z = batch_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Decomposition sample_decomposition(std::uint64_t seed, const SamplerOptions& options) {
  if (options.min_pieces < 1 || options.max_pieces < options.min_pieces) {
    throw Error(ErrorCode::IllegalParameter, "piece count range");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    auto pieces = draw_pieces(rng, options);
    if (pieces.empty()) continue;
    auto dec = Decomposition::point_attach(std::move(pieces));
    if (dec.composite().order() > options.max_order) continue;
    if (options.require_theorem2) {
      const auto checks = theorem2_preconditions(dec);
      const bool ok = std::all_of(checks.begin(), checks.end(),
                                  [](const PreconditionCheck& c) { return c.passed; });
      if (!ok) continue;
    }
    return dec;
  }
  throw Error(ErrorCode::UnsupportedConfiguration,
              "no admissible decomposition after " + std::to_string(options.max_attempts) +
                  " draws");
}

}  // namespace ftmd
