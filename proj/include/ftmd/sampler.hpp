#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftmd/decomposition.hpp"

namespace ftmd {

struct SamplerOptions {
  int min_pieces = 3;
  int max_pieces = 5;
  int max_order = 16;
  /// Keep drawing until the sample passes theorem2_preconditions.
  bool require_theorem2 = false;
  /// Draw only from the complete graphs of the pool.
  bool cliques_only = false;
  int max_attempts = 100000;
};

/// Named piece from the sampling pool: K_3..K_5, C_4..C_8, paw, K_{1,3},
/// K_{1,4}, P_3..P_5.
struct PoolGraph {
  std::string name;
  Graph graph;
};

const std::vector<PoolGraph>& decomposition_pool();

/// Per-instance seed derived from a batch seed; stable across platforms.
std::uint64_t instance_seed(std::uint64_t batch_seed, std::uint64_t index);

/// Random point-attached decomposition. Each new piece is glued by a
/// uniformly chosen local vertex onto a uniformly chosen vertex of the
/// composite built so far. Deterministic in `seed`. Throws
/// UnsupportedConfiguration when max_attempts draws all fail the filter.
Decomposition sample_decomposition(std::uint64_t seed, const SamplerOptions& options = {});

}  // namespace ftmd
