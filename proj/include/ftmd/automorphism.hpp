#pragma once

#include <optional>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

/// perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline constexpr int kDefaultTransitivityCap = 12;

/// An automorphism mapping `from` to `to`, or nullopt. Backtracking over
/// distance-preserving partial maps, pruned by sorted distance profiles.
std::optional<Permutation> find_automorphism(const Graph& g, Vertex from, Vertex to);

/// Every automorphism of g in lexicographic order of the image vector.
/// Throws OrderCapExceeded when g.order() > cap.
std::vector<Permutation> automorphisms(const Graph& g, int cap = kDefaultTransitivityCap);

/// Throws OrderCapExceeded when g.order() > cap.
bool is_vertex_transitive(const Graph& g, int cap = kDefaultTransitivityCap);

}  // namespace ftmd
