#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ftmd/graph.hpp"
#include "ftmd/resolve.hpp"

namespace ftmd {

/// f is attaching fault-tolerant resolving for anchor set `at` when either
/// f is empty and `at` resolves g, or (f ∪ at) \ {x} resolves g for every
/// x in f. Throws OverlapError when f meets `at`.
bool is_attaching_ft_resolving(const Graph& g, const VertexSet& at, const VertexSet& f);

/// Smallest attaching fault-tolerant resolving set for `at`; the witness is
/// the lexicographically smallest such set (empty when `at` resolves g).
/// Throws IllegalParameter for empty `at`, OrderCapExceeded past caps.search.
FtReport fdim_star(const Graph& g, const VertexSet& at, const OracleCaps& caps = {});

enum class ClosedFormFamily { Path, Cycle, Complete };

/// Closed-form attaching dimension for paths, cycles and complete graphs in
/// their canonical labelling (walk order for paths and cycles). Throws
/// UnsupportedConfiguration when the anchor set is empty, out of range,
/// repeated, or the order is illegal for the family.
int fdim_star_closed_form(ClosedFormFamily family, int order, const VertexSet& at);

/// Outcome of the anchor-domination check on a piece.
struct C1Diagnostic {
  bool holds = false;
  /// Known sufficient configurations that apply, in ascending order:
  ///   1  every vertex is an anchor
  ///   2  anchors independent, diameter 2, at least two anchors
  ///   3  anchors pairwise at distance equal to both eccentricities
  ///   4  even graph with anchors closed under antipodes
  std::vector<int> sufficient_cases;
  /// First (a1, v) with no dominating anchor, when the check fails.
  std::optional<std::pair<Vertex, Vertex>> violation;
};

/// For every anchor a1 and non-anchor v some anchor a2 has
/// d(a1,a2) >= d(v,a2). Throws IllegalParameter for empty `at`.
C1Diagnostic check_c1(const Graph& g, const VertexSet& at);

/// Exactly one anchor, and it is not a leaf when g is a path.
bool check_c2(const Graph& g, const VertexSet& at);

}  // namespace ftmd
