#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

/// Order caps for the exhaustive routines. Searches that walk subsets by
/// ascending cardinality use `search`; routines that scan the whole subset
/// lattice (upper dimension, theta) use `lattice`.
struct OracleCaps {
  int search = 16;
  int lattice = 14;
};

/// Result of one invariant computation.
struct FtReport {
  int value = 0;
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_bases;
  std::string method = "oracle";

  friend bool operator==(const FtReport&, const FtReport&) = default;
};

/// True iff the representations r(v|s) are pairwise distinct.
bool is_resolving(const DistanceMatrix& d, std::span<const Vertex> s);

/// True iff s \ {x} is resolving for every x in s. The empty set is not
/// fault-tolerant resolving.
bool is_ft_resolving(const DistanceMatrix& d, std::span<const Vertex> s);

/// Minimum resolving set; witness is the lexicographically smallest one.
FtReport metric_dimension(const Graph& g);

/// Minimum fault-tolerant resolving set (lexicographically smallest witness).
FtReport fdim(const Graph& g);

/// All fault-tolerant bases in lexicographic order.
/// Throws OrderCapExceeded when g.order() > caps.search.
std::vector<VertexSet> enumerate_ft_bases(const Graph& g, const OracleCaps& caps = {});

/// Largest inclusion-minimal fault-tolerant resolving set.
/// Throws OrderCapExceeded when g.order() > caps.lattice.
FtReport fdim_plus(const Graph& g, const OracleCaps& caps = {});

/// fdim(g) when `at` resolves g, otherwise the largest overlap of a
/// fault-tolerant basis with `at`. Throws OrderCapExceeded past caps.lattice.
int theta(const Graph& g, const VertexSet& at, const OracleCaps& caps = {});

/// Throws OrderCapExceeded when g.order() > caps.search.
bool in_some_ft_basis(const Graph& g, Vertex v, const OracleCaps& caps = {});

/// Throws OrderCapExceeded naming `what` when order > cap.
void require_order_within(int order, int cap, const std::string& what);

}  // namespace ftmd
