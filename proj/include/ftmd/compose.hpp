#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftmd/decomposition.hpp"
#include "ftmd/graph.hpp"
#include "ftmd/resolve.hpp"

namespace ftmd {

struct PreconditionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Recorded but not enforced (relaxed modes).
  bool waived = false;

  friend bool operator==(const PreconditionCheck&, const PreconditionCheck&) = default;
};

/// Outcome of applying one closed-form result to a composite. `value` (or
/// `bounds`) is present only when every enforced precondition passed.
struct TheoremResult {
  std::string theorem;
  std::optional<int> value;
  std::optional<std::pair<int, int>> bounds;
  std::vector<PreconditionCheck> preconditions;
  /// Per-piece contributions, in piece order.
  std::vector<int> components;
  /// Candidate fault-tolerant resolving set on the composite (global labels).
  std::optional<VertexSet> witness;
  std::optional<bool> witness_ft_resolving;
  std::vector<std::string> notes;

  bool preconditions_hold() const;
  std::vector<std::string> failed_checks() const;
  /// Throws PreconditionFailed naming the failed checks.
  int value_or_throw() const;

  friend bool operator==(const TheoremResult&, const TheoremResult&) = default;
};

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

/// Base graph G of order n and one rooted graph per base vertex.
struct RootedProductSpec {
  Graph base;
  std::vector<RootedGraph> family;

  /// G ∘_v H: every base vertex receives a copy of (h, root).
  static RootedProductSpec uniform(Graph base, Graph h, Vertex root);
  bool is_uniform() const;
};

/// Sum of per-piece attaching dimensions; a lower bound for fdim of the
/// composite under no further hypotheses.
int prop1_lower_bound(const Decomposition& dec, const OracleCaps& caps = {});
TheoremResult prop1(const Decomposition& dec, const OracleCaps& caps = {});

/// Hypotheses for the exact sum formula: k >= 3, internal pieces satisfy
/// C1, end pieces satisfy C2, end anchor sets pairwise disjoint.
std::vector<PreconditionCheck> theorem2_preconditions(const Decomposition& dec);

/// Exact fdim as the sum of attaching dimensions, with the union of the
/// per-piece attaching bases as witness.
TheoremResult theorem2_fdim(const Decomposition& dec, const OracleCaps& caps = {});

/// Sum of fdim(G_i) - theta_i. Additionally requires fdim = fdim+ and
/// At != V per piece; `relaxed` records both as waived instead of enforcing them.
TheoremResult corollary3_fdim(const Decomposition& dec, bool relaxed = false,
                              const OracleCaps& caps = {});

/// Block graphs of cliques K_r (r >= 3): sum over pieces with |At| < r-1
/// of r - |At|.
TheoremResult block_graph_fdim(const Decomposition& dec);

/// Base graph as the internal piece (every vertex anchored), then one end
/// piece per base vertex in base order, anchored at its root.
Decomposition rooted_product(const RootedProductSpec& spec);

/// sum fdim(H_i) over roots in no fault-tolerant basis plus
/// sum (fdim(H_j) - 1) over the rest; requires C2 on every (H_i, root).
TheoremResult cor5_fdim(const RootedProductSpec& spec, const OracleCaps& caps = {});

/// n * fdim(h) when the root lies in no fault-tolerant basis of h,
/// n * (fdim(h) - 1) otherwise; h must not be a path.
TheoremResult prop7_fdim(const Graph& g, const Graph& h, Vertex root, const OracleCaps& caps = {});

struct Cor8Outcome {
  int order = 0;           // n = |V(g)|
  int composite_fdim = 0;  // oracle value on g ∘_root h
  bool equals_2n = false;
  bool path_with_inner_root = false;
  /// equals_2n == path_with_inner_root
  bool consistent = false;
};

/// Checks fdim(g ∘_root h) = 2n <=> (h is a path and root is not a leaf)
/// against the oracle. Throws PreconditionFailed when the root lies in some
/// fault-tolerant basis of h and OrderCapExceeded when the composite is
/// larger than caps.search.
Cor8Outcome cor8_check(const Graph& g, const Graph& h, Vertex root, const OracleCaps& caps = {});

/// Bounds [fdim(g), n] for g ∘_v P_m with v a leaf of the path, plus the
/// copies of the far leaf as witness (checked on the composite).
TheoremResult prop9_bounds(const Graph& g, int path_order);

}  // namespace ftmd
