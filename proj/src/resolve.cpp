#include "ftmd/resolve.hpp"

#include <algorithm>
#include <bit>

#include "ftmd/error.hpp"
#include "ftmd/kernels.hpp"
#include "ftmd/pair_cover.hpp"

namespace ftmd {

namespace {

void validate_set(const DistanceMatrix& d, std::span<const Vertex> s) {
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::IllegalParameter, "vertex set has repeated members");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= d.order())) {
    throw Error(ErrorCode::IllegalParameter, "vertex set member out of range");
  }
}

bool representations_distinct(const DistanceMatrix& d, std::span<const Vertex> s, Vertex skip) {
  std::vector<std::vector<int>> reps(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    reps[v].reserve(s.size());
    for (Vertex x : s) {
      if (x != skip) reps[v].push_back(d(v, x));
    }
  }
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

VertexSet twin_forced_members(const Graph& g) {
  VertexSet forced;
  for (const auto& cls : twin_classes(g)) {
    if (cls.size() >= 2) forced.insert(forced.end(), cls.begin(), cls.end());
  }
  std::sort(forced.begin(), forced.end());
  return forced;
}

// Smallest fault-tolerant resolving sets live in this search space.
struct FaultTolerantSearch {
  explicit FaultTolerantSearch(const Graph& g)
      : cover(g.distances()), problem(fault_tolerant_problem(cover, twin_forced_members(g))) {
    propagate_forced(problem);  // V itself always qualifies, so never infeasible
    for (int extra = 0;; ++extra) {
      if (auto found = kernels::omp::first_cover(problem, extra)) {
        witness = std::move(*found);
        this->extra = extra;
        return;
      }
    }
  }

  PairCover cover;
  CoverProblem problem;
  VertexSet witness;
  int extra = 0;
};

}  // namespace

void require_order_within(int order, int cap, const std::string& what) {
  if (order > cap) {
    throw Error(ErrorCode::OrderCapExceeded, what + ": order " + std::to_string(order) +
                                                 " exceeds cap " + std::to_string(cap));
  }
}

bool is_resolving(const DistanceMatrix& d, std::span<const Vertex> s) {
  validate_set(d, s);
  return representations_distinct(d, s, -1);
}

bool is_ft_resolving(const DistanceMatrix& d, std::span<const Vertex> s) {
  validate_set(d, s);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [&](Vertex x) { return representations_distinct(d, s, x); });
}

FtReport metric_dimension(const Graph& g) {
  const PairCover cover(g.distances());
  const CoverProblem problem = resolving_problem(cover);
  // a twin class of size t needs at least t-1 members
  int lower = 1;
  int forced = 0;
  for (const auto& cls : twin_classes(g)) forced += static_cast<int>(cls.size()) - 1;
  lower = std::max(lower, forced);
  for (int k = lower; k <= g.order(); ++k) {
    if (auto found = kernels::omp::first_cover(problem, k)) {
      return FtReport{k, std::move(*found), std::nullopt, "oracle"};
    }
  }
  // n-1 vertices always resolve
  throw Error(ErrorCode::UnsupportedConfiguration, "no resolving set found");
}

FtReport fdim(const Graph& g) {
  FaultTolerantSearch search(g);
  return FtReport{static_cast<int>(search.witness.size()), std::move(search.witness),
                  std::nullopt, "oracle"};
}

std::vector<VertexSet> enumerate_ft_bases(const Graph& g, const OracleCaps& caps) {
  require_order_within(g.order(), caps.search, "enumerate_ft_bases");
  FaultTolerantSearch search(g);
  return kernels::omp::all_covers(search.problem, search.extra);
}

FtReport fdim_plus(const Graph& g, const OracleCaps& caps) {
  require_order_within(g.order(), std::min(caps.lattice, kernels::kMaxLatticeOrder), "fdim_plus");
  const PairCover cover(g.distances());
  const auto lattice = kernels::omp::cover_lattice(fault_tolerant_problem(cover));

  // Fault tolerance is inherited by supersets, so a set is inclusion-minimal
  // iff none of its one-smaller subsets qualifies.
  std::uint64_t best = 0;
  int best_size = -1;
  for (std::uint64_t mask = 1; mask < lattice.size(); ++mask) {
    if (!lattice[mask]) continue;
    const int size = std::popcount(mask);
    if (size < best_size) continue;
    bool minimal = true;
    for (std::uint64_t bits = mask; bits != 0 && minimal; bits &= bits - 1) {
      minimal = !lattice[mask & ~(bits & -bits)];
    }
    if (!minimal) continue;
    // equal size: the set holding the smallest differing vertex comes first
    const std::uint64_t diff = mask ^ best;
    const bool earlier = size == best_size && (mask & (diff & -diff)) != 0;
    if (size > best_size || earlier) {
      best = mask;
      best_size = size;
    }
  }
  VertexSet witness;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((best >> v) & 1U) witness.push_back(v);
  }
  return FtReport{best_size, std::move(witness), std::nullopt, "oracle"};
}

int theta(const Graph& g, const VertexSet& at, const OracleCaps& caps) {
  require_order_within(g.order(), caps.lattice, "theta");
  if (is_resolving(g.distances(), at)) return fdim(g).value;
  int best = 0;
  for (const auto& basis : enumerate_ft_bases(g, caps)) {
    const auto overlap = std::count_if(at.begin(), at.end(), [&](Vertex a) {
      return std::binary_search(basis.begin(), basis.end(), a);
    });
    best = std::max(best, static_cast<int>(overlap));
  }
  return best;
}

bool in_some_ft_basis(const Graph& g, Vertex v, const OracleCaps& caps) {
  require_order_within(g.order(), caps.search, "in_some_ft_basis");
  const auto bases = enumerate_ft_bases(g, caps);
  return std::any_of(bases.begin(), bases.end(), [&](const VertexSet& b) {
    return std::binary_search(b.begin(), b.end(), v);
  });
}

}  // namespace ftmd
