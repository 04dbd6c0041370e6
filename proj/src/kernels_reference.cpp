#include <algorithm>
#include <functional>

#include "ftmd/error.hpp"
#include "ftmd/kernels.hpp"

namespace ftmd::kernels::reference {

namespace {

VertexSet merged(const CoverProblem& problem, const std::vector<int>& picks) {
  VertexSet set = problem.forced;
  for (int i : picks) set.push_back(problem.candidates[i]);
  std::sort(set.begin(), set.end());
  return set;
}

// Visits every `extra`-combination of candidate indices in lexicographic
// order; the visitor returns false to stop.
void for_each_combination(int m, int extra, const std::function<bool(const std::vector<int>&)>& visit) {
  if (extra < 0 || extra > m) return;
  std::vector<int> picks(extra);
  for (int i = 0; i < extra; ++i) picks[i] = i;
  while (true) {
    if (!visit(picks)) return;
    int i = extra - 1;
    while (i >= 0 && picks[i] == m - extra + i) --i;
    if (i < 0) return;
    ++picks[i];
    for (int j = i + 1; j < extra; ++j) picks[j] = picks[j - 1] + 1;
  }
}

}  // namespace

std::optional<VertexSet> first_cover(const CoverProblem& problem, int extra) {
  std::optional<VertexSet> found;
  const int m = static_cast<int>(problem.candidates.size());
  for_each_combination(m, extra, [&](const std::vector<int>& picks) {
    VertexSet set = merged(problem, picks);
    if (!satisfies(problem, set)) return true;
    found = std::move(set);
    return false;
  });
  return found;
}

std::vector<VertexSet> all_covers(const CoverProblem& problem, int extra) {
  std::vector<VertexSet> out;
  const int m = static_cast<int>(problem.candidates.size());
  for_each_combination(m, extra, [&](const std::vector<int>& picks) {
    VertexSet set = merged(problem, picks);
    if (satisfies(problem, set)) out.push_back(std::move(set));
    return true;
  });
  return out;
}

Lattice cover_lattice(const CoverProblem& problem) {
  const int n = problem.cover->order();
  if (n > kMaxLatticeOrder) {
    throw Error(ErrorCode::OrderCapExceeded, "lattice order " + std::to_string(n));
  }
  Lattice lattice(std::size_t{1} << n, 0);
  VertexSet set;
  for (std::size_t mask = 0; mask < lattice.size(); ++mask) {
    set.clear();
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) set.push_back(v);
    }
    lattice[mask] = satisfies(problem, set) ? 1 : 0;
  }
  return lattice;
}

}  // namespace ftmd::kernels::reference
