#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftmd/pair_cover.hpp"

// Search kernels over a CoverProblem. `extra` is the number of candidates
// to add on top of the forced members; returned sets are sorted and include
// the forced members. Sets of equal size are ordered lexicographically by
// their sorted member lists.
//
// kernels::reference is a plain serial enumeration of combinations kept as
// the baseline for testing and benchmarking. kernels::omp prunes on
// per-pair remaining-hitter counts and splits the search by smallest chosen
// candidate across OpenMP threads; merges are by branch index so results
// never depend on the schedule.

namespace ftmd::kernels {

/// One byte per vertex mask of an n-vertex graph (n <= 24).
using Lattice = std::vector<std::uint8_t>;

inline constexpr int kMaxLatticeOrder = 24;

namespace reference {

std::optional<VertexSet> first_cover(const CoverProblem& problem, int extra);
std::vector<VertexSet> all_covers(const CoverProblem& problem, int extra);
/// lattice[mask] == 1 iff the vertex set encoded by mask satisfies problem
/// (forced members and candidate restrictions are ignored).
Lattice cover_lattice(const CoverProblem& problem);

}  // namespace reference

namespace omp {

std::optional<VertexSet> first_cover(const CoverProblem& problem, int extra);
std::vector<VertexSet> all_covers(const CoverProblem& problem, int extra);
Lattice cover_lattice(const CoverProblem& problem);

}  // namespace omp

}  // namespace ftmd::kernels
