#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

using Word = std::uint64_t;

/// Bitset over unordered vertex pairs. Bit p of distinguishes(v) is set when
/// v separates pair p, i.e. d(u,v) != d(w,v). A set S resolves the graph
/// iff every pair is hit at least once by S, and is fault-tolerant
/// resolving iff every pair is hit at least twice.
class PairCover {
 public:
  explicit PairCover(const DistanceMatrix& d);

  int order() const noexcept { return order_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  std::size_t words() const noexcept { return words_; }

  std::span<const Word> distinguishes(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  bool distinguishes(Vertex v, std::size_t pair) const noexcept {
    return (distinguishes(v)[pair / 64] >> (pair % 64)) & 1U;
  }

  std::pair<Vertex, Vertex> pair_at(std::size_t index) const { return pairs_[index]; }
  std::size_t pair_index(Vertex u, Vertex w) const;

  /// Mask with every pair bit set.
  std::vector<Word> all_pairs() const;

 private:
  int order_;
  std::size_t words_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<Word> bits_;
};

/// A coverage search instance: choose extra vertices from `candidates`
/// such that, together with `forced`, every pair in need_once is hit at
/// least once and every pair in need_twice at least twice.
struct CoverProblem {
  const PairCover* cover = nullptr;
  VertexSet candidates;  // sorted, disjoint from forced
  VertexSet forced;      // sorted
  std::vector<Word> need_once;
  std::vector<Word> need_twice;  // subset of need_once
};

/// Resolving sets: every pair hit once.
CoverProblem resolving_problem(const PairCover& cover);
/// Fault-tolerant resolving sets seeded with `forced` members.
CoverProblem fault_tolerant_problem(const PairCover& cover, const VertexSet& forced = {});
/// Attaching fault-tolerant sets for anchor set `at`: candidates exclude
/// `at`, pairs separated by `at` need nothing, all other pairs need two hits.
CoverProblem attaching_problem(const PairCover& cover, const VertexSet& at);

/// Moves candidates into `forced` while some pair needs exactly as many
/// more hits as it has remaining candidate distinguishers. Returns false
/// when some pair can no longer be satisfied.
bool propagate_forced(CoverProblem& problem);

/// Coverage test on an explicit set.
bool satisfies(const CoverProblem& problem, std::span<const Vertex> set);

}  // namespace ftmd
