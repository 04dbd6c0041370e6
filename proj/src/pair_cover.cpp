#include "ftmd/pair_cover.hpp"

#include <algorithm>
#include <bit>

namespace ftmd {

PairCover::PairCover(const DistanceMatrix& d) : order_(d.order()) {
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex w = u + 1; w < order_; ++w) pairs_.emplace_back(u, w);
  }
  words_ = std::max<std::size_t>(1, (pairs_.size() + 63) / 64);
  bits_.assign(words_ * order_, 0);
  for (Vertex v = 0; v < order_; ++v) {
    Word* row = bits_.data() + static_cast<std::size_t>(v) * words_;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      auto [a, b] = pairs_[p];
      if (d(a, v) != d(b, v)) row[p / 64] |= Word{1} << (p % 64);
    }
  }
}

std::size_t PairCover::pair_index(Vertex u, Vertex w) const {
  if (u > w) std::swap(u, w);
  // pairs are laid out row by row: row u holds (u, u+1..n-1)
  const std::size_t uu = static_cast<std::size_t>(u);
  const std::size_t n = static_cast<std::size_t>(order_);
  return uu * n - uu * (uu + 1) / 2 + (static_cast<std::size_t>(w) - uu - 1);
}

std::vector<Word> PairCover::all_pairs() const {
  std::vector<Word> mask(words_, ~Word{0});
  if (const std::size_t tail = pairs_.size() % 64; tail != 0) {
    mask.back() = (Word{1} << tail) - 1;
  }
  if (pairs_.empty()) mask.assign(words_, 0);
  return mask;
}

CoverProblem resolving_problem(const PairCover& cover) {
  CoverProblem p;
  p.cover = &cover;
  for (Vertex v = 0; v < cover.order(); ++v) p.candidates.push_back(v);
  p.need_once = cover.all_pairs();
  p.need_twice.assign(cover.words(), 0);
  return p;
}

CoverProblem fault_tolerant_problem(const PairCover& cover, const VertexSet& forced) {
  CoverProblem p;
  p.cover = &cover;
  p.forced = forced;
  std::sort(p.forced.begin(), p.forced.end());
  for (Vertex v = 0; v < cover.order(); ++v) {
    if (!std::binary_search(p.forced.begin(), p.forced.end(), v)) p.candidates.push_back(v);
  }
  p.need_once = cover.all_pairs();
  p.need_twice = p.need_once;
  return p;
}

CoverProblem attaching_problem(const PairCover& cover, const VertexSet& at) {
  CoverProblem p;
  p.cover = &cover;
  VertexSet anchors = at;
  std::sort(anchors.begin(), anchors.end());
  std::vector<Word> hit(cover.words(), 0);
  for (Vertex a : anchors) {
    auto row = cover.distinguishes(a);
    for (std::size_t i = 0; i < hit.size(); ++i) hit[i] |= row[i];
  }
  for (Vertex v = 0; v < cover.order(); ++v) {
    if (!std::binary_search(anchors.begin(), anchors.end(), v)) p.candidates.push_back(v);
  }
  p.need_once = cover.all_pairs();
  for (std::size_t i = 0; i < hit.size(); ++i) p.need_once[i] &= ~hit[i];
  p.need_twice = p.need_once;
  return p;
}

bool propagate_forced(CoverProblem& problem) {
  const PairCover& cover = *problem.cover;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pair = 0; pair < cover.pair_count(); ++pair) {
      const bool once = (problem.need_once[pair / 64] >> (pair % 64)) & 1U;
      if (!once) continue;
      const bool twice = (problem.need_twice[pair / 64] >> (pair % 64)) & 1U;
      int need = twice ? 2 : 1;
      for (Vertex f : problem.forced) need -= cover.distinguishes(f, pair) ? 1 : 0;
      if (need <= 0) continue;
      VertexSet hitters;
      for (Vertex c : problem.candidates) {
        if (cover.distinguishes(c, pair)) hitters.push_back(c);
      }
      if (static_cast<int>(hitters.size()) < need) return false;
      if (static_cast<int>(hitters.size()) == need) {
        for (Vertex h : hitters) {
          problem.candidates.erase(
              std::find(problem.candidates.begin(), problem.candidates.end(), h));
          problem.forced.insert(std::upper_bound(problem.forced.begin(), problem.forced.end(), h),
                                h);
        }
        changed = true;
      }
    }
  }
  return true;
}

bool satisfies(const CoverProblem& problem, std::span<const Vertex> set) {
  const std::size_t words = problem.cover->words();
  std::vector<Word> once(words, 0), twice(words, 0);
  for (Vertex v : set) {
    auto row = problem.cover->distinguishes(v);
    for (std::size_t i = 0; i < words; ++i) {
      twice[i] |= once[i] & row[i];
      once[i] |= row[i];
    }
  }
  for (std::size_t i = 0; i < words; ++i) {
    if ((problem.need_once[i] & ~once[i]) != 0) return false;
    if ((problem.need_twice[i] & ~twice[i]) != 0) return false;
  }
  return true;
}

}  // namespace ftmd
