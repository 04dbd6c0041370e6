#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>

#include "ftmd/error.hpp"
#include "ftmd/kernels.hpp"

namespace ftmd::kernels::omp {

namespace {

/// Read-only tables shared by every branch of one search.
class SearchTables {
 public:
  explicit SearchTables(const CoverProblem& problem)
      : problem_(problem),
        cover_(*problem.cover),
        words_(cover_.words()),
        pairs_(cover_.pair_count()),
        candidates_(static_cast<int>(problem.candidates.size())) {
    // hitters_after_[pos][pair]: candidates at index >= pos separating pair
    hitters_after_.assign(static_cast<std::size_t>(candidates_ + 1) * pairs_, 0);
    for (int pos = candidates_ - 1; pos >= 0; --pos) {
      const Vertex c = problem.candidates[pos];
      std::uint16_t* row = &hitters_after_[static_cast<std::size_t>(pos) * pairs_];
      const std::uint16_t* next = row + pairs_;
      for (std::size_t p = 0; p < pairs_; ++p) {
        row[p] = static_cast<std::uint16_t>(next[p] + (cover_.distinguishes(c, p) ? 1 : 0));
      }
    }
    base_once_.assign(words_, 0);
    base_twice_.assign(words_, 0);
    for (Vertex f : problem.forced) add(base_once_.data(), base_twice_.data(), f);
  }

  void add(Word* once, Word* twice, Vertex v) const {
    auto row = cover_.distinguishes(v);
    for (std::size_t i = 0; i < words_; ++i) {
      twice[i] |= once[i] & row[i];
      once[i] |= row[i];
    }
  }

  /// False when no completion with `remaining` more picks from positions
  /// >= next can satisfy every pair.
  bool feasible(int next, int remaining, const Word* once, const Word* twice) const {
    if (candidates_ - next < remaining) return false;
    const std::uint16_t* hitters = &hitters_after_[static_cast<std::size_t>(next) * pairs_];
    for (std::size_t i = 0; i < words_; ++i) {
      const Word missing_once = problem_.need_once[i] & ~once[i];
      const Word missing_twice = problem_.need_twice[i] & ~twice[i];
      Word deficient = missing_once | missing_twice;
      while (deficient != 0) {
        const int bit = std::countr_zero(deficient);
        deficient &= deficient - 1;
        const Word mask = Word{1} << bit;
        int deficit = 1;
        if ((missing_once & mask) && (problem_.need_twice[i] & mask)) deficit = 2;
        if (deficit > remaining) return false;
        if (hitters[i * 64 + bit] < deficit) return false;
      }
    }
    return true;
  }

  std::size_t words() const { return words_; }
  int candidates() const { return candidates_; }
  const CoverProblem& problem() const { return problem_; }
  const std::vector<Word>& base_once() const { return base_once_; }
  const std::vector<Word>& base_twice() const { return base_twice_; }

 private:
  const CoverProblem& problem_;
  const PairCover& cover_;
  std::size_t words_;
  std::size_t pairs_;
  int candidates_;
  std::vector<std::uint16_t> hitters_after_;
  std::vector<Word> base_once_;
  std::vector<Word> base_twice_;
};

/// Depth-first walk of one branch; owns its scratch buffers.
class BranchWalker {
 public:
  BranchWalker(const SearchTables& tables, int extra)
      : tables_(tables), extra_(extra), stack_(2 * tables.words() * (extra + 1), 0) {}

  /// Visits, in lexicographic order, satisfying sets whose smallest pick
  /// is candidate `first`. The visitor returns false to stop.
  template <typename Visit>
  void run(int first, Visit&& visit) {
    const std::size_t w = tables_.words();
    std::copy(tables_.base_once().begin(), tables_.base_once().end(), stack_.begin());
    std::copy(tables_.base_twice().begin(), tables_.base_twice().end(), stack_.begin() + w);
    picks_.clear();
    push(0, first);
    walk(1, first + 1, visit);
  }

 private:
  Word* once(int depth) { return stack_.data() + 2 * tables_.words() * depth; }
  Word* twice(int depth) { return once(depth) + tables_.words(); }

  void push(int depth, int pos) {
    const std::size_t w = tables_.words();
    std::copy_n(once(depth), 2 * w, once(depth + 1));
    tables_.add(once(depth + 1), twice(depth + 1), tables_.problem().candidates[pos]);
    picks_.push_back(pos);
  }

  template <typename Visit>
  bool walk(int depth, int next, Visit& visit) {
    const int remaining = extra_ - depth;
    if (!tables_.feasible(next, remaining, once(depth), twice(depth))) return true;
    if (remaining == 0) {
      VertexSet set = tables_.problem().forced;
      for (int pos : picks_) set.push_back(tables_.problem().candidates[pos]);
      std::sort(set.begin(), set.end());
      return visit(std::move(set));
    }
    for (int pos = next; pos <= tables_.candidates() - remaining; ++pos) {
      push(depth, pos);
      const bool keep_going = walk(depth + 1, pos + 1, visit);
      picks_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const SearchTables& tables_;
  int extra_;
  std::vector<Word> stack_;
  std::vector<int> picks_;
};

}  // namespace

std::optional<VertexSet> first_cover(const CoverProblem& problem, int extra) {
  const int m = static_cast<int>(problem.candidates.size());
  if (extra < 0 || extra > m) return std::nullopt;
  if (extra == 0) {
    if (satisfies(problem, problem.forced)) return problem.forced;
    return std::nullopt;
  }
  const SearchTables tables(problem);
  const int branches = m - extra + 1;
  std::vector<std::optional<VertexSet>> found(branches);
  std::atomic<int> best{branches};

#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < branches; ++b) {
    if (b > best.load(std::memory_order_relaxed)) continue;
    BranchWalker walker(tables, extra);
    walker.run(b, [&](VertexSet set) {
      found[b] = std::move(set);
      return false;
    });
    if (found[b]) {
      int current = best.load();
      while (b < current && !best.compare_exchange_weak(current, b)) {
      }
    }
  }
  for (auto& f : found) {
    if (f) return std::move(f);
  }
  return std::nullopt;
}

std::vector<VertexSet> all_covers(const CoverProblem& problem, int extra) {
  const int m = static_cast<int>(problem.candidates.size());
  if (extra < 0 || extra > m) return {};
  if (extra == 0) {
    if (satisfies(problem, problem.forced)) return {problem.forced};
    return {};
  }
  const SearchTables tables(problem);
  const int branches = m - extra + 1;
  std::vector<std::vector<VertexSet>> per_branch(branches);

#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < branches; ++b) {
    BranchWalker walker(tables, extra);
    walker.run(b, [&](VertexSet set) {
      per_branch[b].push_back(std::move(set));
      return true;
    });
  }
  std::vector<VertexSet> out;
  for (auto& sets : per_branch) {
    std::move(sets.begin(), sets.end(), std::back_inserter(out));
  }
  return out;
}

Lattice cover_lattice(const CoverProblem& problem) {
  const int n = problem.cover->order();
  if (n > kMaxLatticeOrder) {
    throw Error(ErrorCode::OrderCapExceeded, "lattice order " + std::to_string(n));
  }
  const std::size_t words = problem.cover->words();
  const auto total = static_cast<std::int64_t>(std::size_t{1} << n);
  Lattice lattice(static_cast<std::size_t>(total), 0);

#pragma omp parallel
  {
    std::vector<Word> once(words), twice(words);
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      std::fill(once.begin(), once.end(), 0);
      std::fill(twice.begin(), twice.end(), 0);
      for (auto bits = static_cast<std::uint64_t>(mask); bits != 0; bits &= bits - 1) {
        auto row = problem.cover->distinguishes(std::countr_zero(bits));
        for (std::size_t i = 0; i < words; ++i) {
          twice[i] |= once[i] & row[i];
          once[i] |= row[i];
        }
      }
      bool ok = true;
      for (std::size_t i = 0; i < words && ok; ++i) {
        ok = (problem.need_once[i] & ~once[i]) == 0 && (problem.need_twice[i] & ~twice[i]) == 0;
      }
      lattice[static_cast<std::size_t>(mask)] = ok ? 1 : 0;
    }
  }
  return lattice;
}

}  // namespace ftmd::kernels::omp
