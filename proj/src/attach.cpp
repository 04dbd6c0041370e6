#include "ftmd/attach.hpp"

#include <algorithm>
#include <cstdlib>

#include "ftmd/error.hpp"
#include "ftmd/kernels.hpp"
#include "ftmd/pair_cover.hpp"

namespace ftmd {

namespace {

VertexSet sorted_anchors(const Graph& g, const VertexSet& at) {
  VertexSet s = at;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorCode::IllegalParameter, "anchor set has repeated members");
  }
  if (!s.empty() && (s.front() < 0 || s.back() >= g.order())) {
    throw Error(ErrorCode::IllegalParameter, "anchor outside the graph");
  }
  return s;
}

bool contains(const VertexSet& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

bool is_attaching_ft_resolving(const Graph& g, const VertexSet& at, const VertexSet& f) {
  const VertexSet anchors = sorted_anchors(g, at);
  for (Vertex x : f) {
    if (contains(anchors, x)) {
      throw Error(ErrorCode::OverlapError, "vertex " + std::to_string(x) + " is an anchor");
    }
  }
  if (f.empty()) return is_resolving(g.distances(), anchors);
  for (Vertex x : f) {
    VertexSet rest = anchors;
    for (Vertex y : f) {
      if (y != x) rest.push_back(y);
    }
    if (!is_resolving(g.distances(), rest)) return false;
  }
  return true;
}

FtReport fdim_star(const Graph& g, const VertexSet& at, const OracleCaps& caps) {
  const VertexSet anchors = sorted_anchors(g, at);
  if (anchors.empty()) throw Error(ErrorCode::IllegalParameter, "empty anchor set");
  require_order_within(g.order(), caps.search, "fdim_star");

  const PairCover cover(g.distances());
  CoverProblem problem = attaching_problem(cover, anchors);
  // every pair missed by the anchors is split by both of its (free) ends
  propagate_forced(problem);
  for (int extra = 0;; ++extra) {
    if (auto found = kernels::omp::first_cover(problem, extra)) {
      return FtReport{static_cast<int>(found->size()), std::move(*found), std::nullopt, "oracle"};
    }
  }
}

int fdim_star_closed_form(ClosedFormFamily family, int order, const VertexSet& at) {
  VertexSet s = at;
  std::sort(s.begin(), s.end());
  const bool malformed = s.empty() || s.front() < 0 || s.back() >= order ||
                         std::adjacent_find(s.begin(), s.end()) != s.end();
  if (malformed) throw Error(ErrorCode::UnsupportedConfiguration, "anchor descriptor");
  const int anchors = static_cast<int>(s.size());

  switch (family) {
    case ClosedFormFamily::Path:
      if (order < 2) throw Error(ErrorCode::UnsupportedConfiguration, "path order < 2");
      return (anchors == 1 && s[0] != 0 && s[0] != order - 1) ? 2 : 0;
    case ClosedFormFamily::Cycle:
      if (order < 3) throw Error(ErrorCode::UnsupportedConfiguration, "cycle order < 3");
      if (anchors == 1) return 2;
      if (anchors == 2 && order % 2 == 0 && s[1] - s[0] == order / 2) return 2;
      return 0;
    case ClosedFormFamily::Complete:
      if (order < 2) throw Error(ErrorCode::UnsupportedConfiguration, "complete order < 2");
      return anchors < order - 1 ? order - anchors : 0;
  }
  throw Error(ErrorCode::UnsupportedConfiguration, "family");
}

C1Diagnostic check_c1(const Graph& g, const VertexSet& at) {
  const VertexSet anchors = sorted_anchors(g, at);
  if (anchors.empty()) throw Error(ErrorCode::IllegalParameter, "empty anchor set");
  const auto& d = g.distances();

  C1Diagnostic out;
  out.holds = true;
  for (Vertex a1 : anchors) {
    for (Vertex v = 0; v < g.order() && out.holds; ++v) {
      if (contains(anchors, v)) continue;
      const bool dominated = std::any_of(anchors.begin(), anchors.end(),
                                         [&](Vertex a2) { return d(a1, a2) >= d(v, a2); });
      if (!dominated) {
        out.holds = false;
        out.violation = std::pair{a1, v};
      }
    }
  }

  const auto profile = eccentricity_and_diameter(d);
  const bool several = anchors.size() >= 2;
  if (static_cast<int>(anchors.size()) == g.order()) out.sufficient_cases.push_back(1);

  bool independent = true;
  bool equal_eccentric = true;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      const Vertex u1 = anchors[i], u2 = anchors[j];
      if (d(u1, u2) == 1) independent = false;
      const int e1 = profile.eccentricity[u1], e2 = profile.eccentricity[u2];
      if (e1 != e2 || e1 != d(u1, u2)) equal_eccentric = false;
    }
  }
  if (several && independent && profile.diameter == 2) out.sufficient_cases.push_back(2);
  if (several && equal_eccentric) out.sufficient_cases.push_back(3);

  if (is_even_graph(d)) {
    const bool closed = std::all_of(anchors.begin(), anchors.end(), [&](Vertex u) {
      return contains(anchors, *antipode(d, u));
    });
    if (closed) out.sufficient_cases.push_back(4);
  }
  return out;
}

bool check_c2(const Graph& g, const VertexSet& at) {
  if (at.size() != 1) return false;
  const auto leaves = is_path_graph(g);
  if (!leaves) return true;
  return at[0] != leaves->first && at[0] != leaves->second;
}

}  // namespace ftmd
