#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ftmd {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ordered subset of the vertices of one graph.
using VertexSet = std::vector<Vertex>;

/// All-pairs hop distances of a connected graph, stored row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int order, std::vector<int> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order() const noexcept { return order_; }

  int operator()(Vertex u, Vertex w) const noexcept {
    return entries_[static_cast<std::size_t>(u) * order_ + w];
  }

  std::span<const int> row(Vertex u) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(u) * order_,
            static_cast<std::size_t>(order_)};
  }

 private:
  int order_ = 0;
  std::vector<int> entries_;
};

/// Immutable simple connected graph on vertices 0..n-1 with at least two
/// vertices. The distance matrix is computed once at construction.
class Graph {
 public:
  /// Throws Error with OrderTooSmall, VertexOutOfRange, SelfLoop,
  /// DuplicateEdge or DisconnectedInput.
  static Graph build(int order, const std::vector<Edge>& edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Edges normalised to u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return distances_(u, v) == 1; }

  const DistanceMatrix& distances() const noexcept { return distances_; }
  int distance(Vertex u, Vertex v) const noexcept { return distances_(u, v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  DistanceMatrix distances_;
};

/// BFS distances; exposed separately so callers can recompute and compare.
DistanceMatrix all_pairs_distances(const Graph& g);

struct EccentricityProfile {
  std::vector<int> eccentricity;
  int diameter = 0;
};

EccentricityProfile eccentricity_and_diameter(const DistanceMatrix& d);

/// Every vertex has exactly one vertex at distance diam.
bool is_even_graph(const DistanceMatrix& d);

/// Unique diametral partner of v in an even graph; nullopt when v has
/// zero or several vertices at distance diam.
std::optional<Vertex> antipode(const DistanceMatrix& d, Vertex v);

/// The two leaves (smaller first) when g is a path; nullopt otherwise.
std::optional<std::pair<Vertex, Vertex>> is_path_graph(const Graph& g);

/// Partition into classes of mutual twins: u and w are twins when
/// d(u,z) = d(w,z) for every z outside {u, w}. Classes are sorted and
/// listed by smallest member.
std::vector<VertexSet> twin_classes(const Graph& g);

/// Edge-list text: "n m" header then m lines "u v"; blank lines and '#'
/// comments are skipped. Throws Error(MalformedInput) on syntax problems
/// and the build errors on semantic ones.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace ftmd
