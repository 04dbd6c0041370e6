#include "ftmd/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "ftmd/error.hpp"

namespace ftmd {

namespace {

std::vector<int> bfs_row(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix bfs_all(const std::vector<std::vector<Vertex>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = bfs_row(adjacency, u);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace

Graph Graph::build(int order, const std::vector<Edge>& edges) {
  if (order < 2) {
    throw Error(ErrorCode::OrderTooSmall, "graph order " + std::to_string(order) + " < 2");
  }
  Graph g;
  g.order_ = order;
  g.adjacency_.assign(order, {});
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." +
                      std::to_string(order - 1));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
    Edge e = std::minmax(u, v);
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  auto first = bfs_row(g.adjacency_, 0);
  if (auto it = std::find(first.begin(), first.end(), -1); it != first.end()) {
    throw Error(ErrorCode::DisconnectedInput,
                "vertex " + std::to_string(it - first.begin()) + " unreachable from 0");
  }
  g.distances_ = bfs_all(g.adjacency_);
  return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  std::vector<std::vector<Vertex>> adjacency(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adjacency[v] = g.neighbors(v);
  return bfs_all(adjacency);
}

EccentricityProfile eccentricity_and_diameter(const DistanceMatrix& d) {
  EccentricityProfile out;
  out.eccentricity.resize(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    auto row = d.row(v);
    out.eccentricity[v] = *std::max_element(row.begin(), row.end());
    out.diameter = std::max(out.diameter, out.eccentricity[v]);
  }
  return out;
}

bool is_even_graph(const DistanceMatrix& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!antipode(d, v)) return false;
  }
  return true;
}

std::optional<Vertex> antipode(const DistanceMatrix& d, Vertex v) {
  const int diam = eccentricity_and_diameter(d).diameter;
  std::optional<Vertex> found;
  for (Vertex w = 0; w < d.order(); ++w) {
    if (d(v, w) != diam) continue;
    if (found) return std::nullopt;
    found = w;
  }
  return found;
}

std::optional<std::pair<Vertex, Vertex>> is_path_graph(const Graph& g) {
  if (static_cast<int>(g.size()) != g.order() - 1) return std::nullopt;
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1) leaves.push_back(v);
  }
  // connected with n-1 edges and max degree 2 means a path
  return std::pair{leaves.front(), leaves.back()};
}

std::vector<VertexSet> twin_classes(const Graph& g) {
  const auto& d = g.distances();
  const int n = g.order();
  auto twins = [&](Vertex u, Vertex w) {
    for (Vertex z = 0; z < n; ++z) {
      if (z != u && z != w && d(u, z) != d(w, z)) return false;
    }
    return true;
  };
  std::vector<VertexSet> classes;
  for (Vertex v = 0; v < n; ++v) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const VertexSet& c) { return twins(c.front(), v); });
    if (it == classes.end()) {
      classes.push_back({v});
    } else {
      it->push_back(v);
    }
  }
  return classes;
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorCode::MalformedInput, "empty edge list");

  auto parse_pair = [](const std::string& line, std::size_t lineno) {
    std::istringstream ss(line);
    long a = 0, b = 0;
    std::string rest;
    if (!(ss >> a >> b) || (ss >> rest)) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(lineno) + ": expected two integers");
    }
    return std::pair<long, long>{a, b};
  };

  auto [n, m] = parse_pair(lines[0], 1);
  if (n < 0 || m < 0) throw Error(ErrorCode::MalformedInput, "negative header value");
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw Error(ErrorCode::MalformedInput, "header declares " + std::to_string(m) +
                                               " edges, found " +
                                               std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = parse_pair(lines[i], i + 1);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace ftmd
