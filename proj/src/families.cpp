#include "ftmd/families.hpp"

#include "ftmd/error.hpp"

namespace ftmd::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IllegalParameter, what);
}

}  // namespace

Graph path(int n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

Graph complete(int n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

Graph star(int leaves) {
  require(leaves >= 1, "star needs t >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::build(leaves + 1, edges);
}

Graph paw() { return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph hypercube(int dimension) {
  require(dimension >= 1 && dimension <= 16, "hypercube needs 1 <= d <= 16");
  const int n = 1 << dimension;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (int bit = 0; bit < dimension; ++bit) {
      const Vertex v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

Graph bowtie() { return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Decomposition figure2() {
  std::vector<PieceSpec> pieces;
  pieces.push_back({complete(4), {{0, "a1"}}});
  pieces.push_back({complete(3), {{0, "a1"}, {1, "a2"}, {2, "a3"}}});
  pieces.push_back({paw(), {{3, "a2"}}});
  pieces.push_back({cycle(8), {{0, "a3"}, {4, "a4"}}});
  pieces.push_back({complete(5), {{0, "a4"}}});
  return Decomposition::point_attach(std::move(pieces));
}

std::variant<Graph, Decomposition> generate(const std::string& family,
                                            const std::vector<int>& params) {
  auto arity = [&](std::size_t count) {
    require(params.size() == count,
            family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "path") {
    arity(1);
    return path(params[0]);
  }
  if (family == "cycle") {
    arity(1);
    return cycle(params[0]);
  }
  if (family == "complete") {
    arity(1);
    return complete(params[0]);
  }
  if (family == "star") {
    arity(1);
    return star(params[0]);
  }
  if (family == "hypercube") {
    arity(1);
    return hypercube(params[0]);
  }
  if (family == "paw") {
    arity(0);
    return paw();
  }
  if (family == "bowtie") {
    arity(0);
    return bowtie();
  }
  if (family == "figure2") {
    arity(0);
    return figure2();
  }
  throw Error(ErrorCode::IllegalParameter, "unknown family '" + family + "'");
}

}  // namespace ftmd::families
