#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ftmd/automorphism.hpp"
#include "ftmd/error.hpp"
#include "ftmd/families.hpp"
#include "graph_pool.hpp"

using namespace ftmd;

namespace {

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::build(a + b, edges);
}

bool preserves_edges(const Graph& g, const Permutation& p) {
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(p[u], p[v])) return false;
  }
  return true;
}

// Every permutation tested directly; only for tiny graphs.
std::vector<Permutation> brute_force_automorphisms(const Graph& g) {
  Permutation p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    if (preserves_edges(g, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(Automorphisms, GroupOrders) {
  EXPECT_EQ(automorphisms(families::cycle(7)).size(), 14U);
  EXPECT_EQ(automorphisms(families::complete(5)).size(), 120U);
  EXPECT_EQ(automorphisms(families::path(6)).size(), 2U);
  EXPECT_EQ(automorphisms(families::hypercube(3)).size(), 48U);
  EXPECT_EQ(automorphisms(families::paw()).size(), 2U);
}

TEST(Automorphisms, MatchBruteForceOnPool) {
  for (const Graph& g : ftmd::testing::connected_graphs(2, 6)) {
    ASSERT_EQ(automorphisms(g), brute_force_automorphisms(g));
  }
}

TEST(Automorphisms, FindMapsRequestedVertex) {
  const Graph c6 = families::cycle(6);
  const auto p = find_automorphism(c6, 0, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ((*p)[0], 4);
  EXPECT_TRUE(preserves_edges(c6, *p));
  EXPECT_FALSE(find_automorphism(families::star(3), 0, 1).has_value());
}

TEST(VertexTransitivity, KnownValues) {
  EXPECT_TRUE(is_vertex_transitive(families::cycle(7)));
  EXPECT_FALSE(is_vertex_transitive(families::paw()));
  EXPECT_TRUE(is_vertex_transitive(complete_bipartite(3, 3)));
  EXPECT_TRUE(is_vertex_transitive(families::hypercube(3)));
  EXPECT_FALSE(is_vertex_transitive(complete_bipartite(2, 3)));
}

TEST(VertexTransitivity, ImpliesEqualEccentricities) {
  for (const Graph& g : ftmd::testing::connected_graphs(2, 7)) {
    if (!is_vertex_transitive(g)) continue;
    const auto ecc = eccentricity_and_diameter(g.distances()).eccentricity;
    EXPECT_TRUE(std::all_of(ecc.begin(), ecc.end(), [&](int e) { return e == ecc[0]; }));
  }
}

TEST(VertexTransitivity, CapEnforced) {
  try {
    is_vertex_transitive(families::cycle(13));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderCapExceeded);
  }
  EXPECT_TRUE(is_vertex_transitive(families::cycle(13), 13));
}
