#include <gtest/gtest.h>

#include <numeric>

#include "ivspec/error.hpp"
#include "ivspec/generators.hpp"
#include "ivspec/graph.hpp"
#include "oracles.hpp"

namespace ivspec {
namespace {

Graph two_triangles() {
  return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

std::size_t degree_sum(const Graph& g) {
  std::size_t s = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s += g.degree(v);
  return s;
}

TEST(BuildGraph, Triangle) {
  const Graph g = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(2), (Edge{0, 2}));
  EXPECT_EQ(degree_sum(g), 6u);
}

TEST(BuildGraph, RejectsParallelEdge) {
  try {
    Graph::build(4, {{0, 1}, {0, 1}});
    FAIL();
  } catch (const InvalidGraph& e) {
    EXPECT_EQ(e.edge_index(), 1u);
  }
  EXPECT_THROW(Graph::build(4, {{0, 1}, {1, 0}}), InvalidGraph);
}

TEST(BuildGraph, RejectsLoopAndRange) {
  EXPECT_THROW(Graph::build(2, {{0, 0}}), InvalidGraph);
  EXPECT_THROW(Graph::build(2, {{0, 2}}), InvalidGraph);
}

TEST(BuildGraph, IncidenceIsAscending) {
  const Graph g = generate(CompleteSpec{5});
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    EXPECT_TRUE(std::is_sorted(inc.begin(), inc.end()));
    for (EdgeIndex e : inc) EXPECT_TRUE(g.edge(e).touches(v));
  }
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(generate(CycleSpec{3})), 2u);
  EXPECT_EQ(min_degree(generate(CompleteSpec{4})), 3u);
  EXPECT_EQ(min_degree(Graph::build(4, {{0, 1}, {1, 2}, {0, 2}})), 0u);
  EXPECT_THROW(min_degree(Graph{}), PreconditionError);
}

TEST(Regularity, Examples) {
  EXPECT_EQ(regularity(generate(PetersenSpec{})), 3u);
  EXPECT_EQ(regularity(Graph::build(3, {{0, 1}, {1, 2}})), std::nullopt);
  EXPECT_EQ(regularity(Graph::build(1, {})), 0u);
  EXPECT_THROW(regularity(Graph{}), PreconditionError);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(Graph{}).count(), 0u);
  const auto parts = components(two_triangles());
  ASSERT_EQ(parts.count(), 2u);
  EXPECT_EQ(parts.blocks[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(parts.blocks[1], (VertexSet{3, 4, 5}));
  EXPECT_EQ(components(generate(CycleSpec{5})).count(), 1u);
}

TEST(Induced, Examples) {
  const Graph k4 = generate(CompleteSpec{4});
  const Graph tri = induced(k4, {0, 1, 2});
  EXPECT_EQ(tri.vertex_count(), 3u);
  EXPECT_EQ(tri.edge_count(), 3u);

  const Graph c5 = generate(CycleSpec{5});
  const Graph pair = induced(c5, {0, 2});
  EXPECT_EQ(pair.vertex_count(), 2u);
  EXPECT_EQ(pair.edge_count(), 0u);
  EXPECT_EQ(pair.parent_id(1), 2u);

  EXPECT_TRUE(induced(c5, {}).empty());
  EXPECT_THROW(induced(c5, {7}), PreconditionError);
}

TEST(Induced, IdMapComposes) {
  const Graph c6 = generate(CycleSpec{6});
  const Graph a = induced(c6, {1, 2, 3, 5});
  const Graph b = induced(a, {1, 3}); // parent ids 2 and 5
  EXPECT_EQ(b.parent_id(0), 2u);
  EXPECT_EQ(b.parent_id(1), 5u);
}

TEST(Induced, FullVertexSetIsIdentity) {
  for (const GeneratorSpec& spec : {GeneratorSpec{PetersenSpec{}}, GeneratorSpec{PrismSpec{4}},
                                    GeneratorSpec{CompleteBipartiteSpec{2, 3}}}) {
    const Graph g = generate(spec);
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    const Graph h = induced(g, VertexSet(all));
    ASSERT_EQ(h.vertex_count(), g.vertex_count());
    ASSERT_EQ(h.edge_count(), g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) EXPECT_EQ(h.edge(e), g.edge(e));
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(h.parent_id(v), v);
    EXPECT_EQ(degree_sum(h), 2 * h.edge_count());
  }
}

TEST(Distance, Examples) {
  const Graph c5 = generate(CycleSpec{5});
  EXPECT_EQ(distance(c5, 0, 1), 1u);
  EXPECT_EQ(distance(c5, 0, 2), 2u);
  EXPECT_EQ(distance(c5, 3, 3), 0u);
  EXPECT_EQ(distance(two_triangles(), 0, 4), std::nullopt);
  EXPECT_THROW(distance(c5, 0, 5), PreconditionError);
}

TEST(DistanceToSet, Examples) {
  const Graph c5 = generate(CycleSpec{5});
  EXPECT_EQ(distance_to_set(c5, 2, {2, 4}), 0u);
  EXPECT_EQ(distance_to_set(c5, 1, {2}), 1u);
  EXPECT_EQ(distance_to_set(two_triangles(), 0, {3, 5}), std::nullopt);
  EXPECT_THROW(distance_to_set(c5, 0, {}), PreconditionError);
}

TEST(IsPathForest, Examples) {
  EXPECT_TRUE(is_path_forest(Graph::build(5, {{0, 1}, {1, 2}, {3, 4}})));
  EXPECT_FALSE(is_path_forest(generate(CycleSpec{4})));
  EXPECT_FALSE(is_path_forest(Graph::build(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_TRUE(is_path_forest(Graph::build(3, {})));
  EXPECT_TRUE(is_path_forest(Graph{}));
}

// Every simple graph on n <= 7 labelled vertices, by edge-subset bitmask.
TEST(GraphProperties, ExhaustiveSmallGraphs) {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<Edge> all;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) all.push_back({i, j});
    const std::uint32_t subsets = 1u << all.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) edges.push_back(all[i]);
      const Graph g = Graph::build(n, edges);
      ASSERT_EQ(degree_sum(g), 2 * g.edge_count());
      ASSERT_EQ(is_path_forest(g), oracle::path_forest_by_definition(g)) << "n=" << n << " mask=" << mask;
      // Components partition V(G) with no edge between blocks.
      const auto parts = components(g);
      std::vector<std::size_t> block_of(n);
      std::size_t covered = 0;
      for (std::size_t b = 0; b < parts.count(); ++b) {
        for (Vertex v : parts.blocks[b]) block_of[v] = b;
        covered += parts.blocks[b].size();
      }
      ASSERT_EQ(covered, n);
      for (const Edge& e : g.edges()) ASSERT_EQ(block_of[e.u], block_of[e.v]);
    }
  }
}

// components + (edges of a spanning forest) = n, with the forest grown by
// union-find independently of components().
TEST(GraphProperties, ForestRankIdentity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = generate(RandomRegularSpec{12, 3, seed});
    const Graph sub = induced(g, {0, 1, 2, 3, 4, 5, 6});
    for (const Graph* h : {&g, &sub}) {
      std::vector<std::size_t> parent(h->vertex_count());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::size_t forest_edges = 0;
      for (const Edge& e : h->edges()) {
        const auto a = find(e.u), b = find(e.v);
        if (a != b) {
          parent[a] = b;
          ++forest_edges;
        }
      }
      EXPECT_EQ(components(*h).count() + forest_edges, h->vertex_count());
    }
  }
}

TEST(GraphProperties, DistanceMetricAgainstFloydWarshall) {
  std::vector<Graph> graphs = {generate(PetersenSpec{}), generate(PrismSpec{5}), two_triangles(),
                               Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}})};
  for (const Graph& g : graphs) {
    const auto d = oracle::all_pairs(g);
    const std::size_t n = g.vertex_count();
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        ASSERT_EQ(distance(g, x, y), d[x][y]);
        ASSERT_EQ(distance(g, x, y), distance(g, y, x));
        for (Vertex z = 0; z < n; ++z) {
          if (d[x][y] && d[y][z]) ASSERT_LE(*distance(g, x, z), *d[x][y] + *d[y][z]);
        }
      }
    }
  }
}

} // namespace
} // namespace ivspec
