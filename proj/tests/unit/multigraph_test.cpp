#include "transversal/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "transversal/permutation.hpp"

namespace transversal {
namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

Multigraph Graph(std::size_t n, const Pairs& pairs) { return Multigraph::from_pairs(n, pairs); }

Multigraph Triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Multigraph K4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

TEST(MultigraphTest, ValencyCountsLoopsTwice) {
  EXPECT_EQ(Graph(1, {}).valency(0), 0u);
  EXPECT_EQ(Graph(2, {{0, 0}, {0, 1}}).valency(0), 3u);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(K4().valency(v), 3u);
}

TEST(MultigraphTest, ValencyOfUnknownVertexThrows) {
  try {
    Triangle().valency(7);
    FAIL() << "expected an exception";
  } catch (const std::out_of_range& e) {
    EXPECT_STREQ(e.what(), "vertex not in graph");
  }
}

TEST(MultigraphTest, RejectsDanglingEndpointsAndDuplicateIds) {
  EXPECT_THROW(Multigraph(2, {{0, 0, 5}}), std::invalid_argument);
  EXPECT_THROW(Multigraph(2, {{3, 0, 1}, {3, 1, 0}}), std::invalid_argument);
}

TEST(MultigraphTest, ContractTriangleGivesDoubleEdge) {
  const Multigraph g = Triangle().contract_edge(0);
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.loop_count(), 0u);
  EXPECT_EQ(g.valency(0), 2u);
  EXPECT_EQ(g.valency(2), 2u);
  EXPECT_FALSE(g.has_vertex(1));  // head retired, tail kept
}

TEST(MultigraphTest, ContractOneCopyOfDoubleEdgeLeavesLoop) {
  const Multigraph g = Graph(2, {{0, 1}, {0, 1}}).contract_edge(0);
  EXPECT_EQ(g.vertex_count(), 1u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.edges()[0].is_loop());
  EXPECT_EQ(g.edges()[0].id, 1u);
}

TEST(MultigraphTest, ContractPathEdge) {
  const Multigraph g = Graph(3, {{0, 1}, {1, 2}}).contract_edge(0);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.loop_count(), 0u);
  EXPECT_EQ(g.edges()[0], (EdgeRecord{1, 0, 2}));
}

TEST(MultigraphTest, ContractRewritesAntiParallelAndLoopsAtHead) {
  const Multigraph g = Graph(2, {{0, 1}, {1, 0}, {1, 1}}).contract_edge(0);
  EXPECT_EQ(g.loop_count(), 2u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.tail, 0u);
}

TEST(MultigraphTest, ContractErrors) {
  try {
    Graph(1, {{0, 0}}).contract_edge(0);
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "cannot contract a loop");
  }
  EXPECT_THROW(Triangle().contract_edge(42), std::out_of_range);
}

TEST(MultigraphTest, Delete) {
  const Multigraph path = Triangle().delete_edge(2);
  EXPECT_EQ(path.vertex_count(), 3u);
  EXPECT_EQ(path.edge_count(), 2u);
  EXPECT_TRUE(path.is_tree());

  const Multigraph lone = Graph(1, {{0, 0}}).delete_edge(0);
  EXPECT_EQ(lone.vertex_count(), 1u);
  EXPECT_EQ(lone.edge_count(), 0u);

  const Multigraph single = Graph(2, {{0, 1}, {0, 1}}).delete_edge(1);
  ASSERT_EQ(single.edge_count(), 1u);
  EXPECT_EQ(single.edges()[0].id, 0u);

  EXPECT_THROW(Triangle().delete_edge(9), std::out_of_range);
}

TEST(MultigraphTest, Components) {
  EXPECT_EQ(Graph(5, {}).component_count(), 5u);
  EXPECT_EQ(Triangle().component_count(), 1u);
  const auto blocks = Graph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}}).components();
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(blocks[1], (std::vector<VertexId>{3}));
}

TEST(MultigraphTest, DegreeParity) {
  EXPECT_FALSE(K4().all_degrees_even());
  EXPECT_TRUE(Triangle().all_degrees_even());
  EXPECT_TRUE(Graph(1, {{0, 0}, {0, 0}, {0, 0}}).all_degrees_even());
}

// Random multigraphs with loops and parallel edges.
Multigraph RandomMultigraph(std::mt19937_64& rng) {
  const std::size_t n = 1 + bounded_draw(rng, 7);
  const std::size_t m = bounded_draw(rng, 12);
  Pairs pairs;
  for (std::size_t k = 0; k < m; ++k) {
    pairs.emplace_back(static_cast<VertexId>(bounded_draw(rng, n)),
                       static_cast<VertexId>(bounded_draw(rng, n)));
  }
  return Graph(n, pairs);
}

TEST(MultigraphPropertyTest, HandshakeAndContractionCounts) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = RandomMultigraph(rng);
    std::size_t total = 0;
    for (VertexId v : g.vertices()) total += g.valency(v);
    EXPECT_EQ(total, 2 * g.edge_count());

    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      const Multigraph h = g.contract_edge(e.id);
      EXPECT_EQ(h.vertex_count() + 1, g.vertex_count());
      EXPECT_EQ(h.edge_count() + 1, g.edge_count());
      EXPECT_EQ(h.component_count(), g.component_count());
    }
  }
}

TEST(MultigraphPropertyTest, DeleteThenAddBackKeepsValencies) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = RandomMultigraph(rng);
    for (const auto& e : g.edges()) {
      const Multigraph h = g.delete_edge(e.id).add_edge(e.tail, e.head);
      for (VertexId v : g.vertices()) EXPECT_EQ(h.valency(v), g.valency(v));
    }
  }
}

TEST(MultigraphPropertyTest, ComponentsIgnoreEdgeOrder) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = RandomMultigraph(rng);
    std::vector<EdgeRecord> edges(g.edges().begin(), g.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    const Multigraph shuffled(g.vertex_count(), edges);
    EXPECT_EQ(shuffled.components(), g.components());
  }
}

}  // namespace
}  // namespace transversal
