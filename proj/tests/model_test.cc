/*******************************************************************************
 * @file:   model_test.cc
 ******************************************************************************/
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracle.h"
#include "streamep/batch.h"
#include "streamep/model.h"
#include "testkit.h"

namespace streamep {
namespace {

using testkit::Adjacency;
using testkit::Edge;
using testkit::TempDir;

CspacModel single_batch_model(const Adjacency &adjacency) {
  TempDir dir;
  auto stream = open_graph_stream(testkit::write_graph(dir, "g.metis", adjacency));
  const auto n = static_cast<NodeID>(adjacency.size());
  return build_cspac(load_batch(*stream, n, 1));
}

std::vector<Edge> aux_pairs(const CspacModel &model) {
  std::vector<Edge> pairs;
  for (const auto &e : model.aux_edges) {
    pairs.emplace_back(e.a, e.b);
  }
  return pairs;
}

void expect_path_property(const CspacModel &model, NodeID n) {
  EXPECT_EQ(testkit::path_property_error(model, n), "");
}

TEST(BuildCspac, TriangleBecomesTriangle) {
  const CspacModel model = single_batch_model({{1, 2}, {0, 2}, {0, 1}});
  EXPECT_EQ(model.edge_vertices, (std::vector<std::pair<NodeID, NodeID>>{{0, 1}, {0, 2}, {1, 2}}));
  auto pairs = aux_pairs(model);
  for (auto &[a, b] : pairs) {
    if (b < a) {
      std::swap(a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  EXPECT_EQ(pairs, (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_FALSE(model.augmented);
  EXPECT_TRUE(model.past_links.empty());
}

TEST(BuildCspac, PathOfThreeHasOneAuxEdge) {
  const CspacModel model = single_batch_model({{1}, {0, 2}, {1}});
  EXPECT_EQ(model.edge_vertex_count(), 2u);
  ASSERT_EQ(model.aux_edges.size(), 1u);
  EXPECT_EQ(model.aux_edges[0].vertex, 1u);
}

TEST(BuildCspac, StarBecomesPath) {
  const CspacModel model = single_batch_model({{1, 2, 3}, {0}, {0}, {0}});
  EXPECT_EQ(model.edge_vertex_count(), 3u);
  EXPECT_EQ(aux_pairs(model), (std::vector<Edge>{{0, 1}, {1, 2}}));
  expect_path_property(model, 4);
}

TEST(BuildCspac, SizeIdentityOnConnectedGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const NodeID n = 2 + static_cast<NodeID>(rng() % 199);
    const auto adjacency = testkit::random_connected_graph(n, rng() % (2 * n), rng);
    const EdgeID m = testkit::edge_count(adjacency);
    const CspacModel model = single_batch_model(adjacency);
    EXPECT_EQ(model.edge_vertex_count(), m);
    EXPECT_EQ(model.aux_edges.size(), 2 * m - n);
    expect_path_property(model, n);
  }
}

TEST(BuildCspac, IsolatedVerticesUseCorrectedCount) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const NodeID n = 5 + static_cast<NodeID>(rng() % 60);
    const auto adjacency = testkit::random_graph(n, rng() % n, rng);
    EdgeID expected = 0;
    for (const auto &list : adjacency) {
      expected += list.empty() ? 0 : list.size() - 1;
    }
    const CspacModel model = single_batch_model(adjacency);
    EXPECT_EQ(model.aux_edges.size(), expected);
  }
}

TEST(BuildCspac, MatchesContractedSplitAndConnect) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const NodeID n = 1 + static_cast<NodeID>(rng() % 50);
    const auto adjacency = testkit::random_graph(n, rng() % (3 * n), rng);
    EXPECT_EQ(testkit::aux_as_graph_edges(single_batch_model(adjacency)), oracle::contracted_spac(adjacency));
  }
}

TEST(BuildCspac, PastVerticesGetPathsAndLinks) {
  TempDir dir;
  // Batch 2 = {2, 3}; both connect to past vertex 0.
  const Adjacency adjacency = {{2, 3}, {}, {0, 3}, {2, 0}};
  auto stream = open_graph_stream(testkit::write_graph(dir, "g.metis", adjacency));
  BatchLoader loader(*stream, 2);
  EXPECT_EQ(build_cspac(loader.next()).edge_vertex_count(), 0u);
  const CspacModel model = build_cspac(loader.next());
  EXPECT_EQ(model.edge_vertices, (std::vector<std::pair<NodeID, NodeID>>{{2, 0}, {2, 3}, {3, 0}}));
  EXPECT_EQ(model.past_links, (std::vector<std::pair<NodeID, NodeID>>{{0, 0}, {2, 0}}));
  expect_path_property(model, 4);
  EXPECT_EQ(model.aux_edges.size(), 3u);
}

class AugmentTest : public ::testing::Test {
protected:
  // Star 0-{1,2,3} in batch one (delta 4), vertex 4 attaches to 0 in batch two.
  void SetUp() override {
    const Adjacency adjacency = {{1, 2, 3, 4}, {0}, {0}, {0}, {0}};
    auto stream = open_graph_stream(testkit::write_graph(dir, "g.metis", adjacency));
    BatchLoader loader(*stream, 4);
    first = loader.next();
    second = loader.next();
  }

  TempDir dir;
  BatchGraph first;
  BatchGraph second;
  std::mt19937_64 rng{1};
};

TEST_F(AugmentTest, FirstBatchGetsOnlyArtificialVertices) {
  PartitionState state(5, 3, 10, RecordMode::Minimal);
  CspacModel model = build_cspac(first);
  augment_with_blocks(model, state, ModelMode::minimal(), rng);
  EXPECT_TRUE(model.augmented);
  EXPECT_EQ(model.vertex_count(), 3u + 3u);
  EXPECT_EQ(model.artificial_weights, (std::vector<Weight>{0, 0, 0}));
  EXPECT_TRUE(model.artificial_edges.empty());
}

TEST_F(AugmentTest, MinimalLinksMostRecentBlock) {
  PartitionState state(5, 6, 10, RecordMode::Minimal);
  state.assign_edge(0, 1, 0);
  state.assign_edge(0, 2, 5);
  state.assign_edge(0, 3, 3);
  CspacModel model = build_cspac(second);
  augment_with_blocks(model, state, ModelMode::minimal(), rng);
  ASSERT_EQ(model.artificial_edges.size(), 1u);
  EXPECT_EQ(model.artificial_edges[0].edge_vertex, 0u);
  EXPECT_EQ(model.artificial_edges[0].block, 3u);
  EXPECT_EQ(model.artificial_edges[0].w, 1);
  EXPECT_EQ(model.artificial_weights, (std::vector<Weight>{1, 0, 0, 1, 0, 1}));
}

TEST_F(AugmentTest, MaximalLinksEveryRecordedBlock) {
  PartitionState state(5, 6, 10, RecordMode::Full);
  state.assign_edge(0, 1, 0);
  state.assign_edge(0, 2, 2);
  state.assign_edge(0, 3, 5);
  CspacModel model = build_cspac(second);
  augment_with_blocks(model, state, ModelMode::maximal(), rng);
  std::vector<BlockID> blocks;
  for (const auto &e : model.artificial_edges) {
    EXPECT_EQ(e.edge_vertex, 0u);
    blocks.push_back(e.block);
  }
  EXPECT_EQ(blocks, (std::vector<BlockID>{0, 2, 5}));
}

TEST_F(AugmentTest, SubsetSamplesDistinctRecordedBlocks) {
  PartitionState state(5, 6, 10, RecordMode::Full);
  state.assign_edge(0, 1, 0);
  state.assign_edge(0, 2, 2);
  state.assign_edge(0, 3, 5);
  std::vector<BlockID> previous;
  for (const std::uint64_t seed : {1u, 1u, 2u}) {
    std::mt19937_64 local(seed);
    CspacModel model = build_cspac(second);
    augment_with_blocks(model, state, ModelMode::subset(2), local);
    std::set<BlockID> blocks;
    std::vector<BlockID> order;
    for (const auto &e : model.artificial_edges) {
      blocks.insert(e.block);
      order.push_back(e.block);
    }
    EXPECT_EQ(blocks.size(), 2u);
    const std::set<BlockID> recorded = {0, 2, 5};
    EXPECT_TRUE(std::includes(recorded.begin(), recorded.end(), blocks.begin(), blocks.end()));
    if (seed == 1 && !previous.empty()) {
      EXPECT_EQ(order, previous);
    }
    previous = order;
  }
}

TEST_F(AugmentTest, RejectsMismatchedRecordAndDoubleAugment) {
  PartitionState minimal(5, 2, 10, RecordMode::Minimal);
  CspacModel model = build_cspac(second);
  EXPECT_THROW(augment_with_blocks(model, minimal, ModelMode::maximal(), rng), ConfigError);
  EXPECT_THROW(augment_with_blocks(model, minimal, ModelMode::subset(2), rng), ConfigError);
  augment_with_blocks(model, minimal, ModelMode::minimal(), rng);
  EXPECT_THROW(augment_with_blocks(model, minimal, ModelMode::minimal(), rng), ConfigError);
}

TEST(ModelMode, ParsesAndRejects) {
  EXPECT_EQ(ModelMode::parse("minimal").kind, ModelMode::Kind::Minimal);
  EXPECT_EQ(ModelMode::parse("maximal").kind, ModelMode::Kind::Maximal);
  const ModelMode subset = ModelMode::parse("rsubset:4");
  EXPECT_EQ(subset.kind, ModelMode::Kind::RSubset);
  EXPECT_EQ(subset.r, 4u);
  EXPECT_EQ(subset.to_string(), "rsubset:4");
  for (const char *bad : {"", "max", "rsubset:0", "rsubset:", "rsubset:x", "rsubset:-1"}) {
    EXPECT_THROW(ModelMode::parse(bad), ConfigError) << bad;
  }
}

TEST(ToWeightedGraph, ArtificialVerticesCarryLoads) {
  std::mt19937_64 rng(2);
  TempDir dir;
  const Adjacency adjacency = {{2}, {2}, {0, 1}};
  auto stream = open_graph_stream(testkit::write_graph(dir, "g.metis", adjacency));
  BatchLoader loader(*stream, 2);
  PartitionState state(3, 2, 10, RecordMode::Minimal);
  state.assign_edge(0, 1, 1);
  loader.next();
  CspacModel model = build_cspac(loader.next());
  augment_with_blocks(model, state, ModelMode::minimal(), rng);
  const WeightedGraph graph = to_weighted_graph(model);
  EXPECT_EQ(graph.n(), 4u);
  EXPECT_EQ(graph.artificial_base, 2u);
  EXPECT_EQ(graph.vwgt, (std::vector<Weight>{1, 1, 0, 1}));
  // Both edge-vertices link to block 1, and to each other through vertex 2.
  EXPECT_EQ(graph.m(), 2u * 3u);
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (const NodeID v : graph.neighbors(u)) {
      const auto back = graph.neighbors(v);
      EXPECT_NE(std::find(back.begin(), back.end(), u), back.end());
      EXPECT_FALSE(graph.is_artificial(u) && graph.is_artificial(v));
    }
  }
}

TEST(InducedEdgePartition, MapsEdgeVerticesToEdges) {
  const CspacModel model = single_batch_model({{1, 2}, {0, 2}, {0, 1}});
  const std::vector<BlockID> zeros(3, 0);
  EXPECT_EQ(induced_edge_partition(model, zeros), zeros);
  const std::vector<BlockID> spread = {0, 1, 2};
  EXPECT_EQ(induced_edge_partition(model, spread), spread);
}

TEST(InducedEdgePartition, AgreesWithIndependentRemap) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto adjacency = testkit::random_graph(40, 120, rng);
    const CspacModel model = single_batch_model(adjacency);
    std::vector<BlockID> vp(model.edge_vertex_count());
    for (auto &b : vp) {
      b = static_cast<BlockID>(rng() % 5);
    }
    std::map<Edge, BlockID> expected;
    for (NodeID j = 0; j < model.edge_vertex_count(); ++j) {
      const auto [u, v] = model.edge_vertices[j];
      expected[{std::min(u, v), std::max(u, v)}] = vp[j];
    }
    const auto blocks = induced_edge_partition(model, vp);
    ASSERT_EQ(blocks.size(), expected.size());
    for (NodeID j = 0; j < model.edge_vertex_count(); ++j) {
      const auto [u, v] = model.edge_vertices[j];
      EXPECT_EQ(blocks[j], (expected[{std::min(u, v), std::max(u, v)}]));
    }
  }
}

TEST(InducedEdgePartition, RejectsShortAssignment) {
  const CspacModel model = single_batch_model({{1, 2}, {0, 2}, {0, 1}});
  const std::vector<BlockID> short_assignment = {0, 1};
  EXPECT_ANY_THROW(induced_edge_partition(model, short_assignment));
}

} // namespace
} // namespace streamep
