/*******************************************************************************
 * @file:   heistreame.cc
 ******************************************************************************/
#include "streamep/heistreame.h"

#include <algorithm>
#include <chrono>

#include "streamep/batch.h"
#include "streamep/graph_io.h"
#include "streamep/multilevel.h"

namespace streamep {

void commit(PartitionState &state, const CspacModel &model, std::span<const BlockID> blocks,
            std::vector<EdgeAssignment> &emitted) {
  const auto edge_blocks = induced_edge_partition(model, blocks);
  for (NodeID j = 0; j < model.edge_vertex_count(); ++j) {
    const auto [u, v] = model.edge_vertices[j];
    const BlockID block = edge_blocks[j];
    state.assign_edge(u, v, block);
    if (state.block_loads()[block] > state.l_max()) {
      throw std::logic_error("block " + std::to_string(block) + " exceeds l_max after commit");
    }
    emitted.push_back({u, v, block});
  }
}

Weight safe_cluster_weight(const PartitionState &state, EdgeID batch_edges) {
  const Weight capacity = static_cast<Weight>(state.k()) * state.l_max();
  const Weight after_batch = static_cast<Weight>(state.assigned_edges() + batch_edges);
  const Weight per_block = (capacity - after_batch) / static_cast<Weight>(state.k());
  return std::clamp<Weight>(per_block, 1, std::max<Weight>(1, state.l_max()));
}

void partition_batch(const BatchGraph &batch, PartitionState &state, AlphaEstimator &alpha,
                     const RunConfig &config, std::mt19937_64 &rng, std::vector<EdgeAssignment> &emitted) {
  CspacModel model = build_cspac(batch);
  const auto batch_alpha = alpha.next_batch(model.edge_vertex_count(), model.aux_edges.size());
  if (!batch_alpha) {
    return;
  }
  augment_with_blocks(model, state, config.mode, rng);

  const WeightedGraph graph = to_weighted_graph(model);
  std::vector<AuxEdge>().swap(model.aux_edges);
  std::vector<ArtificialEdge>().swap(model.artificial_edges);
  std::vector<std::pair<NodeID, NodeID>>().swap(model.past_links);

  FennelParams params;
  params.alpha = *batch_alpha;
  params.l_max = state.l_max();
  const auto blocks = partition_multilevel(graph, state.k(), params, config.multilevel(),
                                           safe_cluster_weight(state, batch.edge_count));
  commit(state, model, blocks, emitted);
}

RunResult partition_stream(const RunConfig &config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  auto stream = open_graph_stream(config.graph_path);
  const GraphHeader header = stream->header();

  PartitionState state(header.n, config.k, compute_l_max(header.m, config.k, config.epsilon),
                       config.mode.required_record());
  AlphaEstimator alpha(config.alpha, config.k, header.m);
  std::mt19937_64 rng(config.seed);

  RunResult result;
  result.assignments.reserve(header.m);

  BatchLoader loader(*stream, config.delta);
  while (!loader.done()) {
    const BatchGraph batch = loader.next();
    try {
      partition_batch(batch, state, alpha, config, rng, result.assignments);
    } catch (const InfeasibleError &e) {
      throw InfeasibleError("batch " + std::to_string(batch.batch_index) + ": " + e.what());
    }
  }

  const double runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  finalize_report(result, header.n, header.m, config, runtime_ms, stream->io_seconds() * 1000.0);
  return result;
}

} // namespace streamep
