/*******************************************************************************
 * One-pass edge partitioning over the implicit dual hypergraph.
 *
 * Each graph edge is a hypervertex, each graph vertex a net over its
 * incident edges. Edges are placed as soon as they are first seen, using the
 * Fennel score of the connectivity objective: the number of endpoints whose
 * net already touches a block, minus the load penalty. Only blocks recorded
 * for the two endpoints and the lightest block are evaluated.
 *
 * @file:   freighte.h
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "streamep/block_queue.h"
#include "streamep/fennel.h"
#include "streamep/run.h"

namespace streamep {

class DualState {
public:
  DualState(NodeID n, BlockID k, Weight l_max, bool full_record);

  [[nodiscard]] BlockID k() const { return _queue.size(); }
  [[nodiscard]] Weight l_max() const { return _l_max; }
  [[nodiscard]] const BlockMinQueue &queue() const { return _queue; }
  [[nodiscard]] Weight load(BlockID block) const { return _queue.load(block); }
  [[nodiscard]] EdgeID assigned_edges() const { return _assigned; }

  // Blocks recorded for the net of graph vertex v (sorted when full).
  [[nodiscard]] std::span<const BlockID> net_blocks(NodeID v) const;

  void assign(NodeID u, NodeID v, BlockID block);

private:
  void record(NodeID v, BlockID block);

  Weight _l_max;
  bool _full;
  BlockMinQueue _queue;
  EdgeID _assigned = 0;
  std::vector<BlockID> _latest;
  std::vector<std::vector<BlockID>> _sets;
};

// sqrt(k) * nets / hypervertices^(3/2) with nets = n, hypervertices = m.
double freighte_alpha(BlockID k, NodeID n, EdgeID m);

// Connection count of edge (u, v) towards each block its endpoints' nets
// touch. Linear merge; records are tiny in the default single-block mode.
void net_connections(NodeID u, NodeID v, const DualState &state, std::vector<BlockConnection> &adjacent);

BlockID freighte_score(NodeID u, NodeID v, const DualState &state, const FennelParams &params);
BlockID freighte_score(NodeID u, NodeID v, const DualState &state, const FennelParams &params,
                       std::vector<BlockConnection> &scratch);

RunResult freighte_partition_stream(const RunConfig &config);

} // namespace streamep
