/*******************************************************************************
 * Global streaming state: block loads and the per-vertex block record B.
 *
 * @file:   partition_state.h
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "streamep/definitions.h"

namespace streamep {

enum class RecordMode {
  Minimal, // most recently assigned block per vertex, O(n)
  Full,    // every block holding an incident edge
};

class PartitionState {
public:
  PartitionState(NodeID n, BlockID k, Weight l_max, RecordMode mode);

  [[nodiscard]] BlockID k() const { return _k; }
  [[nodiscard]] NodeID n() const { return _n; }
  [[nodiscard]] Weight l_max() const { return _l_max; }
  [[nodiscard]] RecordMode record_mode() const { return _mode; }
  [[nodiscard]] const std::vector<Weight> &block_loads() const { return _loads; }
  [[nodiscard]] EdgeID assigned_edges() const { return _assigned; }

  // Blocks recorded for v; at most one entry in Minimal mode. Full records
  // are sorted ascending.
  [[nodiscard]] std::span<const BlockID> blocks_of(NodeID v) const;

  // Assigns one edge to `block` and records it for both endpoints.
  void assign_edge(NodeID u, NodeID v, BlockID block);

private:
  void record(NodeID v, BlockID block);

  NodeID _n;
  BlockID _k;
  Weight _l_max;
  RecordMode _mode;
  std::vector<Weight> _loads;
  EdgeID _assigned = 0;
  std::vector<BlockID> _latest;
  std::vector<std::vector<BlockID>> _sets;
};

// ceil((1 + eps) * m / k), with decimal eps snapped against binary round-off.
Weight compute_l_max(EdgeID m, BlockID k, double epsilon);

} // namespace streamep
