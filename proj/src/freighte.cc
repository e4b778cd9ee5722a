/*******************************************************************************
 * @file:   freighte.cc
 ******************************************************************************/
#include "streamep/freighte.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "streamep/graph_io.h"
#include "streamep/partition_state.h"

namespace streamep {

DualState::DualState(NodeID n, BlockID k, Weight l_max, bool full_record)
    : _l_max(l_max), _full(full_record), _queue(std::vector<Weight>(k, 0)) {
  if (_full) {
    _sets.resize(n);
  } else {
    _latest.assign(n, kInvalidBlock);
  }
}

std::span<const BlockID> DualState::net_blocks(NodeID v) const {
  if (_full) {
    return _sets[v];
  }
  if (_latest[v] == kInvalidBlock) {
    return {};
  }
  return {&_latest[v], 1};
}

void DualState::assign(NodeID u, NodeID v, BlockID block) {
  _queue.increase(block, 1);
  ++_assigned;
  record(u, block);
  record(v, block);
}

void DualState::record(NodeID v, BlockID block) {
  if (!_full) {
    _latest[v] = block;
    return;
  }
  auto &set = _sets[v];
  auto pos = std::lower_bound(set.begin(), set.end(), block);
  if (pos == set.end() || *pos != block) {
    set.insert(pos, block);
  }
}

double freighte_alpha(BlockID k, NodeID n, EdgeID m) {
  if (m == 0) {
    return 0.0;
  }
  const double hypervertices = static_cast<double>(m);
  return std::sqrt(static_cast<double>(k)) * static_cast<double>(n) / (hypervertices * std::sqrt(hypervertices));
}

void net_connections(NodeID u, NodeID v, const DualState &state, std::vector<BlockConnection> &adjacent) {
  adjacent.clear();
  for (const NodeID w : {u, v}) {
    for (const BlockID block : state.net_blocks(w)) {
      auto it = std::find_if(adjacent.begin(), adjacent.end(), [&](const auto &c) { return c.block == block; });
      if (it == adjacent.end()) {
        adjacent.push_back({block, 1});
      } else {
        ++it->weight;
      }
    }
  }
}

BlockID freighte_score(NodeID u, NodeID v, const DualState &state, const FennelParams &params,
                       std::vector<BlockConnection> &scratch) {
  net_connections(u, v, state, scratch);
  return select_block(1, scratch, state.queue(), params);
}

BlockID freighte_score(NodeID u, NodeID v, const DualState &state, const FennelParams &params) {
  std::vector<BlockConnection> scratch;
  return freighte_score(u, v, state, params, scratch);
}

RunResult freighte_partition_stream(const RunConfig &config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  auto stream = open_graph_stream(config.graph_path);
  const GraphHeader header = stream->header();

  FennelParams params;
  params.alpha = freighte_alpha(config.k, header.n, header.m);
  params.l_max = compute_l_max(header.m, config.k, config.epsilon);
  DualState state(header.n, config.k, params.l_max, config.full_net_record);

  RunResult result;
  result.assignments.reserve(header.m);
  std::vector<NodeID> neighbors;
  std::vector<BlockConnection> scratch;
  for (NodeID u = 0; stream->next(neighbors); ++u) {
    for (const NodeID v : neighbors) {
      if (v < u) {
        continue;
      }
      const BlockID block = freighte_score(u, v, state, params, scratch);
      state.assign(u, v, block);
      result.assignments.push_back({u, v, block});
    }
  }

  const double runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  finalize_report(result, header.n, header.m, config, runtime_ms, stream->io_seconds() * 1000.0);
  return result;
}

} // namespace streamep
