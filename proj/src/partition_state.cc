/*******************************************************************************
 * @file:   partition_state.cc
 ******************************************************************************/
#include "streamep/partition_state.h"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace streamep {

PartitionState::PartitionState(NodeID n, BlockID k, Weight l_max, RecordMode mode)
    : _n(n), _k(k), _l_max(l_max), _mode(mode), _loads(k, 0) {
  if (mode == RecordMode::Minimal) {
    _latest.assign(n, kInvalidBlock);
  } else {
    _sets.resize(n);
  }
}

std::span<const BlockID> PartitionState::blocks_of(NodeID v) const {
  if (_mode == RecordMode::Minimal) {
    if (_latest[v] == kInvalidBlock) {
      return {};
    }
    return {&_latest[v], 1};
  }
  return _sets[v];
}

void PartitionState::assign_edge(NodeID u, NodeID v, BlockID block) {
  assert(block < _k);
  ++_loads[block];
  ++_assigned;
  record(u, block);
  record(v, block);
}

void PartitionState::record(NodeID v, BlockID block) {
  if (_mode == RecordMode::Minimal) {
    _latest[v] = block;
    return;
  }
  auto &set = _sets[v];
  auto pos = std::lower_bound(set.begin(), set.end(), block);
  if (pos == set.end() || *pos != block) {
    set.insert(pos, block);
  }
}

Weight compute_l_max(EdgeID m, BlockID k, double epsilon) {
  const double exact = (1.0 + epsilon) * static_cast<double>(m) / static_cast<double>(k);
  const double nearest = std::round(exact);
  if (std::abs(exact - nearest) <= 1e-9 * std::max(1.0, exact)) {
    return static_cast<Weight>(nearest);
  }
  return static_cast<Weight>(std::ceil(exact));
}

} // namespace streamep
