/*******************************************************************************
 * Edge partition quality metrics.
 *
 * rf = (1/n) * sum_i |V(E_i)|, with every vertex of the graph in the
 * denominator (isolated vertices contribute no replicas).
 *
 * @file:   metrics.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "streamep/definitions.h"

namespace streamep {

struct MetricsReport {
  NodeID n = 0;
  EdgeID m = 0;
  BlockID k = 0;
  double rf = 0.0;
  EdgeID replica_total = 0;
  std::vector<Weight> block_sizes;
  Weight max_load = 0;
  Weight l_max = 0;
  bool balanced = true;
  double imbalance = 0.0; // max_load * k / m - 1
  double runtime_ms = 0.0;
  double parse_ms = 0.0;
  std::optional<std::uint64_t> peak_rss_bytes;
};

struct ReplicationResult {
  double rf = 0.0;
  EdgeID replica_total = 0;
};

// Counts the distinct blocks among each vertex's incident edges.
ReplicationResult replication_factor(std::span<const EdgeAssignment> assignment, NodeID n, BlockID k);

struct BalanceReport {
  Weight max_load = 0;
  Weight l_max = 0;
  bool ok = true;
};

BalanceReport balance_report(std::span<const Weight> block_sizes, EdgeID m, BlockID k, double epsilon);

std::vector<Weight> block_sizes(std::span<const EdgeAssignment> assignment, BlockID k);

// Sum over graph vertices of the connectivity of their net in the dual
// hypergraph, computed block by block. Equals replica_total.
EdgeID connectivity_sum(std::span<const EdgeAssignment> assignment, NodeID n, BlockID k);

// Deterministic hash of the unordered pair {u, v}.
BlockID hash_partition(NodeID u, NodeID v, BlockID k, std::uint64_t seed);

// All metrics except timings.
MetricsReport evaluate_assignment(std::span<const EdgeAssignment> assignment, NodeID n, EdgeID m, BlockID k,
                                  double epsilon);

} // namespace streamep
