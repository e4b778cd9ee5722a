/*******************************************************************************
 * @file:   metrics.cc
 ******************************************************************************/
#include "streamep/metrics.h"

#include <algorithm>

#include "streamep/partition_state.h"

namespace streamep {

namespace {

void check_ids(const EdgeAssignment &a, NodeID n, BlockID k) {
  if (a.u >= n || a.v >= n) {
    throw FormatError("assignment references vertex outside [1.." + std::to_string(n) + "]");
  }
  if (a.block >= k) {
    throw FormatError("assignment references block " + std::to_string(a.block) + " outside [0.." +
                      std::to_string(k - 1) + "]");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

} // namespace

ReplicationResult replication_factor(std::span<const EdgeAssignment> assignment, NodeID n, BlockID k) {
  std::vector<std::uint64_t> pins;
  pins.reserve(2 * assignment.size());
  for (const auto &a : assignment) {
    check_ids(a, n, k);
    pins.push_back((static_cast<std::uint64_t>(a.u) << 32) | a.block);
    pins.push_back((static_cast<std::uint64_t>(a.v) << 32) | a.block);
  }
  std::sort(pins.begin(), pins.end());
  const auto replicas = static_cast<EdgeID>(std::unique(pins.begin(), pins.end()) - pins.begin());

  ReplicationResult result;
  result.replica_total = replicas;
  result.rf = n == 0 ? 0.0 : static_cast<double>(replicas) / static_cast<double>(n);
  return result;
}

BalanceReport balance_report(std::span<const Weight> block_sizes, EdgeID m, BlockID k, double epsilon) {
  BalanceReport report;
  report.l_max = compute_l_max(m, k, epsilon);
  for (const Weight size : block_sizes) {
    report.max_load = std::max(report.max_load, size);
  }
  report.ok = report.max_load <= report.l_max;
  return report;
}

std::vector<Weight> block_sizes(std::span<const EdgeAssignment> assignment, BlockID k) {
  std::vector<Weight> sizes(k, 0);
  for (const auto &a : assignment) {
    if (a.block >= k) {
      throw FormatError("assignment references block " + std::to_string(a.block) + " >= k");
    }
    ++sizes[a.block];
  }
  return sizes;
}

EdgeID connectivity_sum(std::span<const EdgeAssignment> assignment, NodeID n, BlockID k) {
  // Group edges by block, then count each net once per block it touches.
  std::vector<EdgeID> start(static_cast<std::size_t>(k) + 1, 0);
  for (const auto &a : assignment) {
    check_ids(a, n, k);
    ++start[a.block + 1];
  }
  for (BlockID b = 0; b < k; ++b) {
    start[b + 1] += start[b];
  }
  std::vector<EdgeID> by_block(assignment.size());
  {
    std::vector<EdgeID> fill(start.begin(), start.end() - 1);
    for (EdgeID e = 0; e < assignment.size(); ++e) {
      by_block[fill[assignment[e].block]++] = e;
    }
  }

  std::vector<BlockID> seen_in(n, kInvalidBlock);
  std::vector<BlockID> lambda(n, 0);
  for (BlockID b = 0; b < k; ++b) {
    for (EdgeID i = start[b]; i < start[b + 1]; ++i) {
      const auto &a = assignment[by_block[i]];
      for (const NodeID v : {a.u, a.v}) {
        if (seen_in[v] != b) {
          seen_in[v] = b;
          ++lambda[v];
        }
      }
    }
  }
  EdgeID total = 0;
  for (const BlockID l : lambda) {
    total += l;
  }
  return total;
}

BlockID hash_partition(NodeID u, NodeID v, BlockID k, std::uint64_t seed) {
  const std::uint64_t lo = std::min(u, v);
  const std::uint64_t hi = std::max(u, v);
  return static_cast<BlockID>(splitmix64(splitmix64(seed) ^ ((hi << 32) | lo)) % k);
}

MetricsReport evaluate_assignment(std::span<const EdgeAssignment> assignment, NodeID n, EdgeID m, BlockID k,
                                  double epsilon) {
  MetricsReport report;
  report.n = n;
  report.m = m;
  report.k = k;
  const auto replication = replication_factor(assignment, n, k);
  report.rf = replication.rf;
  report.replica_total = replication.replica_total;
  report.block_sizes = block_sizes(assignment, k);
  const auto balance = balance_report(report.block_sizes, m, k, epsilon);
  report.max_load = balance.max_load;
  report.l_max = balance.l_max;
  report.balanced = balance.ok;
  report.imbalance = m == 0 ? 0.0 : static_cast<double>(report.max_load) * k / static_cast<double>(m) - 1.0;
  return report;
}

} // namespace streamep
