/*******************************************************************************
 * Configuration and result of one streaming partitioning run.
 *
 * @file:   run.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "streamep/definitions.h"
#include "streamep/fennel.h"
#include "streamep/metrics.h"
#include "streamep/model.h"
#include "streamep/multilevel.h"

namespace streamep {

struct RunConfig {
  std::string graph_path;
  BlockID k = 2;
  NodeID delta = 32768;
  double epsilon = 0.03;
  ModelMode mode = ModelMode::minimal();
  AlphaPolicy alpha;
  int rounds = 3;
  std::uint64_t seed = 0;
  double threshold_multiplier = 1.0;
  bool full_net_record = false; // freighte: keep every block per net

  // Throws ConfigError.
  void validate() const;

  [[nodiscard]] MultilevelConfig multilevel() const {
    return {rounds, rounds, threshold_multiplier};
  }
};

struct RunResult {
  std::vector<EdgeAssignment> assignments; // commit order
  MetricsReport report;
};

// Fills the metrics of `result` from its assignments, with timings.
void finalize_report(RunResult &result, NodeID n, EdgeID m, const RunConfig &config, double runtime_ms,
                     double parse_ms);

// Hashing baseline: every edge goes to hash_partition(u, v, k, seed).
RunResult hash_partition_stream(const RunConfig &config);

} // namespace streamep
