/*******************************************************************************
 * @file:   run.cc
 ******************************************************************************/
#include "streamep/run.h"

#include <chrono>

#include "streamep/graph_io.h"
#include "streamep/resources.h"

namespace streamep {

void RunConfig::validate() const {
  if (k < 1) {
    throw ConfigError("k must be at least 1");
  }
  if (delta < 1) {
    throw ConfigError("delta must be at least 1");
  }
  if (!(epsilon >= 0.0)) {
    throw ConfigError("epsilon must be non-negative");
  }
  if (rounds < 0) {
    throw ConfigError("rounds must be non-negative");
  }
  if (!(threshold_multiplier > 0.0)) {
    throw ConfigError("threshold multiplier must be positive");
  }
  if (graph_path.empty()) {
    throw ConfigError("no graph path given");
  }
}

void finalize_report(RunResult &result, NodeID n, EdgeID m, const RunConfig &config, double runtime_ms,
                     double parse_ms) {
  if (result.assignments.size() != m) {
    throw std::logic_error("assigned " + std::to_string(result.assignments.size()) + " edges, expected " +
                           std::to_string(m));
  }
  result.report = evaluate_assignment(result.assignments, n, m, config.k, config.epsilon);
  result.report.runtime_ms = runtime_ms;
  result.report.parse_ms = parse_ms;
  result.report.peak_rss_bytes = peak_rss_bytes();
}

RunResult hash_partition_stream(const RunConfig &config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  auto stream = open_graph_stream(config.graph_path);
  const GraphHeader header = stream->header();

  RunResult result;
  result.assignments.reserve(header.m);
  std::vector<NodeID> neighbors;
  for (NodeID u = 0; stream->next(neighbors); ++u) {
    for (const NodeID v : neighbors) {
      if (u < v) {
        result.assignments.push_back({u, v, hash_partition(u, v, config.k, config.seed)});
      }
    }
  }

  const double runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  finalize_report(result, header.n, header.m, config, runtime_ms, stream->io_seconds() * 1000.0);
  return result;
}

} // namespace streamep
