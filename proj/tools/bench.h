/*******************************************************************************
 * Benchmark harness: runs every (graph, k, algorithm) combination in a child
 * process and aggregates geometric means per (k, algorithm).
 *
 * @file:   bench.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace streamep::bench {

struct BenchConfig {
  std::string graphs_dir;
  std::vector<std::uint32_t> ks;
  std::vector<std::string> algorithms;
  std::uint32_t delta = 32768;
  double epsilon = 0.03;
  std::uint64_t seed = 0;
};

struct BenchRow {
  std::string graph;
  std::uint32_t k = 0;
  std::string algorithm;
  double rf = 0.0;
  double runtime_ms = 0.0;
  std::uint64_t peak_rss_bytes = 0;
};

// Geometric mean over the positive entries; 0 if there are none.
double geometric_mean(const std::vector<double> &values);

std::vector<BenchRow> run_bench(const BenchConfig &config, const std::string &self_executable);

// Rows followed by one "geomean" row per (k, algorithm).
void write_bench_tsv(std::ostream &out, const std::vector<BenchRow> &rows);

} // namespace streamep::bench
