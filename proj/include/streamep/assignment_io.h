/*******************************************************************************
 * Assignment files and the one-line JSON run summary.
 *
 * Triples format: one "u v block" line per edge, 1-indexed vertices, 0-indexed
 * blocks, in commit order. Compact format: only the block, one per line.
 *
 * @file:   assignment_io.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "streamep/definitions.h"
#include "streamep/metrics.h"

namespace streamep {

void write_assignment(std::ostream &out, std::span<const EdgeAssignment> assignment, bool compact = false);
void write_assignment_file(const std::string &path, std::span<const EdgeAssignment> assignment,
                           bool compact = false);

// Reads the triples format. Throws FormatError / IoError.
std::vector<EdgeAssignment> read_assignment_file(const std::string &path);

struct SummaryContext {
  std::string algorithm;
  std::string graph;
  BlockID k = 0;
  NodeID delta = 0;
  std::uint64_t seed = 0;
};

// Single-line JSON object without trailing newline.
std::string summary_json(const SummaryContext &context, const MetricsReport &report);

} // namespace streamep
