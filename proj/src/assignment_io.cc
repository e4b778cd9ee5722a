/*******************************************************************************
 * @file:   assignment_io.cc
 ******************************************************************************/
#include "streamep/assignment_io.h"

#include <charconv>
#include <fstream>

#include <json.hpp>

namespace streamep {

void write_assignment(std::ostream &out, std::span<const EdgeAssignment> assignment, bool compact) {
  std::string buffer;
  buffer.reserve(1 << 16);
  char number[24];
  auto append = [&](std::uint64_t value) {
    auto [end, ec] = std::to_chars(number, number + sizeof(number), value);
    buffer.append(number, end);
  };
  for (const auto &a : assignment) {
    if (!compact) {
      append(a.u + 1ULL);
      buffer.push_back(' ');
      append(a.v + 1ULL);
      buffer.push_back(' ');
    }
    append(a.block);
    buffer.push_back('\n');
    if (buffer.size() >= (1 << 16) - 64) {
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

void write_assignment_file(const std::string &path, std::span<const EdgeAssignment> assignment, bool compact) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write '" + path + "'");
  }
  write_assignment(out, assignment, compact);
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

std::vector<EdgeAssignment> read_assignment_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open assignment file '" + path + "'");
  }
  std::vector<EdgeAssignment> assignment;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::uint64_t values[3];
    const char *pos = line.data();
    const char *end = pos + line.size();
    for (auto &value : values) {
      while (pos != end && (*pos == ' ' || *pos == '\t')) {
        ++pos;
      }
      auto [ptr, ec] = std::from_chars(pos, end, value);
      if (ec != std::errc{}) {
        throw FormatError("malformed assignment at line " + std::to_string(line_number));
      }
      pos = ptr;
    }
    while (pos != end && (*pos == ' ' || *pos == '\t' || *pos == '\r')) {
      ++pos;
    }
    if (pos != end || values[0] == 0 || values[1] == 0 || values[0] > kInvalidNode || values[1] > kInvalidNode ||
        values[2] >= kInvalidBlock) {
      throw FormatError("malformed assignment at line " + std::to_string(line_number));
    }
    assignment.push_back({static_cast<NodeID>(values[0] - 1), static_cast<NodeID>(values[1] - 1),
                          static_cast<BlockID>(values[2])});
  }
  return assignment;
}

std::string summary_json(const SummaryContext &context, const MetricsReport &report) {
  nlohmann::ordered_json json;
  json["algorithm"] = context.algorithm;
  json["graph"] = context.graph;
  json["k"] = context.k;
  json["delta"] = context.delta;
  json["rf"] = report.rf;
  json["max_load"] = report.max_load;
  json["l_max"] = report.l_max;
  json["runtime_ms"] = report.runtime_ms;
  json["parse_ms"] = report.parse_ms;
  if (report.peak_rss_bytes) {
    json["peak_rss_bytes"] = *report.peak_rss_bytes;
  } else {
    json["peak_rss_bytes"] = nullptr;
  }
  json["seed"] = context.seed;
  json["n"] = report.n;
  json["m"] = report.m;
  json["replica_total"] = report.replica_total;
  json["balanced"] = report.balanced;
  return json.dump();
}

} // namespace streamep
