/*******************************************************************************
 * Basic types and error classes shared by all modules.
 *
 * @file:   definitions.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace streamep {

using NodeID = std::uint32_t;
using EdgeID = std::uint64_t;
using BlockID = std::uint32_t;
using Weight = std::int64_t;
// Edge weights of batch models. A batch never has 2^31 edges.
using EdgeWeight = std::int32_t;

constexpr NodeID kInvalidNode = std::numeric_limits<NodeID>::max();
constexpr BlockID kInvalidBlock = std::numeric_limits<BlockID>::max();

// Malformed graph or assignment input.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// No block can take a vertex without exceeding l_max.
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid run configuration (detected before any I/O).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One committed edge with global 0-indexed endpoints.
struct EdgeAssignment {
  NodeID u;
  NodeID v;
  BlockID block;

  bool operator==(const EdgeAssignment &) const = default;
};

} // namespace streamep
