/*******************************************************************************
 * R-MAT power-law graph generator for desk-scale benchmark instances.
 *
 * Output is simple (no self-loops, no parallel edges) and depends only on
 * (n, m, seed, params): the random stream is mt19937_64 with explicit
 * conversions, so files are identical across platforms.
 *
 * @file:   rmat.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "streamep/definitions.h"

namespace streamep {

struct RmatParams {
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  bool permute = true; // random vertex relabeling after generation
};

// Sorted 0-indexed adjacency lists with exactly m undirected edges.
std::vector<std::vector<NodeID>> generate_rmat(NodeID n, EdgeID m, std::uint64_t seed,
                                               const RmatParams &params = {});

void write_rmat_metis(const std::string &path, NodeID n, EdgeID m, std::uint64_t seed,
                      const RmatParams &params = {});

} // namespace streamep
