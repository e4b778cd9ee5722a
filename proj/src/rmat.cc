/*******************************************************************************
 * @file:   rmat.cc
 ******************************************************************************/
#include "streamep/rmat.h"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

#include "streamep/graph_io.h"

namespace streamep {

namespace {

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

std::vector<std::vector<NodeID>> generate_rmat(NodeID n, EdgeID m, std::uint64_t seed, const RmatParams &params) {
  if (n == 0) {
    throw ConfigError("R-MAT needs at least one vertex");
  }
  const EdgeID max_edges = static_cast<EdgeID>(n) * (n - 1) / 2;
  if (m > max_edges) {
    throw ConfigError("R-MAT: m=" + std::to_string(m) + " exceeds the " + std::to_string(max_edges) +
                      " edges of a simple graph on n vertices");
  }
  if (params.a < 0 || params.b < 0 || params.c < 0 || params.a + params.b + params.c > 1.0) {
    throw ConfigError("R-MAT probabilities must be non-negative and sum to at most 1");
  }

  std::mt19937_64 rng(seed);
  const int scale = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n - 1))));
  const double ab = params.a + params.b;
  const double abc = ab + params.c;

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  std::vector<std::pair<NodeID, NodeID>> edges;
  edges.reserve(m);

  const EdgeID max_attempts = 1000 * m + 1000000;
  for (EdgeID attempt = 0; edges.size() < m; ++attempt) {
    if (attempt == max_attempts) {
      throw ConfigError("R-MAT: could not draw " + std::to_string(m) + " distinct edges");
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    for (int level = 0; level < scale; ++level) {
      const double r = uniform01(rng);
      u <<= 1;
      v <<= 1;
      if (r < params.a) {
      } else if (r < ab) {
        v |= 1;
      } else if (r < abc) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    if (u >= n || v >= n || u == v) {
      continue;
    }
    const auto lo = static_cast<NodeID>(std::min(u, v));
    const auto hi = static_cast<NodeID>(std::max(u, v));
    if (seen.insert((static_cast<std::uint64_t>(lo) << 32) | hi).second) {
      edges.emplace_back(lo, hi);
    }
  }

  std::vector<NodeID> label(n);
  for (NodeID i = 0; i < n; ++i) {
    label[i] = i;
  }
  if (params.permute) {
    for (NodeID i = n - 1; i > 0; --i) {
      std::swap(label[i], label[rng() % (static_cast<std::uint64_t>(i) + 1)]);
    }
  }

  std::vector<std::vector<NodeID>> adjacency(n);
  for (const auto &[u, v] : edges) {
    adjacency[label[u]].push_back(label[v]);
    adjacency[label[v]].push_back(label[u]);
  }
  for (auto &neighbors : adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return adjacency;
}

void write_rmat_metis(const std::string &path, NodeID n, EdgeID m, std::uint64_t seed, const RmatParams &params) {
  write_metis(generate_rmat(n, m, seed, params), path);
}

} // namespace streamep
