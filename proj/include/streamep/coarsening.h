/*******************************************************************************
 * Size-constrained label propagation coarsening.
 *
 * Clustering only looks at non-artificial vertices and the edges between
 * them; artificial vertices are carried through every level unchanged (they
 * always occupy the last k ids) so their edges are aggregated like any other.
 *
 * @file:   coarsening.h
 ******************************************************************************/
#pragma once

#include <vector>

#include "streamep/graph.h"

namespace streamep {

struct Hierarchy {
  const WeightedGraph *finest = nullptr;
  std::vector<WeightedGraph> coarse;     // level i + 1
  std::vector<std::vector<NodeID>> maps; // level i vertex -> level i + 1 vertex

  [[nodiscard]] std::size_t level_count() const { return coarse.size() + 1; }
  [[nodiscard]] const WeightedGraph &level(std::size_t i) const { return i == 0 ? *finest : coarse[i - 1]; }
  [[nodiscard]] const WeightedGraph &coarsest() const { return level(level_count() - 1); }
};

struct CoarseningConfig {
  int rounds = 3;
  NodeID threshold = 0; // stop once fewer non-artificial vertices remain
  Weight max_cluster_weight = 1;
};

// multiplier * max(n / k, k)
NodeID coarsening_threshold(NodeID n, BlockID k, double multiplier);

// Clusters the non-artificial vertices; returns a cluster id per vertex.
// Artificial vertices keep their own id.
std::vector<NodeID> label_propagation_clustering(const WeightedGraph &graph, int rounds, Weight max_cluster_weight);

// Contracts clusters into a coarse graph. Non-artificial clusters are
// numbered by first appearance, artificial vertices follow in order.
WeightedGraph contract(const WeightedGraph &graph, const std::vector<NodeID> &clustering,
                       std::vector<NodeID> &coarse_map);

Hierarchy coarsen(const WeightedGraph &graph, const CoarseningConfig &config);

} // namespace streamep
