/*******************************************************************************
 * Multilevel generalized-Fennel partitioning of a batch model.
 *
 * Coarsen with size-constrained label propagation, assign the coarsest
 * non-artificial vertices one by one with k-independent block selection,
 * then project back level by level with label propagation refinement that
 * only considers blocks adjacent to the visited vertex. Artificial vertex i
 * is pinned to block i throughout.
 *
 * @file:   multilevel.h
 ******************************************************************************/
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "streamep/coarsening.h"
#include "streamep/fennel.h"
#include "streamep/graph.h"

namespace streamep {

struct MultilevelConfig {
  int coarsening_rounds = 3;
  int refinement_rounds = 3;
  double threshold_multiplier = 1.0;
};

// Initial block loads: the artificial vertex weights, or zeros if the graph
// has no artificial vertices.
std::vector<Weight> initial_block_loads(const WeightedGraph &graph, BlockID k);

// Assigns every non-artificial vertex in index order; artificial vertices
// are pre-assigned to their own blocks.
std::vector<BlockID> initial_partition(const WeightedGraph &graph, BlockID k, const FennelParams &params);

// Called before a refinement move is applied.
using MoveObserver = std::function<void(NodeID vertex, BlockID from, BlockID to, std::span<const BlockID> assignment,
                                        std::span<const Weight> loads)>;

// Up to `rounds` rounds of label propagation on one level. Returns the number
// of moves. `loads` must match `assignment`.
std::size_t refine_level(const WeightedGraph &graph, std::vector<BlockID> &assignment, std::vector<Weight> &loads,
                         BlockID k, const FennelParams &params, int rounds, const MoveObserver &observer = {});

// Refines on the coarsest level, then projects and refines on every finer
// level. Returns the assignment of the finest level.
std::vector<BlockID> refine(const Hierarchy &hierarchy, std::vector<BlockID> coarsest_assignment, BlockID k,
                            const FennelParams &params, int rounds);

// Full pipeline on one model graph.
std::vector<BlockID> partition_multilevel(const WeightedGraph &graph, BlockID k, const FennelParams &params,
                                          const MultilevelConfig &config, Weight max_cluster_weight);

} // namespace streamep
