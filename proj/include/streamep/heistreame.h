/*******************************************************************************
 * Buffered streaming edge partitioner.
 *
 * For every batch: load G_b, build the CSPAC model, attach the block record
 * of past vertices through artificial vertices, partition the model with the
 * multilevel scheme and permanently assign the batch edges.
 *
 * @file:   heistreame.h
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "streamep/model.h"
#include "streamep/partition_state.h"
#include "streamep/run.h"

namespace streamep {

// Commits the edges of `model` in edge-vertex order. `blocks` holds one block
// per edge-vertex (extra entries are ignored).
void commit(PartitionState &state, const CspacModel &model, std::span<const BlockID> blocks,
            std::vector<EdgeAssignment> &emitted);

// Cluster weight cap that keeps every coarse vertex placeable: with at most
// slack/k per vertex, some block always has room.
Weight safe_cluster_weight(const PartitionState &state, EdgeID batch_edges);

// Partitions one batch and commits its edges.
void partition_batch(const BatchGraph &batch, PartitionState &state, AlphaEstimator &alpha,
                     const RunConfig &config, std::mt19937_64 &rng, std::vector<EdgeAssignment> &emitted);

RunResult partition_stream(const RunConfig &config);

} // namespace streamep
