/*******************************************************************************
 * Brute-force reference implementations for the tests.
 *
 * Nothing here is used by the library. Each routine recomputes its answer
 * from plain edge lists with the most direct method available, so it can be
 * trusted on tiny inputs and compared against the fast paths.
 *
 * @file:   oracle.h
 ******************************************************************************/
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "streamep/definitions.h"
#include "streamep/fennel.h"

namespace streamep::oracle {

using Edge = std::pair<NodeID, NodeID>;

struct TinyGraph {
  NodeID n = 0;
  std::vector<Edge> edges;
};

// Generalized Fennel score evaluated without any shortcut.
double fennel_score(double connection, double vertex_weight, double load, const FennelParams &params);

// Scans every block. `connection[i]` is the edge weight from the vertex into
// block i. Ties: higher score, then lower load, then lower id. Returns
// kInvalidBlock if nothing fits.
BlockID naive_argmax_block(Weight vertex_weight, std::span<const Weight> connection, std::span<const Weight> loads,
                           const FennelParams &params);

// Edge score of the dual-hypergraph partitioner over all blocks: the number
// of endpoints whose record holds block i, minus the load penalty.
BlockID naive_freighte_block(std::span<const BlockID> record_u, std::span<const BlockID> record_v,
                             std::span<const Weight> loads, const FennelParams &params);

// Distinct blocks per vertex, via one set per vertex.
std::vector<std::vector<BlockID>> blocks_per_vertex(NodeID n, std::span<const Edge> edges,
                                                    std::span<const BlockID> edge_blocks);

// sum_i |V(E_i)|, via one vertex set per block.
EdgeID replicas_per_block(NodeID n, BlockID k, std::span<const Edge> edges, std::span<const BlockID> edge_blocks);

// sum_v max(0, |blocks(v)| - 1): the copies beyond the first.
EdgeID extra_replicas(const std::vector<std::vector<BlockID>> &blocks);

struct Theorem1Result {
  EdgeID replicas = 0;
  EdgeID cut = 0;
  bool ok = false;
};

// `edges[j]` is the graph edge of edge-vertex j, `aux` the auxiliary edges
// between edge-vertices, `vp` a block per edge-vertex.
Theorem1Result theorem1_check(NodeID n, std::span<const Edge> edges, std::span<const Edge> aux,
                              std::span<const BlockID> vp);

struct ArtificialLink {
  NodeID edge_vertex;
  BlockID block;
  Weight weight;
};

struct Theorem2Result {
  EdgeID new_replicas = 0;
  Weight cut = 0;
  bool ok = false;
};

// `before[v]` lists the blocks holding edges of v before the batch. The
// batch assigns edge-vertex j to vp[j]; artificial links are cut when the
// edge-vertex sits in another block.
Theorem2Result theorem2_check(const std::vector<std::vector<BlockID>> &before, std::span<const Edge> edges,
                              std::span<const Edge> aux, std::span<const ArtificialLink> artificial,
                              std::span<const BlockID> vp);

// Minimum rf over every assignment with all loads <= l_max. Requires
// k^m <= 2^24.
double exhaustive_best_rf(const TinyGraph &graph, BlockID k, Weight l_max);

// Split-and-connect graph of a single-batch stream, contracted along its
// dominant edges. The result lists auxiliary edges as pairs of graph edges
// (each in (min, max) form), one entry per auxiliary edge.
std::vector<std::pair<Edge, Edge>> contracted_spac(const std::vector<std::vector<NodeID>> &adjacency);

} // namespace streamep::oracle
