/*******************************************************************************
 * Batch model: the contracted split-and-connect (CSPAC) graph of a batch,
 * optionally augmented with k artificial block vertices.
 *
 * Every edge of the batch becomes an edge-vertex. For every batch vertex v
 * the edge-vertices of its incident edges are chained into a path of unit
 * auxiliary edges, in the order they were induced. Augmentation connects an
 * edge-vertex whose edge reaches into a past batch to the artificial vertices
 * of the blocks recorded for that past endpoint.
 *
 * @file:   model.h
 ******************************************************************************/
#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "streamep/batch.h"
#include "streamep/graph.h"
#include "streamep/partition_state.h"

namespace streamep {

struct ModelMode {
  enum class Kind { Maximal, RSubset, Minimal };

  Kind kind = Kind::Minimal;
  NodeID r = 1; // RSubset only

  static ModelMode maximal() { return {Kind::Maximal, 1}; }
  static ModelMode minimal() { return {Kind::Minimal, 1}; }
  static ModelMode subset(NodeID r);

  // "minimal", "maximal" or "rsubset:R"
  static ModelMode parse(const std::string &text);

  [[nodiscard]] RecordMode required_record() const {
    return kind == Kind::Minimal ? RecordMode::Minimal : RecordMode::Full;
  }
  [[nodiscard]] std::string to_string() const;
};

struct AuxEdge {
  NodeID a;
  NodeID b;
  NodeID vertex; // global id of the batch vertex whose path holds this edge
};

struct ArtificialEdge {
  NodeID edge_vertex;
  BlockID block;
  EdgeWeight w;
};

struct CspacModel {
  // Entry j: global endpoints of the edge inducing edge-vertex j. The first
  // endpoint is the current-batch vertex whose adjacency induced it.
  std::vector<std::pair<NodeID, NodeID>> edge_vertices;
  std::vector<AuxEdge> aux_edges;

  // (edge-vertex, global past endpoint) for edges into past batches.
  std::vector<std::pair<NodeID, NodeID>> past_links;

  // Filled by augment_with_blocks.
  bool augmented = false;
  BlockID k = 0;
  std::vector<Weight> artificial_weights;
  std::vector<ArtificialEdge> artificial_edges;

  [[nodiscard]] NodeID edge_vertex_count() const { return static_cast<NodeID>(edge_vertices.size()); }
  [[nodiscard]] NodeID artificial_base() const { return edge_vertex_count(); }
  [[nodiscard]] NodeID vertex_count() const { return edge_vertex_count() + (augmented ? k : 0); }
};

CspacModel build_cspac(const BatchGraph &batch);

// Adds k artificial vertices weighted by the current block loads and the
// artificial edges selected by `mode`. RSubset draws from `rng`.
void augment_with_blocks(CspacModel &model, const PartitionState &state, ModelMode mode, std::mt19937_64 &rng);

// CSR view of the model: edge-vertices first, then artificial vertices.
WeightedGraph to_weighted_graph(const CspacModel &model);

// Block of each edge of the batch, in edge-vertex order.
std::vector<BlockID> induced_edge_partition(const CspacModel &model, std::span<const BlockID> assignment);

} // namespace streamep
