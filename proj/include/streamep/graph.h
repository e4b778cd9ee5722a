/*******************************************************************************
 * Weighted CSR graph used by the multilevel partitioner.
 *
 * Vertices [artificial_base, n) are artificial block vertices: vertex
 * artificial_base + i stands for block i and never moves.
 *
 * @file:   graph.h
 ******************************************************************************/
#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "streamep/definitions.h"

namespace streamep {

struct WeightedGraph {
  std::vector<EdgeID> xadj{0};
  std::vector<NodeID> adjncy;
  std::vector<EdgeWeight> adjwgt;
  std::vector<Weight> vwgt;
  NodeID artificial_base = 0;

  [[nodiscard]] NodeID n() const { return static_cast<NodeID>(vwgt.size()); }
  [[nodiscard]] EdgeID m() const { return adjncy.size(); } // directed entries
  [[nodiscard]] NodeID artificial_count() const { return n() - artificial_base; }
  [[nodiscard]] bool is_artificial(NodeID u) const { return u >= artificial_base; }
  [[nodiscard]] EdgeID degree(NodeID u) const { return xadj[u + 1] - xadj[u]; }

  [[nodiscard]] std::span<const NodeID> neighbors(NodeID u) const {
    return {adjncy.data() + xadj[u], adjncy.data() + xadj[u + 1]};
  }
  [[nodiscard]] std::span<const EdgeWeight> weights(NodeID u) const {
    return {adjwgt.data() + xadj[u], adjwgt.data() + xadj[u + 1]};
  }

  [[nodiscard]] Weight total_vertex_weight() const;
};

struct WeightedEdge {
  NodeID a;
  NodeID b;
  EdgeWeight w;
};

// Builds a symmetric CSR from an undirected edge list. Neighbors appear in
// edge-list order.
WeightedGraph build_weighted_graph(std::vector<Weight> vertex_weights, std::span<const WeightedEdge> edges,
                                   NodeID artificial_base);

// METIS text with vertex and edge weights (fmt 11), for inspection.
void write_weighted_metis(const WeightedGraph &graph, std::ostream &out);

} // namespace streamep
