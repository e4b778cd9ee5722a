/*******************************************************************************
 * @file:   graph.cc
 ******************************************************************************/
#include "streamep/graph.h"

#include <numeric>

namespace streamep {

Weight WeightedGraph::total_vertex_weight() const { return std::accumulate(vwgt.begin(), vwgt.end(), Weight{0}); }

WeightedGraph build_weighted_graph(std::vector<Weight> vertex_weights, std::span<const WeightedEdge> edges,
                                   NodeID artificial_base) {
  WeightedGraph graph;
  graph.vwgt = std::move(vertex_weights);
  graph.artificial_base = artificial_base;
  const NodeID n = graph.n();

  graph.xadj.assign(n + 1, 0);
  for (const auto &e : edges) {
    ++graph.xadj[e.a + 1];
    ++graph.xadj[e.b + 1];
  }
  std::partial_sum(graph.xadj.begin(), graph.xadj.end(), graph.xadj.begin());

  graph.adjncy.resize(graph.xadj[n]);
  graph.adjwgt.resize(graph.xadj[n]);
  std::vector<EdgeID> fill(graph.xadj.begin(), graph.xadj.end() - 1);
  for (const auto &e : edges) {
    graph.adjncy[fill[e.a]] = e.b;
    graph.adjwgt[fill[e.a]++] = e.w;
    graph.adjncy[fill[e.b]] = e.a;
    graph.adjwgt[fill[e.b]++] = e.w;
  }
  return graph;
}

void write_weighted_metis(const WeightedGraph &graph, std::ostream &out) {
  out << graph.n() << ' ' << graph.m() / 2 << " 11\n";
  for (NodeID u = 0; u < graph.n(); ++u) {
    out << graph.vwgt[u];
    for (EdgeID e = graph.xadj[u]; e < graph.xadj[u + 1]; ++e) {
      out << ' ' << graph.adjncy[e] + 1 << ' ' << graph.adjwgt[e];
    }
    out << '\n';
  }
}

} // namespace streamep
