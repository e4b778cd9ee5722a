/*******************************************************************************
 * @file:   coarsening.cc
 ******************************************************************************/
#include "streamep/coarsening.h"

#include <algorithm>
#include <cmath>

namespace streamep {

namespace {

constexpr double kMinShrinkFactor = 0.99;

} // namespace

NodeID coarsening_threshold(NodeID n, BlockID k, double multiplier) {
  const double base = std::max(static_cast<double>(n) / static_cast<double>(k), static_cast<double>(k));
  return static_cast<NodeID>(std::min(multiplier * base, static_cast<double>(kInvalidNode)));
}

std::vector<NodeID> label_propagation_clustering(const WeightedGraph &graph, int rounds, Weight max_cluster_weight) {
  const NodeID n = graph.n();
  const NodeID base = graph.artificial_base;

  std::vector<NodeID> cluster(n);
  std::vector<Weight> cluster_weight(graph.vwgt);
  for (NodeID u = 0; u < n; ++u) {
    cluster[u] = u;
  }

  std::vector<Weight> rating(base, 0);
  std::vector<NodeID> touched;

  for (int round = 0; round < rounds; ++round) {
    NodeID moved = 0;
    for (NodeID v = 0; v < base; ++v) {
      // Every cluster weighs at least one, so v could not join any.
      if (graph.vwgt[v] >= max_cluster_weight) {
        continue;
      }
      const auto neighbors = graph.neighbors(v);
      const auto weights = graph.weights(v);
      for (std::size_t i = 0; i < neighbors.size(); ++i) {
        const NodeID u = neighbors[i];
        if (graph.is_artificial(u)) {
          continue;
        }
        const NodeID c = cluster[u];
        if (rating[c] == 0) {
          touched.push_back(c);
        }
        rating[c] += weights[i];
      }

      const NodeID own = cluster[v];
      const Weight own_rating = rating[own];
      NodeID best = own;
      Weight best_rating = own_rating;
      for (const NodeID c : touched) {
        if (c == own || cluster_weight[c] + graph.vwgt[v] > max_cluster_weight) {
          continue;
        }
        if (rating[c] > best_rating || (rating[c] == best_rating && best != own && c < best)) {
          best = c;
          best_rating = rating[c];
        }
      }
      for (const NodeID c : touched) {
        rating[c] = 0;
      }
      touched.clear();

      if (best != own) {
        cluster_weight[own] -= graph.vwgt[v];
        cluster_weight[best] += graph.vwgt[v];
        cluster[v] = best;
        ++moved;
      }
    }
    if (moved == 0) {
      break;
    }
  }
  return cluster;
}

WeightedGraph contract(const WeightedGraph &graph, const std::vector<NodeID> &clustering,
                       std::vector<NodeID> &coarse_map) {
  const NodeID n = graph.n();
  const NodeID base = graph.artificial_base;

  coarse_map.assign(n, kInvalidNode);
  std::vector<NodeID> cluster_to_coarse(base, kInvalidNode);
  NodeID coarse_base = 0;
  for (NodeID v = 0; v < base; ++v) {
    NodeID &id = cluster_to_coarse[clustering[v]];
    if (id == kInvalidNode) {
      id = coarse_base++;
    }
    coarse_map[v] = id;
  }
  for (NodeID a = base; a < n; ++a) {
    coarse_map[a] = coarse_base + (a - base);
  }
  const NodeID coarse_n = coarse_base + (n - base);

  // Bucket fine vertices by coarse vertex.
  std::vector<NodeID> bucket_start(coarse_n + 1, 0);
  for (NodeID v = 0; v < n; ++v) {
    ++bucket_start[coarse_map[v] + 1];
  }
  for (NodeID c = 0; c < coarse_n; ++c) {
    bucket_start[c + 1] += bucket_start[c];
  }
  std::vector<NodeID> members(n);
  {
    std::vector<NodeID> fill(bucket_start.begin(), bucket_start.end() - 1);
    for (NodeID v = 0; v < n; ++v) {
      members[fill[coarse_map[v]]++] = v;
    }
  }

  // Two passes over the buckets: count distinct coarse neighbors, then fill
  // exactly sized arrays. Growing the arrays would briefly hold two copies.
  std::vector<Weight> accumulated(coarse_n, 0);
  std::vector<NodeID> touched;
  auto gather = [&](NodeID c) {
    for (NodeID i = bucket_start[c]; i < bucket_start[c + 1]; ++i) {
      const NodeID v = members[i];
      const auto neighbors = graph.neighbors(v);
      const auto weights = graph.weights(v);
      for (std::size_t j = 0; j < neighbors.size(); ++j) {
        const NodeID target = coarse_map[neighbors[j]];
        if (target == c) {
          continue;
        }
        if (accumulated[target] == 0) {
          touched.push_back(target);
        }
        accumulated[target] += weights[j];
      }
    }
  };

  WeightedGraph coarse;
  coarse.artificial_base = coarse_base;
  coarse.vwgt.assign(coarse_n, 0);
  coarse.xadj.assign(coarse_n + 1, 0);
  for (NodeID c = 0; c < coarse_n; ++c) {
    gather(c);
    coarse.xadj[c + 1] = coarse.xadj[c] + touched.size();
    for (const NodeID target : touched) {
      accumulated[target] = 0;
    }
    touched.clear();
  }

  coarse.adjncy.resize(coarse.xadj[coarse_n]);
  coarse.adjwgt.resize(coarse.xadj[coarse_n]);
  for (NodeID c = 0; c < coarse_n; ++c) {
    for (NodeID i = bucket_start[c]; i < bucket_start[c + 1]; ++i) {
      coarse.vwgt[c] += graph.vwgt[members[i]];
    }
    gather(c);
    EdgeID pos = coarse.xadj[c];
    for (const NodeID target : touched) {
      coarse.adjncy[pos] = target;
      coarse.adjwgt[pos++] = static_cast<EdgeWeight>(accumulated[target]);
      accumulated[target] = 0;
    }
    touched.clear();
  }
  return coarse;
}

Hierarchy coarsen(const WeightedGraph &graph, const CoarseningConfig &config) {
  Hierarchy hierarchy;
  hierarchy.finest = &graph;

  while (hierarchy.coarsest().artificial_base >= config.threshold && hierarchy.coarsest().artificial_base > 1) {
    const WeightedGraph &fine = hierarchy.coarsest();
    const auto clustering = label_propagation_clustering(fine, config.rounds, config.max_cluster_weight);
    // A round that barely shrinks the graph counts as no contraction.
    std::vector<bool> is_leader(fine.artificial_base, false);
    NodeID clusters = 0;
    for (NodeID v = 0; v < fine.artificial_base; ++v) {
      if (!is_leader[clustering[v]]) {
        is_leader[clustering[v]] = true;
        ++clusters;
      }
    }
    if (clusters > kMinShrinkFactor * static_cast<double>(fine.artificial_base)) {
      break;
    }
    std::vector<NodeID> map;
    WeightedGraph coarse = contract(fine, clustering, map);
    hierarchy.maps.push_back(std::move(map));
    hierarchy.coarse.push_back(std::move(coarse));
  }
  return hierarchy;
}

} // namespace streamep
