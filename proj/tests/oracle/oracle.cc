/*******************************************************************************
 * @file:   oracle.cc
 ******************************************************************************/
#include "oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace streamep::oracle {

double fennel_score(double connection, double vertex_weight, double load, const FennelParams &params) {
  return connection - vertex_weight * params.alpha * params.gamma * std::pow(load, params.gamma - 1.0);
}

namespace {

struct Candidate {
  BlockID block = kInvalidBlock;
  double score = 0.0;
  Weight load = 0;

  [[nodiscard]] bool beats(const Candidate &other) const {
    if (other.block == kInvalidBlock) {
      return true;
    }
    if (score != other.score) {
      return score > other.score;
    }
    if (load != other.load) {
      return load < other.load;
    }
    return block < other.block;
  }
};

} // namespace

BlockID naive_argmax_block(Weight vertex_weight, std::span<const Weight> connection, std::span<const Weight> loads,
                           const FennelParams &params) {
  Candidate best;
  for (BlockID i = 0; i < loads.size(); ++i) {
    if (loads[i] + vertex_weight > params.l_max) {
      continue;
    }
    const Candidate candidate{i,
                              fennel_score(static_cast<double>(connection[i]), static_cast<double>(vertex_weight),
                                           static_cast<double>(loads[i]), params),
                              loads[i]};
    if (candidate.beats(best)) {
      best = candidate;
    }
  }
  return best.block;
}

BlockID naive_freighte_block(std::span<const BlockID> record_u, std::span<const BlockID> record_v,
                             std::span<const Weight> loads, const FennelParams &params) {
  std::vector<Weight> connection(loads.size(), 0);
  for (const BlockID block : record_u) {
    ++connection[block];
  }
  for (const BlockID block : record_v) {
    ++connection[block];
  }
  return naive_argmax_block(1, connection, loads, params);
}

std::vector<std::vector<BlockID>> blocks_per_vertex(NodeID n, std::span<const Edge> edges,
                                                    std::span<const BlockID> edge_blocks) {
  std::vector<std::set<BlockID>> sets(n);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    sets[edges[j].first].insert(edge_blocks[j]);
    sets[edges[j].second].insert(edge_blocks[j]);
  }
  std::vector<std::vector<BlockID>> blocks(n);
  for (NodeID v = 0; v < n; ++v) {
    blocks[v].assign(sets[v].begin(), sets[v].end());
  }
  return blocks;
}

EdgeID replicas_per_block(NodeID n, BlockID k, std::span<const Edge> edges, std::span<const BlockID> edge_blocks) {
  std::vector<std::set<NodeID>> vertices(k);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (edges[j].first >= n || edges[j].second >= n) {
      throw std::out_of_range("edge endpoint outside the graph");
    }
    vertices[edge_blocks[j]].insert(edges[j].first);
    vertices[edge_blocks[j]].insert(edges[j].second);
  }
  EdgeID total = 0;
  for (const auto &set : vertices) {
    total += set.size();
  }
  return total;
}

EdgeID extra_replicas(const std::vector<std::vector<BlockID>> &blocks) {
  EdgeID total = 0;
  for (const auto &list : blocks) {
    total += list.empty() ? 0 : list.size() - 1;
  }
  return total;
}

Theorem1Result theorem1_check(NodeID n, std::span<const Edge> edges, std::span<const Edge> aux,
                              std::span<const BlockID> vp) {
  Theorem1Result result;
  result.replicas = extra_replicas(blocks_per_vertex(n, edges, vp.first(edges.size())));
  for (const auto &[a, b] : aux) {
    result.cut += vp[a] != vp[b] ? 1 : 0;
  }
  result.ok = result.replicas <= result.cut;
  return result;
}

Theorem2Result theorem2_check(const std::vector<std::vector<BlockID>> &before, std::span<const Edge> edges,
                              std::span<const Edge> aux, std::span<const ArtificialLink> artificial,
                              std::span<const BlockID> vp) {
  const auto n = static_cast<NodeID>(before.size());
  std::vector<std::set<BlockID>> after(n);
  for (NodeID v = 0; v < n; ++v) {
    after[v].insert(before[v].begin(), before[v].end());
  }
  for (std::size_t j = 0; j < edges.size(); ++j) {
    after[edges[j].first].insert(vp[j]);
    after[edges[j].second].insert(vp[j]);
  }
  std::vector<std::vector<BlockID>> after_lists(n);
  for (NodeID v = 0; v < n; ++v) {
    after_lists[v].assign(after[v].begin(), after[v].end());
  }

  Theorem2Result result;
  result.new_replicas = extra_replicas(after_lists) - extra_replicas(before);
  for (const auto &[a, b] : aux) {
    result.cut += vp[a] != vp[b] ? 1 : 0;
  }
  for (const auto &link : artificial) {
    result.cut += vp[link.edge_vertex] != link.block ? link.weight : 0;
  }
  result.ok = static_cast<Weight>(result.new_replicas) <= result.cut;
  return result;
}

double exhaustive_best_rf(const TinyGraph &graph, BlockID k, Weight l_max) {
  const std::size_t m = graph.edges.size();
  double combinations = std::pow(static_cast<double>(k), static_cast<double>(m));
  if (combinations > static_cast<double>(1 << 24)) {
    throw std::invalid_argument("instance too large for enumeration");
  }
  if (graph.n == 0) {
    return 0.0;
  }

  std::vector<BlockID> blocks(m, 0);
  EdgeID best = std::numeric_limits<EdgeID>::max();
  while (true) {
    std::vector<Weight> loads(k, 0);
    for (const BlockID block : blocks) {
      ++loads[block];
    }
    if (*std::max_element(loads.begin(), loads.end()) <= l_max) {
      best = std::min(best, replicas_per_block(graph.n, k, graph.edges, blocks));
    }
    std::size_t pos = 0;
    while (pos < m && ++blocks[pos] == k) {
      blocks[pos++] = 0;
    }
    if (pos == m) {
      break;
    }
  }
  if (best == std::numeric_limits<EdgeID>::max()) {
    throw std::invalid_argument("no assignment satisfies l_max");
  }
  return static_cast<double>(best) / graph.n;
}

std::vector<std::pair<Edge, Edge>> contracted_spac(const std::vector<std::vector<NodeID>> &adjacency) {
  const auto n = static_cast<NodeID>(adjacency.size());

  // Edges in the order a single-batch stream first meets them.
  std::vector<Edge> edges;
  for (NodeID u = 0; u < n; ++u) {
    for (const NodeID v : adjacency[u]) {
      if (u < v) {
        edges.emplace_back(u, v);
      }
    }
  }

  // Split vertices: one per (vertex, incident edge), grouped per vertex in
  // stream order of the edges.
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    incident[edges[j].first].push_back(j);
    incident[edges[j].second].push_back(j);
  }
  struct SplitVertex {
    NodeID vertex;
    std::size_t edge;
  };
  std::vector<SplitVertex> split;
  std::map<std::pair<NodeID, std::size_t>, std::size_t> split_id;
  for (NodeID v = 0; v < n; ++v) {
    for (const std::size_t j : incident[v]) {
      split_id[{v, j}] = split.size();
      split.push_back({v, j});
    }
  }

  constexpr Weight kDominant = std::numeric_limits<Weight>::max();
  struct SpacEdge {
    std::size_t a;
    std::size_t b;
    Weight w;
  };
  std::vector<SpacEdge> spac;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    spac.push_back({split_id[{edges[j].first, j}], split_id[{edges[j].second, j}], kDominant});
  }
  for (NodeID v = 0; v < n; ++v) {
    for (std::size_t i = 1; i < incident[v].size(); ++i) {
      spac.push_back({split_id[{v, incident[v][i - 1]}], split_id[{v, incident[v][i]}], 1});
    }
  }

  // Contract every dominant edge with a union-find.
  std::vector<std::size_t> parent(split.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (const auto &e : spac) {
    if (e.w == kDominant) {
      parent[find(e.a)] = find(e.b);
    }
  }

  // Name each contracted vertex by the graph edge of its members.
  std::map<std::size_t, Edge> name;
  for (std::size_t s = 0; s < split.size(); ++s) {
    const Edge edge = edges[split[s].edge];
    auto [it, inserted] = name.emplace(find(s), edge);
    if (!inserted && it->second != edge) {
      throw std::logic_error("dominant contraction merged two graph edges");
    }
  }

  std::vector<std::pair<Edge, Edge>> result;
  for (const auto &e : spac) {
    if (e.w != kDominant) {
      Edge a = name.at(find(e.a));
      Edge b = name.at(find(e.b));
      if (b < a) {
        std::swap(a, b);
      }
      result.emplace_back(a, b);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

} // namespace streamep::oracle
