/*******************************************************************************
 * @file:   multilevel.cc
 ******************************************************************************/
#include "streamep/multilevel.h"

#include <cassert>

namespace streamep {

namespace {

// Sparse per-block accumulator with O(touched) reset.
class BlockRatings {
public:
  explicit BlockRatings(BlockID k) : _weight(k, 0) {}

  void add(BlockID block, Weight w) {
    if (_weight[block] == 0) {
      _touched.push_back(block);
    }
    _weight[block] += w;
  }

  [[nodiscard]] Weight operator[](BlockID block) const { return _weight[block]; }
  [[nodiscard]] const std::vector<BlockID> &touched() const { return _touched; }

  void clear() {
    for (const BlockID block : _touched) {
      _weight[block] = 0;
    }
    _touched.clear();
  }

private:
  std::vector<Weight> _weight;
  std::vector<BlockID> _touched;
};

BlockID block_of(const WeightedGraph &graph, const std::vector<BlockID> &assignment, NodeID u) {
  return graph.is_artificial(u) ? u - graph.artificial_base : assignment[u];
}

} // namespace

std::vector<Weight> initial_block_loads(const WeightedGraph &graph, BlockID k) {
  std::vector<Weight> loads(k, 0);
  if (graph.artificial_count() == k) {
    for (BlockID i = 0; i < k; ++i) {
      loads[i] = graph.vwgt[graph.artificial_base + i];
    }
  } else if (graph.artificial_count() != 0) {
    throw std::invalid_argument("graph has " + std::to_string(graph.artificial_count()) +
                                " artificial vertices, expected " + std::to_string(k));
  }
  return loads;
}

std::vector<BlockID> initial_partition(const WeightedGraph &graph, BlockID k, const FennelParams &params) {
  std::vector<BlockID> assignment(graph.n(), kInvalidBlock);
  for (NodeID a = graph.artificial_base; a < graph.n(); ++a) {
    assignment[a] = a - graph.artificial_base;
  }

  BlockMinQueue queue(initial_block_loads(graph, k));
  BlockRatings ratings(k);
  std::vector<BlockConnection> adjacent;

  for (NodeID v = 0; v < graph.artificial_base; ++v) {
    const auto neighbors = graph.neighbors(v);
    const auto weights = graph.weights(v);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      const BlockID block = block_of(graph, assignment, neighbors[i]);
      if (block != kInvalidBlock) {
        ratings.add(block, weights[i]);
      }
    }
    adjacent.clear();
    for (const BlockID block : ratings.touched()) {
      adjacent.push_back({block, ratings[block]});
    }
    ratings.clear();

    const BlockID block = select_block(graph.vwgt[v], adjacent, queue, params);
    assignment[v] = block;
    queue.increase(block, graph.vwgt[v]);
  }
  return assignment;
}

std::size_t refine_level(const WeightedGraph &graph, std::vector<BlockID> &assignment, std::vector<Weight> &loads,
                         BlockID k, const FennelParams &params, int rounds, const MoveObserver &observer) {
  BlockRatings ratings(k);
  std::size_t total_moves = 0;

  for (int round = 0; round < rounds; ++round) {
    std::size_t moves = 0;
    for (NodeID v = 0; v < graph.artificial_base; ++v) {
      const auto neighbors = graph.neighbors(v);
      const auto weights = graph.weights(v);
      for (std::size_t i = 0; i < neighbors.size(); ++i) {
        ratings.add(block_of(graph, assignment, neighbors[i]), weights[i]);
      }

      if (ratings.touched().size() == 1 && ratings.touched().front() == assignment[v]) {
        ratings.clear();
        continue;
      }

      const Weight c = graph.vwgt[v];
      const BlockID from = assignment[v];
      const double current = fennel_gain(ratings[from], c, loads[from] - c, params);
      BlockID best = kInvalidBlock;
      double best_score = 0.0;
      for (const BlockID block : ratings.touched()) {
        // The penalty is never negative, so the connection weight bounds the
        // score. Skipping these blocks cannot change the outcome.
        const auto bound = static_cast<double>(ratings[block]);
        if (block == from || bound <= current || (best != kInvalidBlock && bound < best_score) ||
            loads[block] + c > params.l_max) {
          continue;
        }
        const double score = fennel_gain(ratings[block], c, loads[block], params);
        if (best == kInvalidBlock || score > best_score || (score == best_score && block < best)) {
          best = block;
          best_score = score;
        }
      }
      ratings.clear();

      if (best != kInvalidBlock && best_score > current) {
        if (observer) {
          observer(v, from, best, assignment, loads);
        }
        loads[from] -= c;
        loads[best] += c;
        assignment[v] = best;
        ++moves;
      }
    }
    total_moves += moves;
    if (moves == 0) {
      break;
    }
  }
  return total_moves;
}

std::vector<BlockID> refine(const Hierarchy &hierarchy, std::vector<BlockID> coarsest_assignment, BlockID k,
                            const FennelParams &params, int rounds) {
  std::vector<BlockID> assignment = std::move(coarsest_assignment);
  std::vector<Weight> loads = initial_block_loads(hierarchy.coarsest(), k);
  const WeightedGraph &coarsest = hierarchy.coarsest();
  for (NodeID v = 0; v < coarsest.artificial_base; ++v) {
    loads[assignment[v]] += coarsest.vwgt[v];
  }

  for (std::size_t level = hierarchy.level_count(); level-- > 0;) {
    const WeightedGraph &graph = hierarchy.level(level);
    if (level + 1 < hierarchy.level_count()) {
      const auto &map = hierarchy.maps[level];
      std::vector<BlockID> finer(graph.n());
      for (NodeID v = 0; v < graph.n(); ++v) {
        finer[v] = assignment[map[v]];
      }
      assignment = std::move(finer);
    }
    refine_level(graph, assignment, loads, k, params, rounds);
  }
  return assignment;
}

std::vector<BlockID> partition_multilevel(const WeightedGraph &graph, BlockID k, const FennelParams &params,
                                          const MultilevelConfig &config, Weight max_cluster_weight) {
  CoarseningConfig coarsening;
  coarsening.rounds = config.coarsening_rounds;
  coarsening.threshold = coarsening_threshold(graph.n(), k, config.threshold_multiplier);
  coarsening.max_cluster_weight = max_cluster_weight;

  const Hierarchy hierarchy = coarsen(graph, coarsening);
  auto assignment = initial_partition(hierarchy.coarsest(), k, params);
  return refine(hierarchy, std::move(assignment), k, params, config.refinement_rounds);
}

} // namespace streamep
