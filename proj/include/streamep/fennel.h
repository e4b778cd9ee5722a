/*******************************************************************************
 * Generalized Fennel scoring and k-independent block selection.
 *
 * The score of placing u into block i is
 *     w_i(u) - c(u) * alpha * gamma * c(V_i)^(gamma - 1)
 * where w_i(u) is the edge weight from u into block i. Only the blocks
 * adjacent to u and the globally lightest block can win, so selection costs
 * O(d(u) + log k) with a BlockMinQueue.
 *
 * @file:   fennel.h
 ******************************************************************************/
#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>

#include "streamep/block_queue.h"
#include "streamep/definitions.h"

namespace streamep {

struct FennelParams {
  double alpha = 1.0;
  double gamma = 1.5;
  Weight l_max = std::numeric_limits<Weight>::max();
};

struct BlockConnection {
  BlockID block;
  Weight weight;
};

inline double fennel_penalty(Weight vertex_weight, Weight block_load, const FennelParams &params) {
  const double load = static_cast<double>(block_load);
  // sqrt is exact-rounded and far cheaper than pow for the default gamma.
  const double scaled = params.gamma == 1.5 ? std::sqrt(load) : std::pow(load, params.gamma - 1.0);
  return static_cast<double>(vertex_weight) * params.alpha * params.gamma * scaled;
}

inline double fennel_gain(Weight neighbor_weight, Weight vertex_weight, Weight block_load,
                          const FennelParams &params) {
  return static_cast<double>(neighbor_weight) - fennel_penalty(vertex_weight, block_load, params);
}

// Highest-scoring feasible block; ties go to the lighter block, then to the
// lower block id. `adjacent` lists each adjacent block once with its
// aggregated connection weight.
// Throws InfeasibleError if no block can take `vertex_weight` under l_max.
BlockID select_block(Weight vertex_weight, std::span<const BlockConnection> adjacent, const BlockMinQueue &queue,
                     const FennelParams &params);

struct AlphaPolicy {
  enum class Kind { Static, Batch, Dynamic };

  Kind kind = Kind::Batch;
  double y = 2.0;                  // edge/vertex ratio guess for Static and Dynamic
  bool halve_vertex_count = false; // use n* = m/2 instead of n* = m

  // "static:Y", "static", "batch" or "dynamic"
  static AlphaPolicy parse(const std::string &text);
  [[nodiscard]] std::string to_string() const;
};

// Tracks the stream-level counts needed by the alpha policies.
class AlphaEstimator {
public:
  AlphaEstimator(AlphaPolicy policy, BlockID k, EdgeID m);

  // Alpha for a batch model with `vertices` edge-vertices and `edges`
  // auxiliary edges; nullopt for an empty model. Call once per batch, in
  // stream order.
  std::optional<double> next_batch(EdgeID vertices, EdgeID edges);

private:
  [[nodiscard]] double from_ratio(double ratio) const;

  AlphaPolicy _policy;
  BlockID _k;
  double _sqrt_k;
  double _n_star;
  EdgeID _seen_vertices = 0;
  EdgeID _seen_edges = 0;
};

double batch_alpha(BlockID k, EdgeID vertices, EdgeID edges);

} // namespace streamep
