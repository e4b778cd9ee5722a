/*******************************************************************************
 * @file:   fennel.cc
 ******************************************************************************/
#include "streamep/fennel.h"

#include <charconv>
#include <cmath>

namespace streamep {

BlockID select_block(Weight vertex_weight, std::span<const BlockConnection> adjacent, const BlockMinQueue &queue,
                     const FennelParams &params) {
  BlockID best = kInvalidBlock;
  double best_score = 0.0;
  auto offer = [&](BlockID block, double score) {
    if (best == kInvalidBlock || score > best_score ||
        (score == best_score && std::pair(queue.load(block), block) < std::pair(queue.load(best), best))) {
      best = block;
      best_score = score;
    }
  };

  bool lightest_is_adjacent = false;
  const BlockID lightest = queue.top();
  for (const auto &[block, weight] : adjacent) {
    lightest_is_adjacent |= block == lightest;
    const Weight load = queue.load(block);
    if (load + vertex_weight <= params.l_max) {
      offer(block, fennel_gain(weight, vertex_weight, load, params));
    }
  }

  // Among non-adjacent blocks the lightest one scores best. If the lightest
  // block is adjacent, its positive connection already beats every
  // non-adjacent block.
  if (!lightest_is_adjacent && queue.top_load() + vertex_weight <= params.l_max) {
    offer(lightest, -fennel_penalty(vertex_weight, queue.top_load(), params));
  }

  if (best == kInvalidBlock) {
    throw InfeasibleError("no block can take a vertex of weight " + std::to_string(vertex_weight) +
                          " (lightest load " + std::to_string(queue.top_load()) + ", l_max " +
                          std::to_string(params.l_max) + ")");
  }
  return best;
}

AlphaPolicy AlphaPolicy::parse(const std::string &text) {
  if (text == "batch") {
    return {Kind::Batch};
  }
  if (text == "dynamic") {
    return {Kind::Dynamic};
  }
  if (text == "static") {
    return {Kind::Static};
  }
  constexpr std::string_view prefix = "static:";
  if (text.starts_with(prefix)) {
    const std::string value = text.substr(prefix.size());
    try {
      std::size_t used = 0;
      const double y = std::stod(value, &used);
      if (used == value.size() && y > 0.0) {
        return {Kind::Static, y};
      }
    } catch (const std::exception &) {
    }
  }
  throw ConfigError("invalid alpha policy '" + text + "' (expected static:Y, batch or dynamic)");
}

std::string AlphaPolicy::to_string() const {
  switch (kind) {
  case Kind::Static:
    return "static:" + std::to_string(y);
  case Kind::Batch:
    return "batch";
  case Kind::Dynamic:
    return "dynamic";
  }
  return {};
}

double batch_alpha(BlockID k, EdgeID vertices, EdgeID edges) {
  const double n = static_cast<double>(vertices);
  return std::sqrt(static_cast<double>(k)) * static_cast<double>(edges) / (n * std::sqrt(n));
}

AlphaEstimator::AlphaEstimator(AlphaPolicy policy, BlockID k, EdgeID m)
    : _policy(policy),
      _k(k),
      _sqrt_k(std::sqrt(static_cast<double>(k))),
      _n_star(policy.halve_vertex_count ? static_cast<double>(m) / 2.0 : static_cast<double>(m)) {}

double AlphaEstimator::from_ratio(double ratio) const {
  if (_n_star <= 0.0) {
    return 0.0;
  }
  return _sqrt_k * ratio * _n_star / (_n_star * std::sqrt(_n_star));
}

std::optional<double> AlphaEstimator::next_batch(EdgeID vertices, EdgeID edges) {
  if (vertices == 0) {
    return std::nullopt;
  }
  double alpha = 0.0;
  switch (_policy.kind) {
  case AlphaPolicy::Kind::Static:
    alpha = from_ratio(_policy.y);
    break;
  case AlphaPolicy::Kind::Batch:
    alpha = batch_alpha(_k, vertices, edges);
    break;
  case AlphaPolicy::Kind::Dynamic:
    // Starts from the static guess, then uses the auxiliary-edge ratio
    // observed over all earlier batches.
    alpha = _seen_vertices == 0 ? from_ratio(_policy.y)
                                : from_ratio(static_cast<double>(_seen_edges) / static_cast<double>(_seen_vertices));
    break;
  }
  _seen_vertices += vertices;
  _seen_edges += edges;
  return alpha;
}

} // namespace streamep
