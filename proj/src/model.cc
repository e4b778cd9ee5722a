/*******************************************************************************
 * @file:   model.cc
 ******************************************************************************/
#include "streamep/model.h"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace streamep {

ModelMode ModelMode::subset(NodeID r) {
  if (r == 0) {
    throw ConfigError("rsubset mode requires r >= 1");
  }
  return {Kind::RSubset, r};
}

ModelMode ModelMode::parse(const std::string &text) {
  if (text == "minimal") {
    return minimal();
  }
  if (text == "maximal") {
    return maximal();
  }
  constexpr std::string_view prefix = "rsubset:";
  if (text.starts_with(prefix)) {
    NodeID r = 0;
    const char *begin = text.data() + prefix.size();
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, r);
    if (ec == std::errc{} && ptr == end && begin != end) {
      return subset(r);
    }
  }
  throw ConfigError("invalid model mode '" + text + "' (expected minimal, maximal or rsubset:R)");
}

std::string ModelMode::to_string() const {
  switch (kind) {
  case Kind::Maximal:
    return "maximal";
  case Kind::Minimal:
    return "minimal";
  case Kind::RSubset:
    return "rsubset:" + std::to_string(r);
  }
  return {};
}

CspacModel build_cspac(const BatchGraph &batch) {
  CspacModel model;
  model.edge_vertices.reserve(batch.edge_count);

  // A vertex with d batch edges contributes d - 1 path edges.
  {
    std::vector<EdgeID> degree(batch.vertex_count(), 0);
    for (NodeID u = 0; u < batch.current_count; ++u) {
      for (EdgeID e = batch.xadj[u]; e < batch.xadj[u + 1]; ++e) {
        const NodeID v = batch.adjncy[e];
        if (batch.is_past(v) || v > u) {
          ++degree[u];
          ++degree[v];
        }
      }
    }
    EdgeID aux = 0;
    for (const EdgeID d : degree) {
      aux += d > 0 ? d - 1 : 0;
    }
    model.aux_edges.reserve(aux);
  }

  // Most recent edge-vertex on each batch vertex's path.
  std::vector<NodeID> path_tail(batch.vertex_count(), kInvalidNode);

  auto extend_path = [&](NodeID local, NodeID edge_vertex) {
    if (path_tail[local] != kInvalidNode) {
      model.aux_edges.push_back({path_tail[local], edge_vertex, batch.global(local)});
    }
    path_tail[local] = edge_vertex;
  };

  for (NodeID u = 0; u < batch.current_count; ++u) {
    for (EdgeID e = batch.xadj[u]; e < batch.xadj[u + 1]; ++e) {
      const NodeID v = batch.adjncy[e];
      const bool past = batch.is_past(v);
      if (!past && v <= u) {
        continue;
      }
      const auto id = model.edge_vertex_count();
      model.edge_vertices.emplace_back(batch.global(u), batch.global(v));
      if (past) {
        model.past_links.emplace_back(id, batch.global(v));
      }
      extend_path(u, id);
      extend_path(v, id);
    }
  }
  assert(model.edge_vertices.size() == batch.edge_count);
  return model;
}

void augment_with_blocks(CspacModel &model, const PartitionState &state, ModelMode mode, std::mt19937_64 &rng) {
  if (model.augmented) {
    throw ConfigError("model is already augmented");
  }
  if (mode.required_record() != state.record_mode()) {
    throw ConfigError("model mode '" + mode.to_string() + "' needs a " +
                      (mode.required_record() == RecordMode::Full ? "full" : "minimal") + " block record");
  }

  model.augmented = true;
  model.k = state.k();
  model.artificial_weights = state.block_loads();

  std::vector<BlockID> sample;
  for (const auto &[edge_vertex, past] : model.past_links) {
    const auto recorded = state.blocks_of(past);
    if (recorded.empty()) {
      continue;
    }
    // The recorded blocks of a single endpoint are distinct, so every
    // artificial edge has multiplicity one.
    switch (mode.kind) {
    case ModelMode::Kind::Minimal:
    case ModelMode::Kind::Maximal:
      for (const BlockID block : recorded) {
        model.artificial_edges.push_back({edge_vertex, block, 1});
      }
      break;
    case ModelMode::Kind::RSubset:
      sample.clear();
      std::sample(recorded.begin(), recorded.end(), std::back_inserter(sample),
                  std::min<std::size_t>(mode.r, recorded.size()), rng);
      for (const BlockID block : sample) {
        model.artificial_edges.push_back({edge_vertex, block, 1});
      }
      break;
    }
  }
}

WeightedGraph to_weighted_graph(const CspacModel &model) {
  const NodeID base = model.artificial_base();
  std::vector<Weight> vertex_weights(model.vertex_count(), 1);
  if (model.augmented) {
    std::copy(model.artificial_weights.begin(), model.artificial_weights.end(), vertex_weights.begin() + base);
  }
  if (model.aux_edges.size() + model.artificial_edges.size() > std::numeric_limits<EdgeWeight>::max()) {
    throw std::length_error("batch model has too many edges for 32-bit edge weights");
  }
  WeightedGraph graph;
  graph.vwgt = std::move(vertex_weights);
  graph.artificial_base = base;
  const NodeID n = graph.n();

  graph.xadj.assign(n + 1, 0);
  for (const auto &e : model.aux_edges) {
    ++graph.xadj[e.a + 1];
    ++graph.xadj[e.b + 1];
  }
  for (const auto &e : model.artificial_edges) {
    ++graph.xadj[e.edge_vertex + 1];
    ++graph.xadj[base + e.block + 1];
  }
  std::partial_sum(graph.xadj.begin(), graph.xadj.end(), graph.xadj.begin());

  graph.adjncy.resize(graph.xadj[n]);
  graph.adjwgt.resize(graph.xadj[n]);
  std::vector<EdgeID> fill(graph.xadj.begin(), graph.xadj.end() - 1);
  auto link = [&](NodeID a, NodeID b, EdgeWeight w) {
    graph.adjncy[fill[a]] = b;
    graph.adjwgt[fill[a]++] = w;
    graph.adjncy[fill[b]] = a;
    graph.adjwgt[fill[b]++] = w;
  };
  for (const auto &e : model.aux_edges) {
    link(e.a, e.b, 1);
  }
  for (const auto &e : model.artificial_edges) {
    link(e.edge_vertex, base + e.block, e.w);
  }
  return graph;
}

std::vector<BlockID> induced_edge_partition(const CspacModel &model, std::span<const BlockID> assignment) {
  const NodeID count = model.edge_vertex_count();
  if (assignment.size() < count) {
    throw std::invalid_argument("assignment does not cover all edge-vertices");
  }
  std::vector<BlockID> blocks(assignment.begin(), assignment.begin() + count);
  for (NodeID j = 0; j < count; ++j) {
    if (blocks[j] == kInvalidBlock) {
      throw std::invalid_argument("edge-vertex " + std::to_string(j) + " is unassigned");
    }
  }
  return blocks;
}

} // namespace streamep
