/*******************************************************************************
 * @file:   batch.cc
 ******************************************************************************/
#include "streamep/batch.h"

#include <algorithm>

namespace streamep {

BatchLoader::BatchLoader(VertexStream &stream, NodeID delta) : _stream(stream), _delta(delta) {
  if (delta == 0) {
    throw ConfigError("buffer size delta must be at least 1");
  }
  _next_batch = stream.position() / delta + 1;
}

std::size_t BatchLoader::batch_count() const {
  const NodeID n = _stream.header().n;
  return (static_cast<std::size_t>(n) + _delta - 1) / _delta;
}

BatchGraph BatchLoader::next() {
  const NodeID n = _stream.header().n;
  const NodeID first = _stream.position();
  if (first % _delta != 0) {
    throw ConfigError("stream is not positioned at a batch boundary");
  }
  const NodeID end = static_cast<NodeID>(std::min<std::uint64_t>(static_cast<std::uint64_t>(first) + _delta, n));

  BatchGraph batch;
  batch.batch_index = _next_batch++;
  batch.delta = _delta;
  batch.current_count = end - first;
  batch.local_to_global.resize(batch.current_count);
  for (NodeID i = 0; i < batch.current_count; ++i) {
    batch.local_to_global[i] = first + i;
  }
  batch.xadj.reserve(batch.current_count + 1);
  batch.xadj.push_back(0);

  if (_past_local.empty()) {
    _past_local.assign(n, kInvalidNode);
  }

  EdgeID past_edges = 0;
  EdgeID inner_entries = 0;
  for (NodeID u = first; u < end; ++u) {
    _stream.next(_neighbors);
    for (const NodeID v : _neighbors) {
      if (v >= end) {
        continue;
      }
      if (v >= first) {
        batch.adjncy.push_back(v - first);
        ++inner_entries;
      } else {
        if (_past_local[v] == kInvalidNode) {
          _past_local[v] = static_cast<NodeID>(batch.local_to_global.size());
          batch.local_to_global.push_back(v);
        }
        batch.adjncy.push_back(_past_local[v]);
        ++past_edges;
      }
    }
    batch.xadj.push_back(batch.adjncy.size());
  }

  batch.past_count = static_cast<NodeID>(batch.local_to_global.size()) - batch.current_count;
  batch.edge_count = past_edges + inner_entries / 2;
  for (NodeID local = batch.current_count; local < batch.vertex_count(); ++local) {
    _past_local[batch.local_to_global[local]] = kInvalidNode;
  }
  return batch;
}

BatchGraph load_batch(VertexStream &stream, NodeID delta, std::size_t b) {
  if (delta == 0 || b == 0 || static_cast<std::uint64_t>(b - 1) * delta != stream.position()) {
    throw ConfigError("stream is not positioned at the start of batch " + std::to_string(b));
  }
  BatchLoader loader(stream, delta);
  return loader.next();
}

} // namespace streamep
