/*******************************************************************************
 * Per-batch subgraph G_b of a vertex stream.
 *
 * Batch b (1-based) holds the vertices [(b-1)*delta, min(b*delta, n)) in
 * stream order. An edge belongs to the batch of its later endpoint, so edges
 * towards future batches are dropped here and picked up when the other
 * endpoint is streamed.
 *
 * @file:   batch.h
 ******************************************************************************/
#pragma once

#include <vector>

#include "streamep/definitions.h"
#include "streamep/graph_io.h"

namespace streamep {

struct BatchGraph {
  std::size_t batch_index = 0; // 1-based
  NodeID delta = 0;
  NodeID current_count = 0;
  NodeID past_count = 0;

  // Local ids [0, current_count) are current vertices in stream order, the
  // remaining ones are past vertices in order of first appearance.
  std::vector<NodeID> local_to_global;

  // CSR over the current vertices only; targets are local ids.
  std::vector<EdgeID> xadj;
  std::vector<NodeID> adjncy;

  EdgeID edge_count = 0;

  [[nodiscard]] NodeID vertex_count() const { return current_count + past_count; }
  [[nodiscard]] bool is_past(NodeID local) const { return local >= current_count; }
  [[nodiscard]] NodeID global(NodeID local) const { return local_to_global[local]; }
};

// Loads consecutive batches from a stream. Keeps an O(n) scratch map for
// relabeling past vertices.
class BatchLoader {
public:
  BatchLoader(VertexStream &stream, NodeID delta);

  [[nodiscard]] std::size_t batch_count() const;
  [[nodiscard]] bool done() const { return _stream.done(); }

  // Loads the next batch; the stream must be positioned at its first vertex.
  BatchGraph next();

private:
  VertexStream &_stream;
  NodeID _delta;
  std::size_t _next_batch = 1;
  std::vector<NodeID> _past_local;
  std::vector<NodeID> _neighbors;
};

// Loads batch `b` from a stream positioned at vertex (b-1)*delta.
BatchGraph load_batch(VertexStream &stream, NodeID delta, std::size_t b);

} // namespace streamep
