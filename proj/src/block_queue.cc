/*******************************************************************************
 * @file:   block_queue.cc
 ******************************************************************************/
#include "streamep/block_queue.h"

namespace streamep {

void BlockMinQueue::reset(std::span<const Weight> loads) {
  const auto k = loads.size();
  _load.assign(loads.begin(), loads.end());
  _heap.resize(k);
  _position.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    place(i, static_cast<BlockID>(i));
  }
  for (std::size_t i = k / 2; i-- > 0;) {
    sift_down(i);
  }
}

void BlockMinQueue::update(BlockID block, Weight new_load) {
  const Weight old = _load[block];
  _load[block] = new_load;
  if (new_load < old) {
    sift_up(_position[block]);
  } else if (new_load > old) {
    sift_down(_position[block]);
  }
}

void BlockMinQueue::sift_up(std::size_t pos) {
  const BlockID block = _heap[pos];
  while (pos > 0) {
    const std::size_t parent = (pos - 1) / 2;
    if (!less(block, _heap[parent])) {
      break;
    }
    place(pos, _heap[parent]);
    pos = parent;
  }
  place(pos, block);
}

void BlockMinQueue::sift_down(std::size_t pos) {
  const BlockID block = _heap[pos];
  const std::size_t n = _heap.size();
  while (true) {
    std::size_t child = 2 * pos + 1;
    if (child >= n) {
      break;
    }
    if (child + 1 < n && less(_heap[child + 1], _heap[child])) {
      ++child;
    }
    if (!less(_heap[child], block)) {
      break;
    }
    place(pos, _heap[child]);
    pos = child;
  }
  place(pos, block);
}

} // namespace streamep
