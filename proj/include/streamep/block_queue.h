/*******************************************************************************
 * Addressable binary min-heap over block loads.
 *
 * Keys are (load, block id), so among equally loaded blocks the lowest id is
 * on top. top() is O(1), update() is O(log k).
 *
 * @file:   block_queue.h
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "streamep/definitions.h"

namespace streamep {

class BlockMinQueue {
public:
  BlockMinQueue() = default;
  explicit BlockMinQueue(std::span<const Weight> loads) { reset(loads); }

  void reset(std::span<const Weight> loads);

  [[nodiscard]] BlockID size() const { return static_cast<BlockID>(_heap.size()); }
  [[nodiscard]] BlockID top() const { return _heap.front(); }
  [[nodiscard]] Weight top_load() const { return _load[_heap.front()]; }
  [[nodiscard]] Weight load(BlockID block) const { return _load[block]; }

  void update(BlockID block, Weight new_load);
  void increase(BlockID block, Weight delta) { update(block, _load[block] + delta); }

private:
  [[nodiscard]] bool less(BlockID a, BlockID b) const {
    return _load[a] < _load[b] || (_load[a] == _load[b] && a < b);
  }
  void sift_up(std::size_t pos);
  void sift_down(std::size_t pos);
  void place(std::size_t pos, BlockID block) {
    _heap[pos] = block;
    _position[block] = pos;
  }

  std::vector<BlockID> _heap;
  std::vector<std::size_t> _position;
  std::vector<Weight> _load;
};

} // namespace streamep
