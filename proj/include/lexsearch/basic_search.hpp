#pragma once

#include <span>
#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/raw_block.hpp"
#include "lexsearch/order.hpp"

namespace lexsearch {

/// Every vertex's neighbors re-sorted by ascending position in some order,
/// all lists in one flat block so a build costs two allocations total.
class PositionalAdjacency {
 public:
  PositionalAdjacency(const Graph& g, const VertexOrder& order);

  std::span<const int> operator[](int v) const {
    return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<int> offsets_;
  RawBlock<int> flat_;
};

/// Neighbors of every vertex sorted by ascending position in `order`, built
/// with one counting pass over the adjacency, O(n+m).
PositionalAdjacency adjacency_by_position(const Graph& g, const VertexOrder& order);

/// Depth-first search from `start`; among the unvisited neighbors of the
/// deepest stack vertex that has one, the rightmost in `tiebreak` is visited
/// next.
VertexOrder dfs_plus(const Graph& g, int start, const VertexOrder& tiebreak);

/// Breadth-first search from `start`, neighbors in stored adjacency order.
VertexOrder bfs_order(const Graph& g, int start);

}  // namespace lexsearch
