#pragma once

#include <cstdint>
#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/order.hpp"
#include "lexsearch/tree.hpp"

namespace lexsearch {

/// Optional record of the partition states the ordering pass went through.
struct OrderingTrace {
  bool record_partitions = false;
  /// Partition after each processed beta position (O(n) each to capture).
  std::vector<std::vector<std::vector<int>>> partition_steps;
  /// Partition after the whole pass, before the tiebreak sort.
  std::vector<std::vector<int>> final_partition;
  VertexOrder beta;
  VertexOrder tau;
  /// Vertices relocated by the refinement loop; at most one per edge.
  std::uint64_t refine_moves = 0;
};

struct OrderingOptions {
  /// Replaces the default beta (reverse breadth-first order of the tree).
  /// Any order that keeps every vertex left of its tree ancestors is valid.
  const VertexOrder* beta_override = nullptr;
  /// Re-check that `tree` really is a tree a depth-first search can produce.
  bool verify_tree = false;
};

/// Rebuilds a search order of `g` out of one of its depth-first trees.
///
/// Processes the vertices in beta order, refining an ordered partition with
/// each vertex's already-processed neighbors; the classes are then sorted by
/// reversed `rho`, `start` is moved to the front, and the reverse of the
/// resulting sequence becomes the tiebreak tau.  The returned order is the
/// tree's depth-first traversal under tau.
///
/// `rho` must end at `start`, which must be the tree's root.  O(n + m).
VertexOrder ordering(const Graph& g, const RootedSpanningTree& tree, int start,
                     const VertexOrder& rho, const OrderingOptions& options = {},
                     OrderingTrace* trace = nullptr);

}  // namespace lexsearch
