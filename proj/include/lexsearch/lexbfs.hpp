#pragma once

#include <cstdint>
#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/order.hpp"

namespace lexsearch {

/// Optional instrumentation for one partition-refinement search run.
struct RefinementTrace {
  /// When set, record the partition after every pivot (costs O(n) per step).
  bool record_snapshots = false;

  struct Snapshot {
    std::vector<int> visited;                // pivots so far, in visit order
    std::vector<std::vector<int>> classes;   // remaining classes, left to right
  };
  std::vector<Snapshot> snapshots;

  /// Vertices relocated by refine across the whole run; at most 2m + n.
  std::uint64_t refine_moves = 0;
};

/// Lexicographic breadth-first search; ties are broken toward the rightmost
/// candidate in `tiebreak`, so the search starts at tiebreak's last vertex.
///
/// Runs in O(n + m): one class ordered by descending tiebreak position to
/// begin with, then the front vertex is visited and its unvisited neighbors
/// split off ahead of their classes.
VertexOrder lexbfs_plus(const Graph& g, const VertexOrder& tiebreak,
                        RefinementTrace* trace = nullptr);

/// Plain LexBFS from `start`: ties fall to the smallest vertex id, realized by
/// the canonical tiebreak (ids ascending, start moved last).
VertexOrder lexbfs(const Graph& g, int start, RefinementTrace* trace = nullptr);

/// Ids in ascending order with `start` moved to the back.
VertexOrder canonical_tiebreak_ending_at(const Graph& g, int start);

}  // namespace lexsearch
