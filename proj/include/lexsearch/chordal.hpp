#pragma once

#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/lexbfs.hpp"
#include "lexsearch/order.hpp"
#include "lexsearch/ordering.hpp"
#include "lexsearch/tree.hpp"

namespace lexsearch {

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination order when chordal.
  VertexOrder peo;
  /// Induced cycle of length >= 4, in cycle order, when not.
  std::vector<int> chordless_cycle;
};

/// Tests the reverse of a lexicographic breadth-first order as an elimination
/// order; a failure yields a certified chordless cycle.  O(n + m).
ChordalityResult is_chordal(const Graph& g);

struct LexdfsOptions {
  /// Skip the chordality check.  The result is meaningless on graphs that are
  /// not chordal; callers own that risk.
  bool assume_chordal = false;
  /// Forwarded to the ordering pass.
  const VertexOrder* beta_override = nullptr;
};

/// Lexicographic depth-first search of a chordal graph with ties broken
/// toward the rightmost candidate in `rho`, in overall O(n + m): a
/// lexicographic breadth-first pass, its last-neighbor tree, and the ordering
/// pass driven by that tree.
///
/// `rho` must end at `start`.  Optional out parameters expose the internal
/// tree and the two refinement traces.
VertexOrder lexdfs_plus_chordal(const Graph& g, int start, const VertexOrder& rho,
                                const LexdfsOptions& options = {},
                                RootedSpanningTree* out_tree = nullptr,
                                OrderingTrace* ordering_trace = nullptr,
                                RefinementTrace* lexbfs_trace = nullptr);

/// Plain lexicographic depth-first search from `start` (canonical tiebreak:
/// ids ascending, start moved last).
VertexOrder lexdfs_chordal(const Graph& g, int start, const LexdfsOptions& options = {});

/// True iff `order` is a lexicographic depth-first order of chordal `g`,
/// decided by replaying the search against the reversed order.
/// Throws NotChordal on other graphs; the slow checker covers those.
bool verify_lexdfs_order(const Graph& g, const VertexOrder& order);

/// True iff `tree` is the last-neighbor tree of some lexicographic
/// depth-first order of chordal `g`.  Throws NotChordal, NotASpanningTree.
bool verify_lexdfs_ltree(const Graph& g, const RootedSpanningTree& tree);

}  // namespace lexsearch
