#pragma once

#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/order.hpp"

namespace lexsearch {

/// Slow but transparent counterparts of the partition-refinement searches.
/// They run the textbook label discipline directly: a depth-first search
/// prepends the visit index to each unvisited neighbor's label, a
/// breadth-first one appends n - index, and the next vertex is always one
/// with the lexicographically largest label.  O(n^2) label scans per run.

/// Ties toward the rightmost candidate in `tiebreak`; starts at its last
/// vertex.
VertexOrder naive_lexdfs_plus(const Graph& g, const VertexOrder& tiebreak);
VertexOrder naive_lexbfs_plus(const Graph& g, const VertexOrder& tiebreak);

/// Four-point test for depth-first orders: every a < b < c with edge ac and
/// no edge ab needs some d with a < d < b and edge db.
bool check_dfs_order(const Graph& g, const VertexOrder& order);

/// Same with the stronger witness: some such d with edge db and no edge dc.
/// Exactly the lexicographic depth-first orders pass, on any graph.
bool check_lexdfs_order(const Graph& g, const VertexOrder& order);

/// All lexicographic depth-first (resp. breadth-first) orders of g that start
/// at `start`, found by branching over every largest-label choice.  Guarded by
/// `max_n` (GraphTooLarge beyond it); output order is discovery order.
std::vector<VertexOrder> enumerate_lexdfs_orders(const Graph& g, int start, int max_n = 10);
std::vector<VertexOrder> enumerate_lexbfs_orders(const Graph& g, int start, int max_n = 10);

}  // namespace lexsearch
