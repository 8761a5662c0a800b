#pragma once

#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/order.hpp"

namespace lexsearch {

/// Spanning tree given by parent pointers; parent[root] == -1.
struct RootedSpanningTree {
  int root = -1;
  std::vector<int> parent;

  int size() const { return static_cast<int>(parent.size()); }
};

/// Same root and same edge set.
bool tree_equal(const RootedSpanningTree& a, const RootedSpanningTree& b);

/// Children lists indexed by vertex, each sorted by child id.
std::vector<std::vector<int>> children_lists(const RootedSpanningTree& tree);

/// Validates shape (single root, no cycles) and that every tree edge is a
/// graph edge; throws NotASpanningTree otherwise.
void validate_spanning_tree(const Graph& g, const RootedSpanningTree& tree);

/// First-in-order earlier neighbor as parent; root is order.first().
/// Throws NotASearchOrder when some later vertex has no earlier neighbor.
RootedSpanningTree f_tree(const Graph& g, const VertexOrder& order);

/// Last-in-order earlier neighbor as parent.
RootedSpanningTree l_tree(const Graph& g, const VertexOrder& order);

/// Constant-time ancestor queries from one Euler tour of the tree.
class AncestorIndex {
 public:
  explicit AncestorIndex(const RootedSpanningTree& tree);

  /// True when u lies on the root path of v (u == v included).
  bool is_ancestor(int u, int v) const {
    return entry_[u] <= entry_[v] && exit_[v] <= exit_[u];
  }

 private:
  std::vector<int> entry_;
  std::vector<int> exit_;
};

/// True iff every graph edge joins an ancestor/descendant pair of `tree`,
/// which characterizes the trees a depth-first search can produce.
bool is_dfs_ltree(const Graph& g, const RootedSpanningTree& tree);

/// Depth-first traversal of the tree from its root; among the unvisited
/// children of the deepest eligible vertex the rightmost in `tiebreak` wins.
VertexOrder tree_dfs_plus(const RootedSpanningTree& tree, const VertexOrder& tiebreak);

/// Breadth-first traversal of the tree from its root, children in id order.
VertexOrder tree_bfs_order(const RootedSpanningTree& tree);

}  // namespace lexsearch
