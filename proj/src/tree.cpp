#include "lexsearch/tree.hpp"

#include <queue>

#include "lexsearch/error.hpp"

namespace lexsearch {

bool tree_equal(const RootedSpanningTree& a, const RootedSpanningTree& b) {
  // Orientation away from the root is unique, so equal roots and equal edge
  // sets reduce to equal parent arrays.
  return a.root == b.root && a.parent == b.parent;
}

std::vector<std::vector<int>> children_lists(const RootedSpanningTree& tree) {
  std::vector<std::vector<int>> children(tree.size());
  for (int v = 0; v < tree.size(); ++v)
    if (v != tree.root) children[tree.parent[v]].push_back(v);
  return children;
}

void validate_spanning_tree(const Graph& g, const RootedSpanningTree& tree) {
  const int n = g.vertex_count();
  if (tree.size() != n)
    fail(ErrorKind::NotASpanningTree, "tree has " + std::to_string(tree.size()) + " of " +
                                          std::to_string(n) + " vertices");
  if (tree.root < 0 || tree.root >= n || tree.parent[tree.root] != -1)
    fail(ErrorKind::NotASpanningTree, "bad root");
  for (int v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    int p = tree.parent[v];
    if (p < 0 || p >= n) fail(ErrorKind::NotASpanningTree, "vertex " + g.name(v) + " has no parent");
    if (!g.has_edge(v, p))
      fail(ErrorKind::NotASpanningTree, "edge " + g.name(v) + " " + g.name(p) + " not in graph");
  }
  // Every parent chain must reach the root, else some cycle is afloat.
  std::vector<char> ok(n, 0);
  ok[tree.root] = 1;
  std::vector<int> path;
  for (int v = 0; v < n; ++v) {
    int u = v;
    path.clear();
    while (!ok[u]) {
      path.push_back(u);
      u = tree.parent[u];
      if (static_cast<int>(path.size()) > n)
        fail(ErrorKind::NotASpanningTree, "parent chain of " + g.name(v) + " cycles");
    }
    for (int w : path) ok[w] = 1;
  }
}

namespace {

RootedSpanningTree earlier_neighbor_tree(const Graph& g, const VertexOrder& order, bool last) {
  const int n = g.vertex_count();
  if (order.size() != n)
    fail(ErrorKind::InvalidOrder, "order covers " + std::to_string(order.size()) + " of " +
                                      std::to_string(n) + " vertices");
  RootedSpanningTree tree;
  tree.root = order.first();
  tree.parent.assign(n, -1);
  for (int i = 1; i < n; ++i) {
    int v = order.at(i);
    int best = -1;
    int best_pos = -1;
    for (int w : g.neighbors(v)) {
      int p = order.position_of(w);
      if (p >= i) continue;
      if (best == -1 || (last ? p > best_pos : p < best_pos)) {
        best = w;
        best_pos = p;
      }
    }
    if (best == -1)
      fail(ErrorKind::NotASearchOrder, "vertex " + g.name(v) + " has no earlier neighbor");
    tree.parent[v] = best;
  }
  return tree;
}

}  // namespace

RootedSpanningTree f_tree(const Graph& g, const VertexOrder& order) {
  return earlier_neighbor_tree(g, order, /*last=*/false);
}

RootedSpanningTree l_tree(const Graph& g, const VertexOrder& order) {
  return earlier_neighbor_tree(g, order, /*last=*/true);
}

AncestorIndex::AncestorIndex(const RootedSpanningTree& tree) {
  const int n = tree.size();
  entry_.assign(n, 0);
  exit_.assign(n, 0);
  auto children = children_lists(tree);
  int clock = 0;
  // Two stack entries per vertex: first visit stamps entry, second stamps exit.
  std::vector<std::pair<int, bool>> stack{{tree.root, false}};
  while (!stack.empty()) {
    auto [v, leaving] = stack.back();
    stack.pop_back();
    if (leaving) {
      exit_[v] = clock++;
      continue;
    }
    entry_[v] = clock++;
    stack.emplace_back(v, true);
    for (int c : children[v]) stack.emplace_back(c, false);
  }
}

bool is_dfs_ltree(const Graph& g, const RootedSpanningTree& tree) {
  validate_spanning_tree(g, tree);
  AncestorIndex index(tree);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w : g.neighbors(u)) {
      if (u > w) continue;
      if (!index.is_ancestor(u, w) && !index.is_ancestor(w, u)) return false;
    }
  return true;
}

VertexOrder tree_dfs_plus(const RootedSpanningTree& tree, const VertexOrder& tiebreak) {
  const int n = tree.size();
  if (tiebreak.size() != n)
    fail(ErrorKind::InvalidOrder, "tiebreak covers " + std::to_string(tiebreak.size()) + " of " +
                                      std::to_string(n) + " vertices");
  // Children in ascending tiebreak position, one counting pass into a flat
  // block: offset[v]..offset[v+1] holds v's children.
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v)
    if (v != tree.root) ++offset[tree.parent[v] + 1];
  for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<int> child(n - 1);
  std::vector<int> cursor(offset.begin(), offset.end() - 1);
  for (int p = 0; p < n; ++p) {
    int v = tiebreak.at(p);
    if (v != tree.root) child[cursor[tree.parent[v]]++] = v;
  }
  std::vector<int> stack{tree.root};
  std::vector<int> seq;
  seq.reserve(n);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    seq.push_back(v);
    for (int i = offset[v]; i < offset[v + 1]; ++i) stack.push_back(child[i]);
  }
  return VertexOrder::of_sequence(std::move(seq));
}

VertexOrder tree_bfs_order(const RootedSpanningTree& tree) {
  const int n = tree.size();
  // Children in ascending id, flat block as in tree_dfs_plus.
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v)
    if (v != tree.root) ++offset[tree.parent[v] + 1];
  for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<int> child(n - 1);
  std::vector<int> cursor(offset.begin(), offset.end() - 1);
  for (int v = 0; v < n; ++v)
    if (v != tree.root) child[cursor[tree.parent[v]]++] = v;
  // seq doubles as the queue: the cursor chases the tail.
  std::vector<int> seq;
  seq.reserve(n);
  seq.push_back(tree.root);
  for (std::size_t head = 0; head < seq.size(); ++head) {
    int v = seq[head];
    for (int i = offset[v]; i < offset[v + 1]; ++i) seq.push_back(child[i]);
  }
  return VertexOrder::of_sequence(std::move(seq));
}

}  // namespace lexsearch
