#include "lexsearch/basic_search.hpp"

#include <queue>

#include "lexsearch/error.hpp"

namespace lexsearch {

namespace {

void require_start(const Graph& g, int start) {
  if (start < 0 || start >= g.vertex_count())
    fail(ErrorKind::StartNotInGraph, "vertex id " + std::to_string(start));
}

void require_full_order(const Graph& g, const VertexOrder& order, const char* what) {
  if (order.size() != g.vertex_count())
    fail(ErrorKind::InvalidOrder, std::string(what) + " covers " + std::to_string(order.size()) +
                                      " of " + std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

PositionalAdjacency::PositionalAdjacency(const Graph& g, const VertexOrder& order) {
  const int n = g.vertex_count();
  require_full_order(g, order, "order");
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + g.degree(v);
  flat_ = RawBlock<int>(offsets_[n]);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (int p = 0; p < n; ++p) {
    int u = order.at(p);
    for (int w : g.neighbors(u)) flat_[cursor[w]++] = u;
  }
}

PositionalAdjacency adjacency_by_position(const Graph& g, const VertexOrder& order) {
  return PositionalAdjacency(g, order);
}

VertexOrder dfs_plus(const Graph& g, int start, const VertexOrder& tiebreak) {
  require_start(g, start);
  require_full_order(g, tiebreak, "tiebreak");

  auto sorted = adjacency_by_position(g, tiebreak);
  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<int> stack{start};
  std::vector<int> seq;
  seq.reserve(g.vertex_count());
  // Neighbors are pushed in ascending tiebreak position, so the top of the
  // stack is always the rightmost pending candidate of the deepest vertex.
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (visited[v]) continue;
    visited[v] = 1;
    seq.push_back(v);
    for (int w : sorted[v])
      if (!visited[w]) stack.push_back(w);
  }
  return VertexOrder::of_sequence(std::move(seq));
}

VertexOrder bfs_order(const Graph& g, int start) {
  require_start(g, start);
  std::vector<char> visited(g.vertex_count(), 0);
  std::queue<int> queue;
  std::vector<int> seq;
  seq.reserve(g.vertex_count());
  queue.push(start);
  visited[start] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    seq.push_back(v);
    for (int w : g.neighbors(v))
      if (!visited[w]) {
        visited[w] = 1;
        queue.push(w);
      }
  }
  return VertexOrder::of_sequence(std::move(seq));
}

}  // namespace lexsearch
