#include "lexsearch/oracle.hpp"

#include <algorithm>

#include "lexsearch/error.hpp"

namespace lexsearch {

namespace {

void require_start(const Graph& g, int start) {
  if (start < 0 || start >= g.vertex_count())
    fail(ErrorKind::StartNotInGraph, "vertex id " + std::to_string(start));
}

void require_full_order(const Graph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count())
    fail(ErrorKind::InvalidOrder, "order covers " + std::to_string(order.size()) + " of " +
                                      std::to_string(g.vertex_count()) + " vertices");
}

// Labels are stored in push_back order.  The depth-first discipline prepends
// ever larger indices, so its logical reading is back to front; the
// breadth-first one appends ever smaller values and reads front to back.
struct Labels {
  explicit Labels(int n, bool read_backwards)
      : store(n), read_backwards(read_backwards) {}

  // <0 smaller, 0 equal, >0 larger under lexicographic comparison where a
  // proper prefix is smaller.
  int compare(int a, int b) const {
    const auto& x = store[a];
    const auto& y = store[b];
    std::size_t len = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < len; ++i) {
      int xv = read_backwards ? x[x.size() - 1 - i] : x[i];
      int yv = read_backwards ? y[y.size() - 1 - i] : y[i];
      if (xv != yv) return xv < yv ? -1 : 1;
    }
    if (x.size() == y.size()) return 0;
    return x.size() < y.size() ? -1 : 1;
  }

  std::vector<std::vector<int>> store;
  bool read_backwards;
};

VertexOrder naive_lex_search(const Graph& g, const VertexOrder& tiebreak, bool depth_first) {
  require_full_order(g, tiebreak);
  const int n = g.vertex_count();
  Labels labels(n, depth_first);
  std::vector<char> visited(n, 0);
  std::vector<int> seq;
  seq.reserve(n);
  for (int i = 1; i <= n; ++i) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == -1) {
        best = v;
        continue;
      }
      int cmp = labels.compare(v, best);
      if (cmp > 0 || (cmp == 0 && tiebreak.position_of(v) > tiebreak.position_of(best)))
        best = v;
    }
    visited[best] = 1;
    seq.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[w]) labels.store[w].push_back(depth_first ? i : n - i);
  }
  return VertexOrder::of_sequence(std::move(seq));
}

/// Adjacency matrix plus per-vertex neighbor positions sorted ascending.
struct CheckIndex {
  CheckIndex(const Graph& g, const VertexOrder& order) {
    const int n = g.vertex_count();
    matrix.assign(static_cast<std::size_t>(n) * n, 0);
    nbr_pos.resize(n);
    for (int v = 0; v < n; ++v) {
      for (int w : g.neighbors(v)) {
        matrix[static_cast<std::size_t>(v) * n + w] = 1;
        nbr_pos[v].push_back(order.position_of(w));
      }
      std::sort(nbr_pos[v].begin(), nbr_pos[v].end());
    }
    this->n = n;
  }

  bool edge(int u, int v) const { return matrix[static_cast<std::size_t>(u) * n + v]; }

  std::vector<char> matrix;
  std::vector<std::vector<int>> nbr_pos;
  int n = 0;
};

}  // namespace

VertexOrder naive_lexdfs_plus(const Graph& g, const VertexOrder& tiebreak) {
  return naive_lex_search(g, tiebreak, /*depth_first=*/true);
}

VertexOrder naive_lexbfs_plus(const Graph& g, const VertexOrder& tiebreak) {
  return naive_lex_search(g, tiebreak, /*depth_first=*/false);
}

bool check_dfs_order(const Graph& g, const VertexOrder& order) {
  require_full_order(g, order);
  const int n = g.vertex_count();
  CheckIndex index(g, order);
  for (int c = 0; c < n; ++c) {
    int pc = order.position_of(c);
    for (int a : g.neighbors(c)) {
      int pa = order.position_of(a);
      if (pa >= pc) continue;
      for (int pb = pa + 1; pb < pc; ++pb) {
        int b = order.at(pb);
        if (index.edge(a, b)) continue;
        // Need d with pa < pos(d) < pb and edge db.
        const auto& positions = index.nbr_pos[b];
        auto it = std::upper_bound(positions.begin(), positions.end(), pa);
        if (it == positions.end() || *it >= pb) return false;
      }
    }
  }
  return true;
}

bool check_lexdfs_order(const Graph& g, const VertexOrder& order) {
  require_full_order(g, order);
  const int n = g.vertex_count();
  CheckIndex index(g, order);
  for (int c = 0; c < n; ++c) {
    int pc = order.position_of(c);
    for (int a : g.neighbors(c)) {
      int pa = order.position_of(a);
      if (pa >= pc) continue;
      for (int pb = pa + 1; pb < pc; ++pb) {
        int b = order.at(pb);
        if (index.edge(a, b)) continue;
        // Need d with pa < pos(d) < pb, edge db, no edge dc.
        bool found = false;
        for (int pd : index.nbr_pos[b]) {
          if (pd <= pa) continue;
          if (pd >= pb) break;
          if (!index.edge(order.at(pd), c)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

namespace {

struct Enumerator {
  const Graph& g;
  Labels labels;
  bool depth_first;
  std::vector<char> visited;
  std::vector<int> seq;
  std::vector<VertexOrder> found;

  Enumerator(const Graph& g, bool depth_first)
      : g(g), labels(g.vertex_count(), depth_first), depth_first(depth_first),
        visited(g.vertex_count(), 0) {}

  void expand(int v) {
    const int n = g.vertex_count();
    int i = static_cast<int>(seq.size()) + 1;
    visited[v] = 1;
    seq.push_back(v);
    std::vector<int> updated;
    for (int w : g.neighbors(v))
      if (!visited[w]) {
        labels.store[w].push_back(depth_first ? i : n - i);
        updated.push_back(w);
      }

    if (static_cast<int>(seq.size()) == n) {
      found.push_back(VertexOrder::of_sequence(seq));
    } else {
      // Branch over every vertex whose label is lexicographically largest.
      int best = -1;
      for (int u = 0; u < n; ++u)
        if (!visited[u] && (best == -1 || labels.compare(u, best) > 0)) best = u;
      for (int u = 0; u < n; ++u)
        if (!visited[u] && labels.compare(u, best) == 0) expand(u);
    }

    for (int w : updated) labels.store[w].pop_back();
    seq.pop_back();
    visited[v] = 0;
  }
};

std::vector<VertexOrder> enumerate_lex_orders(const Graph& g, int start, int max_n,
                                              bool depth_first) {
  require_start(g, start);
  if (g.vertex_count() > max_n)
    fail(ErrorKind::GraphTooLarge, std::to_string(g.vertex_count()) + " vertices, bound " +
                                       std::to_string(max_n));
  Enumerator enumerator(g, depth_first);
  enumerator.expand(start);
  return std::move(enumerator.found);
}

}  // namespace

std::vector<VertexOrder> enumerate_lexdfs_orders(const Graph& g, int start, int max_n) {
  return enumerate_lex_orders(g, start, max_n, /*depth_first=*/true);
}

std::vector<VertexOrder> enumerate_lexbfs_orders(const Graph& g, int start, int max_n) {
  return enumerate_lex_orders(g, start, max_n, /*depth_first=*/false);
}

}  // namespace lexsearch
