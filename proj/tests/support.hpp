#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lexsearch/error.hpp"
#include "lexsearch/graph.hpp"
#include "lexsearch/io.hpp"
#include "lexsearch/order.hpp"

namespace testsupport {

using lexsearch::Graph;
using lexsearch::VertexOrder;

/// Runs fn expecting a lexsearch::Error; nullopt when nothing was thrown.
template <typename Fn>
std::optional<lexsearch::ErrorKind> error_kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const lexsearch::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline VertexOrder random_order(int n, std::mt19937_64& engine) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), engine);
  return VertexOrder::of_sequence(std::move(seq));
}

/// Random permutation with `v` moved to the back, ready as a ⁺-tiebreak.
inline VertexOrder random_order_ending_at(int n, int v, std::mt19937_64& engine) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), engine);
  auto it = std::find(seq.begin(), seq.end(), v);
  std::swap(*it, seq.back());
  return VertexOrder::of_sequence(std::move(seq));
}

/// The 11-vertex worked example used across the suite.
inline Graph example_graph() {
  return lexsearch::graph_from_text(
      "s a\ns b\ns c\ns d\na b\na c\nb c\nc d\nc e\nc f\nc g\nc h\nd h\ne g\nf g\ng h\ng i\ng j\n"
      "h j\ni j\n");
}

inline VertexOrder order_of(const Graph& g, const std::string& tokens) {
  return lexsearch::order_from_text(tokens, g);
}

inline std::string tokens_of(const Graph& g, const VertexOrder& order) {
  return lexsearch::order_to_text(g, order);
}

inline std::vector<int> ids_of(const Graph& g, const std::vector<std::string>& tokens) {
  std::vector<int> ids;
  for (const auto& token : tokens) ids.push_back(*g.id_of(token));
  return ids;
}

inline std::string class_text(const Graph& g, const std::vector<std::vector<int>>& classes) {
  return lexsearch::partition_to_text(g, {}, classes);
}

/// Swap positions i and i+1.
inline VertexOrder adjacent_swap(const VertexOrder& order, int i) {
  std::vector<int> seq(order.sequence().begin(), order.sequence().end());
  std::swap(seq[i], seq[i + 1]);
  return VertexOrder::of_sequence(std::move(seq));
}

/// Connected G(n, p) sample; keeps drawing until the mask is connected.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& engine) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<std::vector<int>> adjacency(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(engine) < p) {
          adjacency[u].push_back(v);
          adjacency[v].push_back(u);
        }
    std::vector<char> reached(n, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int seen = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adjacency[u])
        if (!reached[w]) {
          reached[w] = 1;
          ++seen;
          stack.push_back(w);
        }
    }
    if (seen == n) return Graph::from_adjacency(adjacency);
  }
}

/// Induced cycle of length >= 4 found by scanning all vertex subsets, or empty
/// when the graph is chordal.  Exponential; keep n small.
inline std::vector<int> brute_force_chordless_cycle(const Graph& g) {
  const int n = g.vertex_count();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 4) continue;
    // Induced subgraph must be 2-regular and connected: then it is a cycle.
    bool regular = true;
    int inside = -1;
    for (int v = 0; v < n && regular; ++v) {
      if (!(mask >> v & 1)) continue;
      inside = v;
      int deg = 0;
      for (int w : g.neighbors(v))
        if (mask >> w & 1) ++deg;
      regular = deg == 2;
    }
    if (!regular) continue;
    std::vector<char> reached(n, 0);
    std::vector<int> stack{inside};
    reached[inside] = 1;
    int seen = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if ((mask >> w & 1) && !reached[w]) {
          reached[w] = 1;
          ++seen;
          stack.push_back(w);
        }
    }
    if (seen != __builtin_popcount(mask)) continue;
    // Walk the cycle into order.
    std::vector<int> cycle{inside};
    int prev = -1, cur = inside;
    while (true) {
      int next = -1;
      for (int w : g.neighbors(cur))
        if ((mask >> w & 1) && w != prev) {
          next = w;
          break;
        }
      if (next == inside) break;
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    return cycle;
  }
  return {};
}

/// Calls fn(adjacency) for every connected graph on vertex ids 0..n-1.
template <typename Fn>
void for_each_connected_graph(int n, Fn&& fn) {
  const int slots = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slot_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slot_edges.emplace_back(u, v);
  for (unsigned mask = 0; mask < (1u << slots); ++mask) {
    std::vector<std::vector<int>> adjacency(n);
    for (int s = 0; s < slots; ++s)
      if (mask >> s & 1) {
        auto [u, v] = slot_edges[s];
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
      }
    std::vector<char> reached(n, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int seen = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adjacency[u])
        if (!reached[w]) {
          reached[w] = 1;
          ++seen;
          stack.push_back(w);
        }
    }
    if (seen == n) fn(adjacency);
  }
}

}  // namespace testsupport
