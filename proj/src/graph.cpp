#include "lexsearch/graph.hpp"

#include <queue>

#include "lexsearch/error.hpp"

namespace lexsearch {

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& isolated) {
  if (edges.empty() && isolated.empty()) fail(ErrorKind::EmptyInput, "no edges given");

  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::string& token) {
    auto [it, fresh] = ids.try_emplace(token, static_cast<int>(names.size()));
    if (fresh) names.push_back(token);
    return it->second;
  };

  std::vector<std::pair<int, int>> edge_ids;
  edge_ids.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) fail(ErrorKind::SelfLoop, "edge " + u + " " + v);
    int uid = intern(u);  // sequenced before intern(v): ids follow reading order
    int vid = intern(v);
    edge_ids.emplace_back(uid, vid);
  }
  for (const auto& token : isolated) intern(token);

  const int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> adjacency(n);
  for (auto [u, v] : edge_ids) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return build(std::move(adjacency), std::move(names));
}

Graph Graph::from_adjacency(const std::vector<std::vector<int>>& adjacency,
                            std::vector<std::string> names) {
  if (adjacency.empty()) fail(ErrorKind::EmptyInput, "no vertices given");
  const int n = static_cast<int>(adjacency.size());
  if (names.empty()) {
    names.reserve(n);
    for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
  }
  if (static_cast<int>(names.size()) != n)
    fail(ErrorKind::InvalidParameters, "name count does not match vertex count");
  return build(adjacency, std::move(names));
}

Graph Graph::build(std::vector<std::vector<int>> adjacency, std::vector<std::string> names) {
  const int n = static_cast<int>(adjacency.size());

  // Stable per-vertex dedup: keep the first occurrence of each neighbor.
  std::vector<int> last_seen(n, -1);
  for (int u = 0; u < n; ++u) {
    auto& nbrs = adjacency[u];
    std::size_t kept = 0;
    for (int w : nbrs) {
      if (w < 0 || w >= n) fail(ErrorKind::InvalidParameters, "neighbor id out of range");
      if (w == u) fail(ErrorKind::SelfLoop, "edge " + names[u] + " " + names[u]);
      if (last_seen[w] != u) {
        last_seen[w] = u;
        nbrs[kept++] = w;
      }
    }
    nbrs.resize(kept);
  }

  Graph g;
  g.names_ = std::move(names);
  for (int v = 0; v < n; ++v) g.ids_.emplace(g.names_[v], v);
  if (static_cast<int>(g.ids_.size()) != n)
    fail(ErrorKind::InvalidParameters, "duplicate vertex name");

  g.offsets_.assign(n + 1, 0);
  std::size_t total = 0;
  for (int v = 0; v < n; ++v) {
    g.offsets_[v] = static_cast<int>(total);
    total += adjacency[v].size();
  }
  g.offsets_[n] = static_cast<int>(total);
  g.flat_ = RawBlock<int>(total);
  std::size_t filled = 0;
  for (int v = 0; v < n; ++v)
    for (int w : adjacency[v]) g.flat_[filled++] = w;
  g.edge_count_ = static_cast<int>(total / 2);

  g.check_invariants();
  return g;
}

bool Graph::has_edge(int u, int v) const {
  for (int w : neighbors(u))
    if (w == v) return true;
  return false;
}

std::optional<int> Graph::id_of(const std::string& token) const {
  auto it = ids_.find(token);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void Graph::check_invariants() const {
  const int n = vertex_count();
  std::size_t total = 0;
  std::vector<int> last_seen(n, -1);
  for (int u = 0; u < n; ++u) {
    for (int w : neighbors(u)) {
      if (w == u) fail(ErrorKind::SelfLoop, "edge " + name(u) + " " + name(u));
      if (last_seen[w] == u)
        fail(ErrorKind::InvalidParameters, "duplicate edge " + name(u) + " " + name(w));
      last_seen[w] = u;
      if (!has_edge(w, u))
        fail(ErrorKind::InvalidParameters, "asymmetric edge " + name(u) + " " + name(w));
      ++total;
    }
  }
  if (total != 2 * static_cast<std::size_t>(edge_count_))
    fail(ErrorKind::InvalidParameters, "degree sum does not match edge count");

  // Connectivity: BFS from vertex 0 must reach everything.
  std::vector<char> reached(n, 0);
  std::queue<int> queue;
  queue.push(0);
  reached[0] = 1;
  int seen = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int w : neighbors(u))
      if (!reached[w]) {
        reached[w] = 1;
        ++seen;
        queue.push(w);
      }
  }
  if (seen != n)
    for (int v = 0; v < n; ++v)
      if (!reached[v]) fail(ErrorKind::Disconnected, "vertex " + name(v) + " unreachable");
}

}  // namespace lexsearch
