#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexsearch/raw_block.hpp"

namespace lexsearch {

/// Simple undirected connected graph, immutable once built.
///
/// Vertices are dense ids 0..n-1 with an external token name each.  Adjacency
/// is stored in compressed form, neighbors of a vertex in input order.
/// Algorithms that need a specific neighbor order re-sort locally.
class Graph {
 public:
  /// Builds from named edges; ids are assigned by first occurrence.  Duplicate
  /// edges collapse, first occurrence wins the adjacency slot.  Extra tokens in
  /// `isolated` declare edge-free vertices (only valid for the singleton graph,
  /// anything else is disconnected).
  static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& isolated = {});

  /// Builds from adjacency lists over ids 0..n-1; names default to decimal ids.
  static Graph from_adjacency(const std::vector<std::vector<int>>& adjacency,
                              std::vector<std::string> names = {});

  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  int edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const {
    return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  /// O(deg(u)) scan; checkers that need many queries build their own matrix.
  bool has_edge(int u, int v) const;

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> id_of(const std::string& token) const;

  /// Re-checks the construction invariants; throws on violation.
  void check_invariants() const;

 private:
  Graph() = default;
  static Graph build(std::vector<std::vector<int>> adjacency, std::vector<std::string> names);

  std::vector<int> offsets_;
  RawBlock<int> flat_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
  int edge_count_ = 0;
};

}  // namespace lexsearch
