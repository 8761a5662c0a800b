#pragma once

#include <span>
#include <vector>

namespace lexsearch {

/// Permutation of the vertex ids 0..n-1, kept together with its inverse so
/// both "what is at position i" and "where is vertex v" are O(1).
class VertexOrder {
 public:
  VertexOrder() = default;

  /// Validates that `seq` is a permutation of 0..n-1.
  static VertexOrder of_sequence(std::vector<int> seq);

  int size() const { return static_cast<int>(seq_.size()); }
  int at(int position) const { return seq_[position]; }
  int position_of(int v) const { return pos_[v]; }
  int first() const { return seq_.front(); }
  int last() const { return seq_.back(); }
  std::span<const int> sequence() const { return seq_; }

  VertexOrder reversed() const;

  bool operator==(const VertexOrder& other) const { return seq_ == other.seq_; }

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;
};

}  // namespace lexsearch
