#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lexsearch {

/// Ordered partition of a vertex set, the workhorse behind the lexicographic
/// searches.  Classes form a sequence; refining with a subset S splits every
/// class Q into (Q cap S, Q minus S) in place, hit part first, classes fully
/// inside or disjoint from S untouched.
///
/// The constructor sequence fixes a global rank.  Intra-class order always
/// follows that rank: refine sorts its subset by rank before moving anything,
/// so split-off groups inherit the order their class had.  The reorder ops
/// (move_to_back_of_class, prepend_singleton) break this agreement and must
/// only be used once refining is over.
///
/// All mutations are O(1) per moved vertex; refine is O(|subset|) amortized
/// when the subset already arrives rank-sorted.
class OrderedPartition {
 public:
  explicit OrderedPartition(std::span<const int> ground_sequence);

  int size() const { return present_count_; }
  int class_count() const { return class_count_; }
  bool contains(int v) const { return v >= 0 && v < n_ && vnode_[v].cls != -1; }

  /// First vertex of the first class.
  int front_vertex() const;

  /// Splits every class touched by `subset`; throws VertexNotInGroundSet for
  /// elements that are out of range or no longer present.
  void refine(std::span<const int> subset);

  /// Removes v from its class, dropping the class when it empties.
  void erase(int v);

  /// New front class {v}; v must be absent.
  void prepend_singleton(int v);

  void move_to_back_of_class(int v);

  std::vector<std::vector<int>> classes() const;
  std::vector<int> flatten() const;

  /// Flatten with every class's members reordered to the sequence they hold
  /// in `sequence` walked back to front.  One classification walk plus one
  /// bucket pass, cheaper than reordering the lists vertex by vertex.
  std::vector<int> flatten_back_to_front(std::span<const int> sequence) const;

  /// Vertices relocated by refine since construction.
  std::uint64_t refine_moves() const { return refine_moves_; }

 private:
  // Everything refine reads per vertex sits in one node — list links, owning
  // class (-1 when absent), ground rank, duplicate-detection stamp — so a
  // subset member costs one cache line, not one per array.
  struct VertexNode {
    int prev, next, cls, rank;
    std::uint32_t stamp;
  };
  struct ClassNode {
    int head, tail, prev, next, split;
  };

  int allocate_class();
  void link_class_before(int fresh, int anchor);
  void unlink_class(int c);
  void detach_vertex(int v);
  void append_vertex(int v, int c);

  int n_ = 0;
  int present_count_ = 0;
  int class_count_ = 0;
  int first_class_ = -1;
  std::uint64_t refine_moves_ = 0;
  std::uint32_t epoch_ = 0;

  // Per vertex.
  std::vector<VertexNode> vnode_;

  // Per class slot; freed slots are recycled.
  std::vector<ClassNode> cnode_;
  std::vector<int> free_slots_;

  // Refine scratch, kept to avoid reallocating once per call.
  std::vector<int> scratch_sorted_, scratch_touched_;
};

}  // namespace lexsearch
