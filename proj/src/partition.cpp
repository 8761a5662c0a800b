#include "lexsearch/partition.hpp"

#include <algorithm>

#include "lexsearch/error.hpp"

namespace lexsearch {

namespace {

inline void prefetch(const void* p) {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_prefetch(p);
#else
  (void)p;
#endif
}

}  // namespace

OrderedPartition::OrderedPartition(std::span<const int> ground_sequence) {
  n_ = static_cast<int>(ground_sequence.size());
  if (n_ == 0) fail(ErrorKind::InvalidParameters, "empty ground sequence");
  vnode_.assign(n_, {-1, -1, -1, -1, 0});
  for (int i = 0; i < n_; ++i) {
    int v = ground_sequence[i];
    if (v < 0 || v >= n_ || vnode_[v].rank != -1)
      fail(ErrorKind::InvalidParameters, "ground sequence is not a permutation");
    vnode_[v].rank = i;
  }
  present_count_ = n_;

  int c = allocate_class();
  cnode_[c].prev = cnode_[c].next = -1;
  first_class_ = c;
  class_count_ = 1;
  for (int v : ground_sequence) append_vertex(v, c);
}

int OrderedPartition::allocate_class() {
  int c;
  if (!free_slots_.empty()) {
    c = free_slots_.back();
    free_slots_.pop_back();
  } else {
    c = static_cast<int>(cnode_.size());
    cnode_.push_back({-1, -1, -1, -1, -1});
  }
  cnode_[c].head = cnode_[c].tail = -1;
  cnode_[c].split = -1;
  return c;
}

void OrderedPartition::link_class_before(int fresh, int anchor) {
  int before = cnode_[anchor].prev;
  cnode_[fresh].prev = before;
  cnode_[fresh].next = anchor;
  cnode_[anchor].prev = fresh;
  if (before == -1)
    first_class_ = fresh;
  else
    cnode_[before].next = fresh;
  ++class_count_;
}

void OrderedPartition::unlink_class(int c) {
  int before = cnode_[c].prev;
  int after = cnode_[c].next;
  if (before == -1)
    first_class_ = after;
  else
    cnode_[before].next = after;
  if (after != -1) cnode_[after].prev = before;
  --class_count_;
  free_slots_.push_back(c);
}

void OrderedPartition::detach_vertex(int v) {
  int c = vnode_[v].cls;
  int before = vnode_[v].prev;
  int after = vnode_[v].next;
  if (before == -1)
    cnode_[c].head = after;
  else
    vnode_[before].next = after;
  if (after == -1)
    cnode_[c].tail = before;
  else
    vnode_[after].prev = before;
  vnode_[v].cls = -1;
}

void OrderedPartition::append_vertex(int v, int c) {
  int tail = cnode_[c].tail;
  vnode_[v].prev = tail;
  vnode_[v].next = -1;
  if (tail == -1)
    cnode_[c].head = v;
  else
    vnode_[tail].next = v;
  cnode_[c].tail = v;
  vnode_[v].cls = c;
}

int OrderedPartition::front_vertex() const {
  if (first_class_ == -1) fail(ErrorKind::InvalidParameters, "partition is empty");
  return cnode_[first_class_].head;
}

void OrderedPartition::refine(std::span<const int> subset) {
  ++epoch_;
  bool in_rank_order = true;
  int prev_rank = -1;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i + 8 < subset.size()) {
      int ahead = subset[i + 8];
      if (ahead >= 0 && ahead < n_) prefetch(&vnode_[ahead]);
    }
    int v = subset[i];
    if (!contains(v)) fail(ErrorKind::VertexNotInGroundSet, "vertex id " + std::to_string(v));
    if (vnode_[v].stamp == epoch_)
      fail(ErrorKind::InvalidParameters, "duplicate vertex id " + std::to_string(v) + " in subset");
    vnode_[v].stamp = epoch_;
    in_rank_order &= prev_rank < vnode_[v].rank;
    prev_rank = vnode_[v].rank;
  }

  if (!in_rank_order) {
    scratch_sorted_.assign(subset.begin(), subset.end());
    std::sort(scratch_sorted_.begin(), scratch_sorted_.end(),
              [&](int a, int b) { return vnode_[a].rank < vnode_[b].rank; });
    subset = scratch_sorted_;
  }

  std::vector<int>& touched = scratch_touched_;
  touched.clear();
  for (int v : subset) {
    int c = vnode_[v].cls;
    if (cnode_[c].split == -1) {
      int fresh = allocate_class();
      link_class_before(fresh, c);
      cnode_[c].split = fresh;
      touched.push_back(c);
    }
    int target = cnode_[c].split;
    detach_vertex(v);
    append_vertex(v, target);
    ++refine_moves_;
  }
  for (int c : touched) {
    cnode_[c].split = -1;
    if (cnode_[c].head == -1) unlink_class(c);
  }
}

void OrderedPartition::erase(int v) {
  if (!contains(v)) fail(ErrorKind::VertexNotInGroundSet, "vertex id " + std::to_string(v));
  int c = vnode_[v].cls;
  detach_vertex(v);
  --present_count_;
  if (cnode_[c].head == -1) unlink_class(c);
}

void OrderedPartition::prepend_singleton(int v) {
  if (v < 0 || v >= n_) fail(ErrorKind::VertexNotInGroundSet, "vertex id " + std::to_string(v));
  if (vnode_[v].cls != -1)
    fail(ErrorKind::InvalidParameters, "vertex id " + std::to_string(v) + " already present");
  int c = allocate_class();
  if (first_class_ == -1) {
    cnode_[c].prev = cnode_[c].next = -1;
    first_class_ = c;
    ++class_count_;
  } else {
    link_class_before(c, first_class_);
  }
  ++present_count_;
  append_vertex(v, c);
}

void OrderedPartition::move_to_back_of_class(int v) {
  if (!contains(v)) fail(ErrorKind::VertexNotInGroundSet, "vertex id " + std::to_string(v));
  int c = vnode_[v].cls;
  if (cnode_[c].tail == v) return;
  detach_vertex(v);
  append_vertex(v, c);
}

std::vector<std::vector<int>> OrderedPartition::classes() const {
  std::vector<std::vector<int>> out;
  for (int c = first_class_; c != -1; c = cnode_[c].next) {
    std::vector<int> cls;
    for (int v = cnode_[c].head; v != -1; v = vnode_[v].next) cls.push_back(v);
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<int> OrderedPartition::flatten() const {
  std::vector<int> out;
  out.reserve(present_count_);
  for (int c = first_class_; c != -1; c = cnode_[c].next)
    for (int v = cnode_[c].head; v != -1; v = vnode_[v].next) out.push_back(v);
  return out;
}

std::vector<int> OrderedPartition::flatten_back_to_front(std::span<const int> sequence) const {
  std::vector<int> slot(n_, -1);
  std::vector<int> cursor;
  int filled = 0;
  for (int c = first_class_; c != -1; c = cnode_[c].next) {
    cursor.push_back(filled);
    for (int v = cnode_[c].head; v != -1; v = vnode_[v].next) {
      slot[v] = static_cast<int>(cursor.size()) - 1;
      ++filled;
    }
  }
  std::vector<int> out(filled);
  int placed = 0;
  for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
    int v = *it;
    if (v < 0 || v >= n_ || slot[v] == -1) continue;
    out[cursor[slot[v]]++] = v;
    slot[v] = -1;
    ++placed;
  }
  if (placed != filled)
    fail(ErrorKind::InvalidParameters, "sequence does not cover the partition");
  return out;
}

}  // namespace lexsearch
