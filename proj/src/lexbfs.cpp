#include "lexsearch/lexbfs.hpp"

#include "lexsearch/basic_search.hpp"
#include "lexsearch/error.hpp"
#include "lexsearch/partition.hpp"

namespace lexsearch {

VertexOrder lexbfs_plus(const Graph& g, const VertexOrder& tiebreak, RefinementTrace* trace) {
  const int n = g.vertex_count();
  if (tiebreak.size() != n)
    fail(ErrorKind::InvalidOrder, "tiebreak covers " + std::to_string(tiebreak.size()) + " of " +
                                      std::to_string(n) + " vertices");

  VertexOrder ground = tiebreak.reversed();
  // Neighbor lists in descending tiebreak position, i.e. ascending ground
  // rank, so refine subsets arrive pre-sorted.
  auto sorted = adjacency_by_position(g, ground);

  OrderedPartition partition(ground.sequence());
  std::vector<int> seq;
  seq.reserve(n);
  std::vector<bool> placed(n, false);
  std::vector<int> subset;
  while (partition.size() > 0) {
    int pivot = partition.front_vertex();
    partition.erase(pivot);
    placed[pivot] = true;
    seq.push_back(pivot);

    subset.clear();
    for (int w : sorted[pivot])
      if (!placed[w]) subset.push_back(w);
    partition.refine(subset);

    if (trace && trace->record_snapshots)
      trace->snapshots.push_back({seq, partition.classes()});
  }
  if (trace) trace->refine_moves = partition.refine_moves();
  return VertexOrder::of_sequence(std::move(seq));
}

VertexOrder canonical_tiebreak_ending_at(const Graph& g, int start) {
  const int n = g.vertex_count();
  if (start < 0 || start >= n) fail(ErrorKind::StartNotInGraph, "vertex id " + std::to_string(start));
  std::vector<int> seq;
  seq.reserve(n);
  for (int v = 0; v < n; ++v)
    if (v != start) seq.push_back(v);
  seq.push_back(start);
  return VertexOrder::of_sequence(std::move(seq));
}

VertexOrder lexbfs(const Graph& g, int start, RefinementTrace* trace) {
  return lexbfs_plus(g, canonical_tiebreak_ending_at(g, start), trace);
}

}  // namespace lexsearch
