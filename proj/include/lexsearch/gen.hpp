#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/order.hpp"

namespace lexsearch {

/// Deterministic instance generators.  All randomness comes from
/// std::mt19937_64 seeded directly with the given seed, drawing bounded
/// values as `engine() % bound` and shuffling by plain Fisher-Yates over
/// those draws, so a seed reproduces the same instance on any platform.

/// Connected chordal graph on n vertices: vertex 0, then each new vertex
/// attached to a random subset (size 1..k) of a random existing clique, the
/// attachment set plus the new vertex joining the clique pool.  Edges at most
/// k per vertex; reverse insertion order is an elimination order.
Graph gen_chordal(int n, int k, std::uint64_t seed);

/// Uniform random permutation of the vertices with `start` moved to the back,
/// ready to serve as a search tiebreak.
VertexOrder gen_rho(const Graph& g, int start, std::uint64_t seed);

/// One gen_chordal instance per size, seeded seed, seed+1, ...
std::vector<Graph> bench_family(int k, std::span<const int> sizes, std::uint64_t seed);

struct BenchRow {
  int n = 0;
  int m = 0;
  double t_fast_ms = 0.0;
  /// Negative when the size is over `naive_cap` and the naive run is skipped.
  double t_naive_ms = -1.0;
};

/// Times lexdfs_plus_chordal against the naive label search on a bench_family
/// corpus; per size the median of `repeats` runs over the same random
/// tiebreak.
std::vector<BenchRow> run_bench(int k, std::span<const int> sizes, std::uint64_t seed,
                                int repeats, int naive_cap);

}  // namespace lexsearch
