#include "lexsearch/gen.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "lexsearch/chordal.hpp"
#include "lexsearch/error.hpp"
#include "lexsearch/oracle.hpp"

namespace lexsearch {

namespace {

std::uint64_t draw(std::mt19937_64& engine, std::uint64_t bound) { return engine() % bound; }

}  // namespace

Graph gen_chordal(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1)
    fail(ErrorKind::InvalidParameters,
         "n " + std::to_string(n) + ", k " + std::to_string(k) + " (both must be >= 1)");

  std::mt19937_64 engine(seed);
  std::vector<std::vector<int>> adjacency(n);
  std::vector<std::vector<int>> cliques{{0}};
  for (int v = 1; v < n; ++v) {
    const auto& base = cliques[draw(engine, cliques.size())];
    int t = 1 + static_cast<int>(draw(engine, std::min<std::size_t>(k, base.size())));

    // First t entries of a partial Fisher-Yates pass over a copy.
    std::vector<int> pick(base);
    for (int i = 0; i < t; ++i)
      std::swap(pick[i], pick[i + draw(engine, pick.size() - i)]);
    pick.resize(t);

    for (int u : pick) {
      adjacency[v].push_back(u);
      adjacency[u].push_back(v);
    }
    pick.push_back(v);
    cliques.push_back(std::move(pick));
  }
  return Graph::from_adjacency(adjacency);
}

VertexOrder gen_rho(const Graph& g, int start, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (start < 0 || start >= n) fail(ErrorKind::StartNotInGraph, "vertex id " + std::to_string(start));
  std::mt19937_64 engine(seed);
  std::vector<int> seq;
  seq.reserve(n);
  for (int v = 0; v < n; ++v)
    if (v != start) seq.push_back(v);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    std::swap(seq[i], seq[i + draw(engine, seq.size() - i)]);
  seq.push_back(start);
  return VertexOrder::of_sequence(std::move(seq));
}

std::vector<Graph> bench_family(int k, std::span<const int> sizes, std::uint64_t seed) {
  std::vector<Graph> family;
  family.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    family.push_back(gen_chordal(sizes[i], k, seed + i));
  return family;
}

namespace {

double median_ms(std::vector<double>& samples) {
  std::sort(samples.begin(), samples.end());
  std::size_t mid = samples.size() / 2;
  if (samples.size() % 2) return samples[mid];
  return (samples[mid - 1] + samples[mid]) / 2.0;
}

template <typename Fn>
double time_primed_ms(Fn&& fn) {
  using clock = std::chrono::steady_clock;
  fn();  // unmeasured priming run: the caches see this input, not the last one
  auto begin = clock::now();
  fn();
  auto end = clock::now();
  return std::chrono::duration<double, std::milli>(end - begin).count();
}

}  // namespace

std::vector<BenchRow> run_bench(int k, std::span<const int> sizes, std::uint64_t seed,
                                int repeats, int naive_cap) {
  if (repeats < 1) fail(ErrorKind::InvalidParameters, "repeats must be >= 1");
  auto family = bench_family(k, sizes, seed);
  std::vector<VertexOrder> tiebreaks;
  tiebreaks.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    tiebreaks.push_back(gen_rho(family[i], 0, seed + 1000 + i));

  // One sample per size per round rather than all of a size's repeats back to
  // back: machine-speed drift then hits every size alike and cancels out of
  // the growth ratios instead of landing on whichever size was measured
  // during a slow spell.
  std::vector<std::vector<double>> fast(family.size()), naive(family.size());
  for (int r = 0; r < repeats; ++r) {
    for (std::size_t i = 0; i < family.size(); ++i)
      fast[i].push_back(
          time_primed_ms([&] { lexdfs_plus_chordal(family[i], 0, tiebreaks[i]); }));
    for (std::size_t i = 0; i < family.size(); ++i)
      if (family[i].vertex_count() <= naive_cap)
        naive[i].push_back(time_primed_ms([&] { naive_lexdfs_plus(family[i], tiebreaks[i]); }));
  }

  std::vector<BenchRow> rows;
  rows.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    BenchRow row;
    row.n = family[i].vertex_count();
    row.m = family[i].edge_count();
    row.t_fast_ms = median_ms(fast[i]);
    if (!naive[i].empty()) row.t_naive_ms = median_ms(naive[i]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lexsearch
