#include "lexsearch/chordal.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "lexsearch/error.hpp"
#include "lexsearch/raw_block.hpp"

namespace lexsearch {

namespace {

/// Cycle through v -> p -> ... -> w -> v where the inner path avoids all other
/// neighbors of v; being shortest in that induced subgraph leaves no chords.
std::vector<int> witness_cycle(const Graph& g, int v, int p, int w) {
  const int n = g.vertex_count();
  std::vector<char> allowed(n, 1);
  allowed[v] = 0;
  for (int x : g.neighbors(v)) allowed[x] = 0;
  allowed[p] = allowed[w] = 1;

  std::vector<int> from(n, -1);
  std::queue<int> queue;
  queue.push(p);
  from[p] = p;
  while (!queue.empty() && from[w] == -1) {
    int u = queue.front();
    queue.pop();
    for (int x : g.neighbors(u))
      if (allowed[x] && from[x] == -1) {
        from[x] = u;
        queue.push(x);
      }
  }
  if (from[w] == -1) throw std::logic_error("chordless cycle witness path missing");

  std::vector<int> cycle{v};
  std::vector<int> path;
  for (int x = w; x != p; x = from[x]) path.push_back(x);
  path.push_back(p);
  cycle.insert(cycle.end(), path.rbegin(), path.rend());
  return cycle;
}

std::string cycle_text(const Graph& g, const std::vector<int>& cycle) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out << " ";
    out << g.name(cycle[i]);
  }
  return out.str();
}

/// Tests `peo` (the reverse of some lexicographic breadth-first order) as an
/// elimination order.  Any such order works: the graph is chordal exactly
/// when this one check passes.
ChordalityResult check_elimination(const Graph& g, VertexOrder peo) {
  const int n = g.vertex_count();

  // Elimination check: the later neighbors of v minus the closest one must
  // all be neighbors of that closest one.  Deferred (w, v) pairs keep it
  // O(n + m); a counting pass puts them in one flat block per that closest
  // neighbor p, in place of one list each.
  std::vector<int> closest(n, -1);
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = peo.at(i);
    int p = -1;
    int p_pos = n;
    int later = 0;
    for (int x : g.neighbors(v)) {
      int x_pos = peo.position_of(x);
      if (x_pos <= i) continue;
      ++later;
      if (x_pos < p_pos) {
        p = x;
        p_pos = x_pos;
      }
    }
    closest[v] = p;
    if (p != -1) offset[p + 1] += later - 1;
  }
  for (int p = 0; p < n; ++p) offset[p + 1] += offset[p];
  std::vector<int> cursor(offset.begin(), offset.end() - 1);
  RawBlock<int> def_w(offset[n]), def_v(offset[n]);
  for (int i = 0; i < n; ++i) {
    int v = peo.at(i);
    int p = closest[v];
    if (p == -1) continue;
    for (int x : g.neighbors(v))
      if (peo.position_of(x) > i && x != p) {
        def_w[cursor[p]] = x;
        def_v[cursor[p]] = v;
        ++cursor[p];
      }
  }

  std::vector<int> mark(n, -1);
  for (int p = 0; p < n; ++p) {
    if (offset[p] == offset[p + 1]) continue;
    for (int x : g.neighbors(p)) mark[x] = p;
    for (int j = offset[p]; j < offset[p + 1]; ++j)
      if (mark[def_w[j]] != p) {
        ChordalityResult result;
        result.chordal = false;
        result.chordless_cycle = witness_cycle(g, def_v[j], p, def_w[j]);
        return result;
      }
  }

  ChordalityResult result;
  result.chordal = true;
  result.peo = std::move(peo);
  return result;
}

[[noreturn]] void throw_not_chordal(const Graph& g, ChordalityResult check) {
  throw NotChordalError("cycle " + cycle_text(g, check.chordless_cycle),
                        std::move(check.chordless_cycle));
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  return check_elimination(g, lexbfs(g, 0).reversed());
}

VertexOrder lexdfs_plus_chordal(const Graph& g, int start, const VertexOrder& rho,
                                const LexdfsOptions& options, RootedSpanningTree* out_tree,
                                OrderingTrace* ordering_trace, RefinementTrace* lexbfs_trace) {
  const int n = g.vertex_count();
  if (start < 0 || start >= n) fail(ErrorKind::StartNotInGraph, "vertex id " + std::to_string(start));
  if (rho.size() != n || rho.last() != start)
    fail(ErrorKind::RhoDoesNotEndAtStart, "tiebreak must end at " + g.name(start));

  VertexOrder pi = lexbfs_plus(g, rho, lexbfs_trace);
  if (!options.assume_chordal) {
    // pi is itself a lexicographic breadth-first order, so testing its
    // reverse settles chordality without a second search.
    auto check = check_elimination(g, pi.reversed());
    if (!check.chordal) throw_not_chordal(g, std::move(check));
  }
  RootedSpanningTree tree = l_tree(g, pi);
  OrderingOptions ordering_options;
  ordering_options.beta_override = options.beta_override;
  VertexOrder sigma = ordering(g, tree, start, rho, ordering_options, ordering_trace);
  if (out_tree) *out_tree = std::move(tree);
  return sigma;
}

VertexOrder lexdfs_chordal(const Graph& g, int start, const LexdfsOptions& options) {
  return lexdfs_plus_chordal(g, start, canonical_tiebreak_ending_at(g, start), options);
}

bool verify_lexdfs_order(const Graph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count())
    fail(ErrorKind::InvalidOrder, "order does not cover the graph");
  // The replay checks chordality on its own breadth-first pass.
  return lexdfs_plus_chordal(g, order.first(), order.reversed()) == order;
}

bool verify_lexdfs_ltree(const Graph& g, const RootedSpanningTree& tree) {
  validate_spanning_tree(g, tree);
  auto check = is_chordal(g);
  if (!check.chordal) throw_not_chordal(g, std::move(check));
  if (!is_dfs_ltree(g, tree)) return false;

  LexdfsOptions options;
  options.assume_chordal = true;
  VertexOrder sigma =
      ordering(g, tree, tree.root, canonical_tiebreak_ending_at(g, tree.root));
  return lexdfs_plus_chordal(g, tree.root, sigma.reversed(), options) == sigma &&
         tree_equal(l_tree(g, sigma), tree);
}

}  // namespace lexsearch
