#include "lexsearch/ordering.hpp"

#include "lexsearch/error.hpp"
#include "lexsearch/raw_block.hpp"
#include "lexsearch/partition.hpp"
#include "lexsearch/tree.hpp"

namespace lexsearch {

namespace {

VertexOrder checked_beta(const RootedSpanningTree& tree, const VertexOrder& beta) {
  if (beta.size() != tree.size()) fail(ErrorKind::InvalidBeta, "wrong size");
  for (int v = 0; v < tree.size(); ++v) {
    if (v == tree.root) continue;
    if (beta.position_of(v) >= beta.position_of(tree.parent[v]))
      fail(ErrorKind::InvalidBeta, "vertex id " + std::to_string(v) + " is not left of its parent");
  }
  return beta;
}

}  // namespace

VertexOrder ordering(const Graph& g, const RootedSpanningTree& tree, int start,
                     const VertexOrder& rho, const OrderingOptions& options,
                     OrderingTrace* trace) {
  const int n = g.vertex_count();
  if (tree.size() != n) fail(ErrorKind::NotASpanningTree, "tree does not span the graph");
  if (start != tree.root)
    fail(ErrorKind::InvalidParameters, "start " + g.name(start) + " is not the tree root");
  if (rho.size() != n || rho.last() != start)
    fail(ErrorKind::RhoDoesNotEndAtStart, "tiebreak must end at " + g.name(start));
  if (options.verify_tree && !is_dfs_ltree(g, tree))
    fail(ErrorKind::NotDfsLtree, "tree cannot come from a depth-first search");

  VertexOrder beta = options.beta_override ? checked_beta(tree, *options.beta_override)
                                           : tree_bfs_order(tree).reversed();

  // Each vertex refines with its already-processed neighbors.  Appending every
  // vertex to its unprocessed neighbors' slices as it is processed grows
  // exactly that set, in ascending beta position, with no position lookups.
  std::vector<int> offsets(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
  RawBlock<int> arena(offsets[n]);
  std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<bool> processed(n, false);

  OrderedPartition partition(beta.sequence());
  for (int i = 0; i < n; ++i) {
    int v = beta.at(i);
    partition.refine({arena.data() + offsets[v], arena.data() + cursor[v]});
    processed[v] = true;
    for (int w : g.neighbors(v))
      if (!processed[w]) arena[cursor[w]++] = v;
    if (trace && trace->record_partitions) trace->partition_steps.push_back(partition.classes());
  }
  if (trace) {
    trace->final_partition = partition.classes();
    trace->refine_moves = partition.refine_moves();
  }

  // Sort every class by reversed rho.
  partition.erase(start);
  partition.prepend_singleton(start);
  VertexOrder tau =
      VertexOrder::of_sequence(partition.flatten_back_to_front(rho.sequence())).reversed();
  if (trace) {
    trace->beta = beta;
    trace->tau = tau;
  }
  return tree_dfs_plus(tree, tau);
}

}  // namespace lexsearch
