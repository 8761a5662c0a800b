#include <random>
#include <vector>

#include "doctest.h"
#include "lexsearch/error.hpp"
#include "lexsearch/gen.hpp"
#include "lexsearch/io.hpp"
#include "lexsearch/lexbfs.hpp"
#include "lexsearch/oracle.hpp"
#include "lexsearch/ordering.hpp"
#include "lexsearch/tree.hpp"
#include "support.hpp"

using namespace lexsearch;
using namespace testsupport;

namespace {

RootedSpanningTree example_tree(const Graph& g) {
  return tree_from_text("root s\na b\nb c\nc d\nd s\ne g\nf g\ng h\nh c\ni j\nj g\n", g);
}

}  // namespace

TEST_CASE("a triangle is rebuilt from its tree") {
  Graph g = graph_from_text("s a\ns b\na b\n");
  RootedSpanningTree tree = l_tree(g, order_of(g, "s a b"));
  OrderingTrace trace;
  VertexOrder sigma =
      ordering(g, tree, *g.id_of("s"), order_of(g, "b a s"), {}, &trace);
  CHECK(tokens_of(g, sigma) == "s a b");
  CHECK(class_text(g, trace.final_partition) == "(b)(a)(s)");
  CHECK(tokens_of(g, trace.tau) == "a b s");
}

TEST_CASE("the worked example runs through the documented partition states") {
  Graph g = example_graph();
  RootedSpanningTree tree = example_tree(g);
  VertexOrder rho = order_of(g, "a b c d e f g h i j s");
  VertexOrder beta = order_of(g, "i j e f g h a b c d s");  // reverse of the BFS order

  OrderingOptions options;
  options.beta_override = &beta;
  OrderingTrace trace;
  trace.record_partitions = true;
  VertexOrder sigma = ordering(g, tree, *g.id_of("s"), rho, options, &trace);

  CHECK(tokens_of(g, sigma) == "s d c h g j i f e b a");
  CHECK(trace.beta == beta);

  REQUIRE(trace.partition_steps.size() == 11);
  // After g (position 4) only its earlier neighbors i, j, e, f have refined.
  CHECK(class_text(g, trace.partition_steps[4]) == "(i)(j,e,f)(g,h,a,b,c,d,s)");

  // After the full pass every class is cut down to the vertices that share
  // one earlier-neighbor history.  Each split drops its hit part directly in
  // front of the class it came out of, so when b's step pulls a out of the
  // class (h,b,c,d,s), the new singleton (a) lands between (g) and (h): the
  // left-to-right class order is forced to ...(g)(a)(h)...
  CHECK(class_text(g, trace.final_partition) == "(i)(j)(e,f)(g)(a)(h)(b)(c)(d)(s)");

  // Sorting the classes by reversed rho flips (e,f) to (f,e); the front
  // class order above then fixes tau with a before g.
  CHECK(tokens_of(g, trace.tau) == "d c b h a g e f j i s");

  // The refinement loop touches each edge at most once.
  CHECK(trace.refine_moves <= std::uint64_t(g.edge_count()));
}

TEST_CASE("the example tree walk is insensitive to the a/g tau transposition") {
  // tau orders a and g between the h and e blocks; a and g are never
  // unvisited children of the same vertex, so both placements drive the tree
  // walk to the same order.
  Graph g = example_graph();
  RootedSpanningTree tree = example_tree(g);
  CHECK(tokens_of(g, tree_dfs_plus(tree, order_of(g, "d c b h a g e f j i s"))) ==
        "s d c h g j i f e b a");
  CHECK(tokens_of(g, tree_dfs_plus(tree, order_of(g, "d c b h g a e f j i s"))) ==
        "s d c h g j i f e b a");
}

TEST_CASE("the default beta gives the same order as the reversed breadth-first one") {
  Graph g = example_graph();
  RootedSpanningTree tree = example_tree(g);
  VertexOrder rho = order_of(g, "a b c d e f g h i j s");
  VertexOrder with_default = ordering(g, tree, *g.id_of("s"), rho);
  CHECK(tokens_of(g, with_default) == "s d c h g j i f e b a");
}

TEST_CASE("any valid beta yields the same order") {
  std::mt19937_64 engine{47};
  for (int round = 0; round < 40; ++round) {
    Graph g = gen_chordal(3 + int(engine() % 30), 1 + int(engine() % 4), engine());
    int start = int(engine() % g.vertex_count());
    VertexOrder rho = gen_rho(g, start, engine());
    VertexOrder pi = lexbfs_plus(g, rho);
    RootedSpanningTree tree = l_tree(g, pi);

    VertexOrder by_default = ordering(g, tree, start, rho);
    OrderingOptions options;
    VertexOrder beta = pi.reversed();
    options.beta_override = &beta;
    CHECK(ordering(g, tree, start, rho, options) == by_default);
  }
}

TEST_CASE("a naive depth-first order is recovered from its own tree") {
  std::mt19937_64 engine{53};
  for (int round = 0; round < 80; ++round) {
    Graph g = gen_chordal(2 + int(engine() % 39), 1 + int(engine() % 4), engine());
    VertexOrder rho = gen_rho(g, int(engine() % g.vertex_count()), engine());
    VertexOrder sigma = naive_lexdfs_plus(g, rho);
    RootedSpanningTree tree = l_tree(g, sigma);
    CHECK(ordering(g, tree, sigma.first(), sigma.reversed()) == sigma);
  }
}

TEST_CASE("ordering validates its inputs") {
  Graph g = graph_from_text("s a\ns b\na b\n");
  RootedSpanningTree tree = l_tree(g, order_of(g, "s a b"));
  int s = *g.id_of("s");

  CHECK(error_kind_of([&] { ordering(g, tree, s, order_of(g, "s a b")); }) ==
        ErrorKind::RhoDoesNotEndAtStart);
  CHECK(error_kind_of([&] { ordering(g, tree, *g.id_of("a"), order_of(g, "s b a")); }) ==
        ErrorKind::InvalidParameters);

  RootedSpanningTree small{0, std::vector<int>{-1, 0}};
  CHECK(error_kind_of([&] { ordering(g, small, s, order_of(g, "b a s")); }) ==
        ErrorKind::NotASpanningTree);

  VertexOrder bad_beta = order_of(g, "s a b");  // s left of nobody, a right of its child
  OrderingOptions options;
  options.beta_override = &bad_beta;
  CHECK(error_kind_of([&] { ordering(g, tree, s, order_of(g, "b a s"), options); }) ==
        ErrorKind::InvalidBeta);

  RootedSpanningTree star{s, std::vector<int>{-1, 0, 0}};
  OrderingOptions verify;
  verify.verify_tree = true;
  CHECK(error_kind_of([&] { ordering(g, star, s, order_of(g, "b a s"), verify); }) ==
        ErrorKind::NotDfsLtree);
}
