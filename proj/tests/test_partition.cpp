#include <vector>

#include "doctest.h"
#include "lexsearch/error.hpp"
#include "lexsearch/partition.hpp"
#include "support.hpp"

using namespace lexsearch;
using namespace testsupport;

namespace {

std::vector<int> iota_ground(int n) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  return seq;
}

}  // namespace

TEST_CASE("a fresh partition is one class in ground order") {
  std::vector<int> ground = {3, 1, 0, 2};
  OrderedPartition partition{ground};
  CHECK(partition.size() == 4);
  CHECK(partition.class_count() == 1);
  CHECK(partition.front_vertex() == 3);
  CHECK(partition.classes() == std::vector<std::vector<int>>{{3, 1, 0, 2}});
  CHECK(partition.flatten() == ground);
}

TEST_CASE("refine splits every touched class, hit part first") {
  OrderedPartition partition{iota_ground(4)};
  partition.refine(std::vector<int>{1, 3});
  CHECK(partition.classes() == std::vector<std::vector<int>>{{1, 3}, {0, 2}});

  SUBCASE("second refine splits both classes") {
    partition.refine(std::vector<int>{0, 3});
    CHECK(partition.classes() == std::vector<std::vector<int>>{{3}, {1}, {0}, {2}});
  }
  SUBCASE("a subset covering a class leaves it alone") {
    partition.refine(std::vector<int>{1, 3});
    CHECK(partition.classes() == std::vector<std::vector<int>>{{1, 3}, {0, 2}});
    CHECK(partition.class_count() == 2);
  }
  SUBCASE("the empty subset is a no-op") {
    partition.refine(std::vector<int>{});
    CHECK(partition.classes() == std::vector<std::vector<int>>{{1, 3}, {0, 2}});
  }
}

TEST_CASE("intra-class order follows the ground sequence, not the subset") {
  std::vector<int> ground = {4, 2, 0, 1, 3};
  OrderedPartition partition{ground};
  partition.refine(std::vector<int>{3, 0, 4});
  CHECK(partition.classes() == std::vector<std::vector<int>>{{4, 0, 3}, {2, 1}});
}

TEST_CASE("refine rejects absent vertices and duplicates") {
  OrderedPartition partition{iota_ground(3)};
  CHECK(error_kind_of([&] { partition.refine(std::vector<int>{5}); }) ==
        ErrorKind::VertexNotInGroundSet);
  CHECK(error_kind_of([&] { partition.refine(std::vector<int>{-1}); }) ==
        ErrorKind::VertexNotInGroundSet);
  CHECK(error_kind_of([&] { partition.refine(std::vector<int>{1, 1}); }) ==
        ErrorKind::InvalidParameters);
  partition.erase(1);
  CHECK(error_kind_of([&] { partition.refine(std::vector<int>{1}); }) ==
        ErrorKind::VertexNotInGroundSet);
}

TEST_CASE("erase drops emptied classes") {
  OrderedPartition partition{iota_ground(3)};
  partition.refine(std::vector<int>{0});
  CHECK(partition.class_count() == 2);
  partition.erase(0);
  CHECK(partition.class_count() == 1);
  CHECK(partition.size() == 2);
  CHECK(partition.front_vertex() == 1);
  partition.erase(1);
  partition.erase(2);
  CHECK(partition.size() == 0);
  CHECK(partition.class_count() == 0);
}

TEST_CASE("prepend_singleton forms a new front class") {
  OrderedPartition partition{iota_ground(3)};
  partition.erase(2);
  partition.prepend_singleton(2);
  CHECK(partition.classes() == std::vector<std::vector<int>>{{2}, {0, 1}});
  CHECK(partition.front_vertex() == 2);
}

TEST_CASE("move_to_back_of_class rotates within one class only") {
  OrderedPartition partition{iota_ground(5)};
  partition.refine(std::vector<int>{0, 1, 2});
  partition.move_to_back_of_class(0);
  partition.move_to_back_of_class(3);
  CHECK(partition.classes() == std::vector<std::vector<int>>{{1, 2, 0}, {4, 3}});
}

TEST_CASE("a back-to-front move pass sorts every class by the pass order") {
  // Visiting vertices in some order rho back to front and moving each to the
  // back of its class leaves every class sorted by reversed rho; the ordering
  // pass leans on exactly this.
  std::vector<int> ground = {0, 1, 2, 3, 4, 5};
  OrderedPartition partition{ground};
  partition.refine(std::vector<int>{0, 2, 4});
  std::vector<int> rho = {2, 5, 0, 3, 4, 1};
  for (int i = static_cast<int>(rho.size()) - 1; i >= 0; --i)
    partition.move_to_back_of_class(rho[i]);
  CHECK(partition.classes() == std::vector<std::vector<int>>{{4, 0, 2}, {1, 3, 5}});
}

TEST_CASE("refine_moves counts every subset member") {
  // A fully-hit class is rebuilt in place, so its members count as moves too;
  // the counter is exactly the total subset size handed to refine.
  OrderedPartition partition{iota_ground(4)};
  CHECK(partition.refine_moves() == 0);
  partition.refine(std::vector<int>{1, 3});
  CHECK(partition.refine_moves() == 2);
  partition.refine(std::vector<int>{1, 3});
  CHECK(partition.refine_moves() == 4);
}

TEST_CASE("the worked mid-run state is reproduced") {
  // Ground order is the example's processing order; refining with {i} and
  // then {j,e,f,i} (the earlier neighbor sets seen up to that point, already
  // handled vertices included) leaves the documented three classes.
  Graph g = example_graph();
  VertexOrder beta = order_of(g, "i j e f g h a b c d s");
  OrderedPartition partition{beta.sequence()};
  partition.refine(ids_of(g, {"i"}));
  partition.refine(ids_of(g, {"i", "j", "e", "f"}));
  CHECK(class_text(g, partition.classes()) == "(i)(j,e,f)(g,h,a,b,c,d,s)");
}

TEST_CASE("ground sequence must be a permutation") {
  CHECK(error_kind_of([] { OrderedPartition{std::vector<int>{0, 0, 1}}; }) ==
        ErrorKind::InvalidParameters);
  CHECK(error_kind_of([] { OrderedPartition{std::vector<int>{1, 2}}; }) ==
        ErrorKind::InvalidParameters);
}
