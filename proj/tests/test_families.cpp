#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "p3c/families.hpp"
#include "p3c/graph_io.hpp"
#include "p3c/tree_canon.hpp"

using namespace p3c;

TEST_CASE("sharpness family layout", "[families]") {
  const auto t1 = sharpness_tree(1);
  CHECK(t1.order() == 10);
  CHECK(is_tree(t1));
  CHECK(sharpness_branch_leaves(1).count() == 6);
  const auto t2 = sharpness_tree(2);
  CHECK(t2.order() == 20);
  CHECK(is_tree(t2));
  const auto b = sharpness_block(1);
  CHECK(t2.adjacent(sharpness_block(0).v, b.v));
  CHECK(t2.adjacent(b.u, b.w2));
  CHECK(t2.degree(b.w) == 4);
  CHECK(t2.degree(b.x()) == 1);
  CHECK(t2.degree(b.y()) == 1);
  CHECK(sharpness_free_set(2).count() == 6);
  CHECK_THROWS_AS(sharpness_tree(0), std::invalid_argument);
}

TEST_CASE("tree counts", "[families]") {
  const std::vector<std::size_t> known{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int n = 1; n <= 14; ++n) {
    std::size_t count = 0;
    std::set<std::string> codes;
    for (auto s = enumerate_trees(n); auto t = s.next();) {
      REQUIRE(t->order() == n);
      REQUIRE(is_tree(*t));
      codes.insert(free_tree_code(*t));
      ++count;
    }
    CHECK(codes.size() == count);  // no duplicates
    CHECK(count == known[static_cast<std::size_t>(n - 1)]);
  }
  CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(21), std::invalid_argument);
}

TEST_CASE("tree counts agree with Pruefer deduplication", "[families][property]") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t count = 0;
    for (auto s = enumerate_trees(n); s.next();) ++count;
    CHECK(count == oracle::count_trees_by_pruefer(n));
  }
}

TEST_CASE("canonical forms", "[families]") {
  // two labellings of the same tree
  auto a = new_graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  auto b = new_graph(5, {{4, 3}, {3, 0}, {0, 1}, {0, 2}});
  CHECK(free_tree_code(a) == free_tree_code(b));
  CHECK(canonical_graph6(a) == canonical_graph6(b));
  CHECK(canonical_tree(a) == canonical_tree(canonical_tree(a)));
  CHECK(free_tree_code(a) != free_tree_code(path_graph(5)));
  CHECK(rooted_tree_code(path_graph(3), 0) != rooted_tree_code(path_graph(3), 1));
}

TEST_CASE("random trees", "[families]") {
  CHECK(random_tree(1, 3).order() == 1);
  CHECK(random_tree(5, 42) == random_tree(5, 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(is_tree(random_tree(30, seed)));
  CHECK(free_tree_code(tree_from_pruefer(4, {1, 1})) == free_tree_code(star_graph(3)));
  CHECK_THROWS_AS(tree_from_pruefer(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_pruefer(4, {1, 9}), std::invalid_argument);
}
