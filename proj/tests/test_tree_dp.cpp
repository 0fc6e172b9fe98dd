#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "p3c/families.hpp"
#include "p3c/tree_dp.hpp"

using namespace p3c;

TEST_CASE("alpha on trees", "[tree_dp]") {
  CHECK(alpha_tree(new_graph(1, {})).size == 1);
  CHECK(alpha_tree(path_graph(2)).size == 2);
  auto t1 = alpha_tree(sharpness_tree(1));
  CHECK(t1.size == 3);
  CHECK(is_free(sharpness_tree(1), t1.witness));
  CHECK(alpha_tree(sharpness_tree(2)).size == 6);
  CHECK(alpha_tree(sharpness_tree(7)).size == 21);
  CHECK_THROWS_AS(alpha_tree(counterexample_g1()), std::invalid_argument);
}

TEST_CASE("alpha star", "[tree_dp]") {
  CHECK(alpha_star_tree(new_graph(1, {}), 0) == 0);
  CHECK(alpha_star_tree(path_graph(2), 0) == 1);
  CHECK(alpha_star_tree(path_graph(3), 1) == 1);
  CHECK_THROWS_AS(alpha_star_tree(path_graph(3), 3), std::invalid_argument);
}

TEST_CASE("tree DP matches subset enumeration", "[tree_dp][property]") {
  for (int n = 1; n <= 9; ++n)
    for (auto s = enumerate_trees(n); auto t = s.next();) {
      const auto a = oracle::adjacency(*t);
      const auto r = alpha_tree(*t);
      REQUIRE(r.size == oracle::max_free(a));
      REQUIRE(is_free(*t, r.witness));
      REQUIRE(static_cast<int>(r.witness.count()) == r.size);
      for (vertex_t v = 0; v < n; ++v)
        REQUIRE(alpha_star_tree(*t, v) == oracle::max_free(a, std::uint64_t{1} << v));
    }
}

TEST_CASE("r-star recursion", "[tree_dp]") {
  CHECK(radon_star_tree(new_graph(1, {}), 0, 2) == 0);
  CHECK(radon_star_tree(path_graph(3), 2, 2) == 2);
  CHECK(radon_star_tree(star_graph(3), 0, 2) == 1);  // any two leaves pull the centre in
  CHECK(radon_star_tree(star_graph(3), 0, 2) == radon_star(star_graph(3), 0, 2).value);
  CHECK_THROWS_AS(radon_star_tree(counterexample_g1(), 0, 2), std::invalid_argument);

  int calls = 0;
  auto counting = [&](const Graph& g, int k) {
    ++calls;
    return exact_radon_multiset_number(g, k);
  };
  RadonMemo memo;
  const auto star = star_graph(5);
  CHECK(radon_star_tree(star, 0, 2, counting, &memo) == radon_star(star, 0, 2).value);
  CHECK(calls == 1);  // the five leaf components share one memo entry
  CHECK(memo.size() >= 2);
}

TEST_CASE("r-star recursion agrees with direct search", "[tree_dp][property]") {
  RadonMemo memo;
  for (int n = 1; n <= 7; ++n)
    for (auto s = enumerate_trees(n); auto t = s.next();)
      for (int k = 2; k <= 3; ++k)
        for (vertex_t v = 0; v < n; ++v)
          REQUIRE(radon_star_tree(*t, v, k, &memo) == radon_star(*t, v, k).value);
}

TEST_CASE("brothers and leaf coverage", "[tree_dp]") {
  const auto star = star_graph(3);
  CHECK(brothers(star, 2).elements() == std::vector<vertex_t>{1, 3});
  CHECK(brothers(star, 0).empty());
  CHECK(brothers(path_graph(2), 0).empty());
  CHECK(covers_endvertices(star, VertexSet::from_mask(4, 0b0011)));
  CHECK_FALSE(covers_endvertices(star, VertexSet::from_mask(4, 0b0001)));
}

TEST_CASE("free set covering the endvertices", "[tree_dp]") {
  auto p2 = free_set_covering_leaves(path_graph(2));
  CHECK(static_cast<int>(p2.count()) == alpha_tree(path_graph(2)).size);
  CHECK(covers_endvertices(path_graph(2), p2));

  const auto star = star_graph(3);
  auto s = free_set_covering_leaves(star);
  CHECK(s.count() == 2);
  CHECK(is_free(star, s));
  CHECK(covers_endvertices(star, s));

  const auto t1 = sharpness_tree(1);
  auto a = free_set_covering_leaves(t1);
  CHECK(a.count() == 3);
  const auto b = sharpness_block(0);
  CHECK((a.test(b.x()) || brothers(t1, b.x()).intersects(a)));
  CHECK((a.test(b.y()) || brothers(t1, b.y()).intersects(a)));

  CHECK_THROWS_AS(free_set_covering_leaves(new_graph(1, {})), std::invalid_argument);

  for (int n = 2; n <= 10; ++n)
    for (auto st = enumerate_trees(n); auto t = st.next();) {
      const auto c = free_set_covering_leaves(*t);
      REQUIRE(is_free(*t, c));
      REQUIRE(static_cast<int>(c.count()) == alpha_tree(*t).size);
      REQUIRE(covers_endvertices(*t, c));
    }
}
