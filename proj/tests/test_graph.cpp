#include <catch_amalgamated.hpp>

#include "p3c/families.hpp"
#include "p3c/graph.hpp"

using namespace p3c;

TEST_CASE("new_graph builds adjacency", "[graph]") {
  auto k2 = new_graph(2, {{0, 1}});
  CHECK(k2.neighbors(0).elements() == std::vector<vertex_t>{1});
  CHECK(k2.neighbors(1).elements() == std::vector<vertex_t>{0});

  auto g1 = counterexample_g1();
  CHECK(g1.order() == 7);
  CHECK(g1.degree(0) == 6);
  // every two vertices have a common neighbour
  for (vertex_t u = 0; u < 7; ++u)
    for (vertex_t v = u + 1; v < 7; ++v) CHECK(g1.neighbors(u).intersects(g1.neighbors(v)));

  auto p3 = new_graph(3, {{0, 1}, {1, 2}, {1, 0}});
  CHECK(p3.edge_count() == 2);
}

TEST_CASE("new_graph rejects bad edges", "[graph]") {
  CHECK_THROWS_AS(new_graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(new_graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(new_graph(-1, {}), std::invalid_argument);
}

TEST_CASE("is_tree", "[graph]") {
  CHECK(is_tree(path_graph(3)));
  CHECK(is_tree(path_graph(1)));
  CHECK_FALSE(is_tree(counterexample_g1()));
  CHECK_FALSE(is_tree(new_graph(2, {})));
  CHECK_FALSE(is_tree(new_graph(4, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST_CASE("remove_vertex_components", "[graph]") {
  auto p3 = path_graph(3);
  auto mid = remove_vertex_components(p3, 1);
  REQUIRE(mid.size() == 2);
  CHECK(mid[0].graph.order() == 1);
  CHECK(mid[0].labels == std::vector<vertex_t>{0});
  CHECK(mid[1].labels == std::vector<vertex_t>{2});

  auto end = remove_vertex_components(p3, 0);
  REQUIRE(end.size() == 1);
  CHECK(end[0].graph.order() == 2);
  CHECK(end[0].labels[static_cast<std::size_t>(end[0].root)] == 1);

  auto star = remove_vertex_components(star_graph(3), 0);
  CHECK(star.size() == 3);
  for (const auto& c : star) CHECK(c.graph.order() == 1);

  CHECK_THROWS(remove_vertex_components(p3, 3));
  CHECK_THROWS(remove_vertex_components(counterexample_g1(), 0));
}

TEST_CASE("endvertices", "[graph]") {
  CHECK(endvertices(path_graph(3)).elements() == std::vector<vertex_t>{0, 2});
  CHECK(endvertices(star_graph(3)).elements() == std::vector<vertex_t>{1, 2, 3});
  CHECK(endvertices(sharpness_tree(1)).count() == 7);  // v_1 is a leaf when m = 1
  CHECK(endvertices(sharpness_tree(2)).count() == 12);
  CHECK(endvertices(sharpness_tree(3)).count() == 18);
}
