#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "wienerlab/brooms.hpp"
#include "wienerlab/enumerate.hpp"
#include "wienerlab/random.hpp"
#include "wienerlab/tree.hpp"

using namespace wienerlab;

namespace {

Violation violation_of(std::size_t n, std::initializer_list<Edge> edges) {
  try {
    tree_from_edges(n, edges);
  } catch (const ValidationError& e) {
    return e.violation();
  }
  FAIL("expected a validation error");
  return Violation::kEmpty;
}

std::int64_t binomial3(std::int64_t m) { return m * (m - 1) * (m - 2) / 6; }

}  // namespace

TEST_CASE("tree_from_edges accepts trees and names the first violation") {
  CHECK(tree_from_edges(2, {{0, 1}}).order() == 2);
  const Tree p4 = tree_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.order() == 4);
  CHECK(p4.degree(1) == 2);
  CHECK(tree_from_edges(1, {}).order() == 1);

  CHECK(violation_of(4, {{0, 1}, {1, 2}, {2, 0}}) == Violation::kCycle);
  CHECK(violation_of(4, {{0, 1}, {2, 3}}) == Violation::kDisconnected);
  CHECK(violation_of(3, {{0, 1}, {1, 0}}) == Violation::kDuplicateEdge);
  CHECK(violation_of(3, {{0, 0}, {1, 2}}) == Violation::kSelfLoop);
  CHECK(violation_of(3, {{0, 1}, {1, 3}}) == Violation::kOutOfRange);
  CHECK(violation_of(0, {}) == Violation::kEmpty);
  CHECK_THROWS_AS(tree_from_edges(kMaxOrder + 1, std::span<const Edge>{}), ValidationError);
}

TEST_CASE("tree text format round trip and parse errors") {
  const Tree t = parse_tree("4\n0 1\n1 2\n2 3\n");
  CHECK(format_tree(t) == "4\n0 1\n1 2\n2 3\n");
  CHECK(parse_tree("1\n").order() == 1);
  CHECK(parse_tree("3\r\n0 1\r\n1 2\r\n\n").order() == 3);

  auto kind_of = [](const std::string& text) {
    try {
      parse_tree(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvariant;
  };
  CHECK(kind_of("") == ErrorKind::kParse);
  CHECK(kind_of("x\n") == ErrorKind::kParse);
  CHECK(kind_of("3\n0 1\n") == ErrorKind::kParse);
  CHECK(kind_of("3\n0 1 2\n1 2\n") == ErrorKind::kParse);
  CHECK(kind_of("3\n0 -1\n1 2\n") == ErrorKind::kParse);
  CHECK(kind_of("4\n0 1\n1 2\n2 0\n") == ErrorKind::kValidation);
}

TEST_CASE("distances, eccentricity, diameter") {
  CHECK(distances_from(path_tree(4), 0).distances == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(distances_from(star_tree(4), 0).distances == std::vector<std::uint32_t>{0, 1, 1, 1});
  CHECK(eccentricity(path_tree(5), 2) == 2);
  CHECK(diameter(path_tree(5)) == 4);
  CHECK(diameter(star_tree(5)) == 2);
  CHECK(diameter(double_broom(10, 2, 3)) == 6);
  CHECK_THROWS_AS(distances_from(path_tree(3), 3), Error);

  // Triple broom B(12,2,2,2): spine 0..4, z = 5 on vertex 1, x-leaves 6,7.
  const Tree tb = triple_broom(12, 2, 2, 2);
  const auto from_x = distances_from(tb, 0).distances;
  CHECK(*std::max_element(from_x.begin(), from_x.end()) == 5);
  const auto from_leaf = distances_from(tb, 6).distances;
  CHECK(*std::max_element(from_leaf.begin(), from_leaf.end()) == 6);
  CHECK(from_leaf[10] == 4);  // x-leaf to z-leaf: 2p with p = 2
}

TEST_CASE("Wiener index spot values against the Floyd-Warshall oracle") {
  CHECK(wiener_pairwise(path_tree(2)) == 1);
  CHECK(wiener_pairwise(path_tree(4)) == 10);
  CHECK(wiener_edge_decomposition(path_tree(4)) == 10);
  CHECK(wiener_pairwise(star_tree(5)) == 16);
  CHECK(wiener_pairwise(tree_from_edges(1, {})) == 0);

  const Tree b622 = double_broom(6, 2, 2);
  CHECK(testing::oracle_wiener(b622) == 29);
  CHECK(wiener_edge_decomposition(b622) == 29);
  const Tree tb = triple_broom(12, 2, 2, 2);
  CHECK(testing::oracle_wiener(tb) == 214);
  CHECK(wiener_edge_decomposition(tb) == 214);
  CHECK(wiener_pairwise(tb) == 214);
}

TEST_CASE("paths and stars follow their closed forms up to n = 100") {
  for (std::int64_t n = 2; n <= 100; ++n) {
    CHECK(wiener_pairwise(path_tree(n)) == binomial3(n + 1));
    CHECK(wiener_edge_decomposition(path_tree(n)) == binomial3(n + 1));
    CHECK(wiener_pairwise(star_tree(n)) == (n - 1) * (n - 1));
  }
}

TEST_CASE("property: both Wiener algorithms and the diameter agree on random trees") {
  Rng rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
    const Tree t = random_tree(n, rng);
    REQUIRE(wiener_pairwise(t) == wiener_edge_decomposition(t));
    if (n >= 2) {
      std::uint32_t leaf_max = 0;
      const auto ls = leaves(t);
      for (Vertex u : ls) {
        const auto d = distances_from(t, u).distances;
        for (Vertex v : ls) leaf_max = std::max(leaf_max, d[v]);
      }
      REQUIRE(diameter(t) == leaf_max);
    }
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 40)(rng);
    const Tree t = random_tree(n, rng);
    REQUIRE(wiener_edge_decomposition(t) == testing::oracle_wiener(t));
    REQUIRE(static_cast<std::int64_t>(diameter(t)) == oracle::diameter(n, testing::edge_list(t)));
  }
}

TEST_CASE("leaves and broom vertices") {
  const Tree p5 = path_tree(5);
  CHECK(leaves(p5) == std::vector<Vertex>{0, 4});
  CHECK(broom_vertices(p5) == std::vector<Vertex>{1, 3});
  CHECK(broom_vertices(star_tree(5)) == std::vector<Vertex>{0});
  CHECK(broom_vertices(triple_broom(12, 2, 2, 2)) == std::vector<Vertex>{0, 4, 5});
  CHECK_THROWS_AS(leaves(tree_from_edges(1, {})), Error);
  CHECK_THROWS_AS(broom_vertices(tree_from_edges(1, {})), Error);
}

TEST_CASE("classify") {
  using K = ShapeClass::Kind;
  CHECK(classify(path_tree(6)).kind == K::kPath);
  CHECK(classify(path_tree(2)).kind == K::kPath);
  CHECK(classify(path_tree(3)).kind == K::kPath);
  CHECK(classify(star_tree(5)).kind == K::kStar);
  CHECK(classify(double_broom(10, 2, 3)) == ShapeClass{K::kDoubleBroom, 2, 3});
  CHECK(classify(double_broom(10, 3, 2)) == ShapeClass{K::kDoubleBroom, 2, 3});
  CHECK(classify(double_broom(8, 1, 1)).kind == K::kPath);
  CHECK(classify(triple_broom(12, 2, 2, 2)) == ShapeClass{K::kTripleBroom, 2, 2, 2});
  CHECK(classify(triple_broom(14, 3, 2, 1)) == ShapeClass{K::kTripleBroom, 1, 2, 3});

  // Spider with three legs of length 3: three broom vertices, pairwise 4 apart.
  const Tree spider = tree_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
  CHECK(broom_vertices(spider).size() == 3);
  CHECK(classify(spider).kind == K::kOther);

  // Spider with three legs of length 2 is B(7,1,1,1) with d = 4.
  const Tree small_spider = tree_from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(classify(small_spider) == ShapeClass{K::kTripleBroom, 1, 1, 1});

  CHECK(is_double_broom(path_tree(4)));
  CHECK_FALSE(is_double_broom(path_tree(3)));
  CHECK(is_double_broom(double_broom(9, 3, 2)));
  CHECK_FALSE(is_double_broom(triple_broom(12, 2, 2, 2)));
  CHECK_FALSE(is_double_broom(star_tree(6)));
}

TEST_CASE("property: classify round-trips broom constructors for n <= 60") {
  using K = ShapeClass::Kind;
  for (std::int64_t n = 4; n <= 60; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = 1; n - a - b + 1 >= 3; ++b) {
        const ShapeClass s = classify(double_broom(n, a, b));
        if (a == 1 && b == 1) {
          REQUIRE(s.kind == K::kPath);
        } else {
          REQUIRE(s == ShapeClass{K::kDoubleBroom, std::min<std::size_t>(a, b), std::max<std::size_t>(a, b)});
        }
      }
    }
  }
  for (std::int64_t n = 8; n <= 40; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = 1; a + b < n; ++b) {
        for (std::int64_t c = 1; n - a - b - c >= 5; ++c) {
          const ShapeClass s = classify(triple_broom(n, a, b, c));
          REQUIRE(s == ShapeClass{K::kTripleBroom, std::min<std::size_t>(a, c), static_cast<std::size_t>(b),
                                  std::max<std::size_t>(a, c)});
        }
      }
    }
  }
}
