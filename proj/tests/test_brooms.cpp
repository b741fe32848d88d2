#include <doctest.h>

#include "helpers.hpp"
#include "wienerlab/brooms.hpp"
#include "wienerlab/error.hpp"

using namespace wienerlab;

TEST_CASE("broom constructors") {
  const Tree b = double_broom(10, 2, 3);
  CHECK(b.order() == 10);
  CHECK(diameter(b) == 6);
  CHECK(testing::oracle_wiener(b) == 139);
  CHECK(testing::oracle_wiener(double_broom(10, 1, 4)) == 131);

  const Tree t = triple_broom(12, 2, 2, 2);
  CHECK(diameter(t) == 6);
  CHECK(t.degree(1) == 3);
  CHECK(t.degree(0) == 3);
  CHECK(t.degree(5) == 3);

  CHECK_THROWS_AS(double_broom(5, 2, 2), Error);   // d = 2
  CHECK_THROWS_AS(double_broom(6, 0, 2), Error);
  CHECK_THROWS_AS(triple_broom(8, 1, 1, 2), Error);  // d = 4
  CHECK_THROWS_AS(validate(TripleBroomSpec{12, 2, 0, 2}), Error);
  CHECK(realize(BroomSpec{DoubleBroomSpec{6, 2, 2}}).order() == 6);
}

TEST_CASE("property: closed-form broom Wiener index matches the oracle") {
  for (std::int64_t n = 4; n <= 22; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = 1; n - a - b + 1 >= 3; ++b) {
        const DoubleBroomSpec s{n, a, b};
        REQUIRE(wiener_broom(s) == testing::oracle_wiener(double_broom(n, a, b)));
      }
    }
  }
  for (std::int64_t n = 8; n <= 20; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = 1; a + b < n; ++b) {
        for (std::int64_t c = 1; n - a - b - c >= 5; ++c) {
          REQUIRE(wiener_broom(TripleBroomSpec{n, a, b, c}) == testing::oracle_wiener(triple_broom(n, a, b, c)));
        }
      }
    }
  }
  for (std::int64_t n = 40; n <= 400; n += 17) {
    REQUIRE(wiener_broom(DoubleBroomSpec{n, 7, 9}) == wiener_edge_decomposition(double_broom(n, 7, 9)));
    REQUIRE(wiener_broom(TripleBroomSpec{n, 4, 6, 5}) == wiener_edge_decomposition(triple_broom(n, 4, 6, 5)));
  }
}

TEST_CASE("best brooms, spot values") {
  const auto d12 = best_double_broom(12, 6);
  CHECK(d12.a == 3);
  CHECK(d12.b == 4);
  CHECK(d12.wiener == 215);
  const auto t12 = best_triple_broom(12, 6);
  CHECK(t12.a == 1);
  CHECK(t12.b == 3);
  CHECK(t12.c == 2);
  CHECK(t12.wiener == 216);

  const auto d21 = best_double_broom(21, 9);
  CHECK(d21.a == 6);
  CHECK(d21.b == 7);
  CHECK(d21.wiener == 1002);
  const auto t21 = best_triple_broom(21, 9);
  CHECK(t21.a == 3);
  CHECK(t21.b == 6);
  CHECK(t21.c == 3);
  CHECK(t21.wiener == 1014);

  const auto big = best_double_broom(1744, 1634);
  CHECK(big.a == 55);
  CHECK(big.b == 56);

  CHECK_THROWS_AS(best_double_broom(10, 2), Error);
  CHECK_THROWS_AS(best_double_broom(10, 10), Error);
  CHECK_THROWS_AS(best_triple_broom(10, 4), Error);
  CHECK_THROWS_AS(best_triple_broom(10, 8), Error);
}

TEST_CASE("property: balanced split is optimal and strictly beats far splits") {
  for (std::int64_t n = 4; n <= 80; ++n) {
    for (std::int64_t d = 3; d <= n - 1; ++d) {
      const auto best = best_double_broom(n, d);
      const std::int64_t g = n - d + 1;
      REQUIRE(best.a + best.b == g);
      REQUIRE(best.a == g / 2);
      for (std::int64_t a = 1; a < g; ++a) {
        const Wiener w = wiener_broom(DoubleBroomSpec{n, a, g - a});
        REQUIRE(w <= best.wiener);
        if (std::abs(a - (g - a)) >= 2) REQUIRE(w < best.wiener);
      }
    }
  }
}

TEST_CASE("bounds and regimes") {
  CHECK(theorem_bound(6) == 8);
  CHECK(theorem_bound(9) == 15);
  CHECK(proposition_bound(9) == 21);
  CHECK(theorem_bound(1634) == 1744);
  CHECK(proposition_bound(1634) == 1750);
  CHECK(proposition_bound(1634) - theorem_bound(1634) == 6);

  CHECK(regime_of(1744, 1634) == Regime::kTheorem);
  CHECK(regime_of(1745, 1634) == Regime::kGap);
  CHECK(regime_of(1749, 1634) == Regime::kGap);
  CHECK(regime_of(1750, 1634) == Regime::kProposition);
  CHECK(std::string(to_string(Regime::kGap)) == "gap");
}

TEST_CASE("compare_brooms") {
  const auto below = compare_brooms(1744, 1634);
  CHECK(below.winner == BroomComparison::Winner::kDouble);
  CHECK(below.margin < 0);
  CHECK(below.regime == Regime::kTheorem);

  const auto beyond = compare_brooms(1750, 1634);
  CHECK(beyond.winner == BroomComparison::Winner::kTriple);
  CHECK(beyond.margin > 0);
  CHECK(beyond.margin == beyond.best_triple.wiener - beyond.best_double.wiener);
  CHECK(beyond.regime == Regime::kProposition);

  const auto small = compare_brooms(12, 6);
  CHECK(small.margin == 1);
  CHECK(small.winner == BroomComparison::Winner::kTriple);
}

TEST_CASE("property: at or below the theorem bound the double broom is never beaten by a triple") {
  for (std::int64_t d = 5; d <= 200; ++d) {
    for (std::int64_t n = d + 3; n <= theorem_bound(d); ++n) {
      REQUIRE(compare_brooms(n, d).margin <= 0);
    }
  }
}
