#include <catch2/catch_amalgamated.hpp>

#include "covpack/simplex.hpp"

using namespace covpack;

TEST_CASE("two-phase simplex finds exact rational optimum", "[simplex]") {
  // max x+y s.t. x+2y <= 4, 3x+y <= 6  ->  (8/5, 6/5), value 14/5
  Mat<Rational> A = {{1, 2}, {3, 1}};
  std::vector<Rel> rel = {Rel::Le, Rel::Le};
  Vec<Rational> b = {4, 6};
  Vec<Rational> c = {-1, -1};
  auto res = solve_lp(A, rel, b, c);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == Rational(-14, 5));
  CHECK(res.x[0] == Rational(8, 5));
  CHECK(res.x[1] == Rational(6, 5));
}

TEST_CASE("float backend agrees on the same program", "[simplex]") {
  Mat<double> A = {{1, 2}, {3, 1}};
  std::vector<Rel> rel = {Rel::Le, Rel::Le};
  Vec<double> b = {4, 6};
  Vec<double> c = {-1, -1};
  auto res = solve_lp(A, rel, b, c);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK_THAT(res.objective, Catch::Matchers::WithinAbs(-2.8, 1e-12));
}

TEST_CASE("infeasible system is detected", "[simplex]") {
  // x <= -1 with x >= 0
  Mat<Rational> A = {{1}};
  auto res = solve_lp<Rational>(A, {Rel::Le}, {-1}, {0});
  CHECK(res.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective is detected", "[simplex]") {
  Mat<Rational> A = {{1}};
  auto res = solve_lp<Rational>(A, {Rel::Ge}, {1}, {-1});
  CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("equality constraints pass through phase one", "[simplex]") {
  // min x1 + x2 s.t. x1 - x2 = 3
  Mat<Rational> A = {{1, -1}};
  auto res = solve_lp<Rational>(A, {Rel::Eq}, {3}, {1, 1});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == Rational(3));
  CHECK(res.x[0] == Rational(3));
  CHECK(res.x[1] == Rational(0));
}

TEST_CASE("Bland's rule terminates on Beale's cycling example", "[simplex]") {
  Mat<Rational> A = {{Rational(1, 4), -60, Rational(-1, 25), 9},
                     {Rational(1, 2), -90, Rational(-1, 50), 3},
                     {0, 0, 1, 0}};
  std::vector<Rel> rel = {Rel::Le, Rel::Le, Rel::Le};
  Vec<Rational> b = {0, 0, 1};
  Vec<Rational> c = {Rational(-3, 4), 150, Rational(-1, 50), 6};
  auto res = solve_lp(A, rel, b, c);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == Rational(-1, 20));
  CHECK(res.x[0] == Rational(1, 25));
  CHECK(res.x[2] == Rational(1));
}

TEST_CASE("mixed relations with negative rhs", "[simplex]") {
  // min x+y s.t. x - y >= -2, x + y >= 1  -> value 1
  Mat<Rational> A = {{1, -1}, {1, 1}};
  auto res = solve_lp<Rational>(A, {Rel::Ge, Rel::Ge}, {-2, 1}, {1, 1});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == Rational(1));
}

TEST_CASE("redundant equality rows are tolerated", "[simplex]") {
  // x1 + x2 = 2 stated twice
  Mat<Rational> A = {{1, 1}, {1, 1}};
  auto res = solve_lp<Rational>(A, {Rel::Eq, Rel::Eq}, {2, 2}, {1, 2});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == Rational(2));
  CHECK(res.x[0] == Rational(2));
}
