#include <catch2/catch_amalgamated.hpp>

#include "covpack/body.hpp"
#include "covpack/family.hpp"

using namespace covpack;

namespace {

ConvexBody<double> unit_disc() {
  return ConvexBody<double>::ellipsoid({{1, 0}, {0, 1}});
}

template <class S>
ConvexBody<S> square() {
  return ConvexBody<S>::hpolytope({unit_vec<S>(2, 0), unit_vec<S>(2, 1)});
}

template <class S>
ConvexBody<S> cross_polytope() {
  return ConvexBody<S>::vpolytope({unit_vec<S>(2, 0), unit_vec<S>(2, 1)});
}

}  // namespace

TEST_CASE("gauge on the reference bodies", "[bodies]") {
  CHECK_THAT(unit_disc().gauge({2.0, 0.0}), Catch::Matchers::WithinAbs(2.0, 1e-12));
  CHECK(square<Rational>().gauge({1, 1}) == Rational(1));
  auto e = ConvexBody<double>::ellipsoid({{1, 0}, {0, 4}});
  CHECK_THAT(e.gauge({0.0, 1.0}), Catch::Matchers::WithinAbs(2.0, 1e-12));
  CHECK(ConvexBody<double>::lp_ball(2.0, 1.0, 2).gauge({2.0, 0.0}) == 2.0);
}

TEST_CASE("support on the reference bodies", "[bodies]") {
  CHECK(square<Rational>().support({1, 1}) == Rational(2));
  CHECK_THAT(unit_disc().support({0.0, 3.0}), Catch::Matchers::WithinAbs(3.0, 1e-12));
  CHECK(cross_polytope<Rational>().support({1, 1}) == Rational(1));
}

TEST_CASE("gauge of zero is zero and gauge is symmetric", "[bodies]") {
  auto b = square<Rational>();
  CHECK(b.gauge({0, 0}) == Rational(0));
  CHECK(b.gauge({Rational(1), Rational(-1, 2)}) == b.gauge({Rational(-1), Rational(1, 2)}));
}

TEST_CASE("polar bodies flip representations", "[bodies]") {
  auto sq = square<Rational>();
  auto pol = sq.polar();
  CHECK(pol.kind() == BodyKind::VPolytope);
  CHECK(pol.gauge({1, 0}) == Rational(1));
  CHECK(pol.gauge({1, 1}) == Rational(2));  // cross-polytope has l1 gauge

  auto d = unit_disc().polar();
  CHECK_THAT(d.gauge({1.0, 0.0}), Catch::Matchers::WithinAbs(1.0, 1e-12));

  auto e = ConvexBody<double>::ellipsoid({{1, 0}, {0, 4}}).polar();
  CHECK(e.kind() == BodyKind::Ellipsoid);
  CHECK_THAT(e.ellipsoid_matrix()[1][1], Catch::Matchers::WithinAbs(0.25, 1e-12));

  auto lp = ConvexBody<double>::lp_ball(1.0, 2.0, 3).polar();
  CHECK(std::isinf(lp.lp_exponent()));
  CHECK_THAT(lp.lp_radius(), Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("radius on the reference pairs", "[bodies]") {
  auto disc_e = unit_disc();
  auto K = disc_e.scaled(2.0);
  auto r = radius(K, disc_e);
  CHECK(r.exact);
  CHECK_THAT(r.value, Catch::Matchers::WithinAbs(2.0, 1e-9));

  auto sq_v = ConvexBody<double>::vpolytope({{1.0, 1.0}, {1.0, -1.0}});
  auto r2 = radius(sq_v, disc_e);
  CHECK(r2.exact);
  CHECK_THAT(r2.value, Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-12));
  CHECK_THAT(disc_e.gauge(r2.attainer), Catch::Matchers::WithinAbs(r2.value, 1e-12));

  auto segment = ConvexBody<double>::vpolytope({{1.0, 0.0}});
  auto r3 = radius(segment, disc_e);
  CHECK_THAT(r3.value, Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("radius via generalized eigenvalues matches the lp ball view", "[bodies]") {
  auto e1 = ConvexBody<double>::ellipsoid({{1, 0}, {0, 4}});
  auto ball = ConvexBody<double>::lp_ball(2.0, 1.0, 2);
  // max ||x||_2 over {x: x'Qx <= 1} = 1/sqrt(lambda_min(Q)) = 1
  auto r = radius(e1, ball);
  CHECK(r.exact);
  CHECK_THAT(r.value, Catch::Matchers::WithinAbs(1.0, 1e-9));
  auto rr = radius(ball, e1);
  CHECK_THAT(rr.value, Catch::Matchers::WithinAbs(2.0, 1e-9));
}

TEST_CASE("gauge-support duality with attainment on random bodies", "[bodies]") {
  CounterRng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2 + static_cast<int>(rng.next_below(2));
    auto body = (trial % 2 == 0) ? random_vpolytope<Rational>(dim, 4, rng)
                                 : random_hpolytope<Rational>(dim, 4, rng);
    Vec<Rational> u = random_grid_vector<Rational>(dim, rng, 8);
    Rational s = body.support(u);
    Vec<Rational> xstar = body.support_argmax(u);
    REQUIRE(dot(u, xstar) == s);
    if (s > 0) REQUIRE(body.gauge(xstar) == Rational(1));
    Vec<Rational> x = random_grid_vector<Rational>(dim, rng, 8);
    REQUIRE(dot(u, x) <= body.gauge(x) * s);
  }
}

TEST_CASE("gauge-support duality on random ellipsoids", "[bodies]") {
  CounterRng rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 2 + static_cast<int>(rng.next_below(3));
    auto body = random_ellipsoid(dim, rng);
    Vec<double> u(dim), x(dim);
    for (int i = 0; i < dim; ++i) {
      u[i] = rng.next_range(-2, 2);
      x[i] = rng.next_range(-2, 2);
    }
    double s = body.support(u);
    Vec<double> xstar = body.support_argmax(u);
    REQUIRE_THAT(dot(u, xstar), Catch::Matchers::WithinAbs(s, 1e-9));
    if (s > 1e-9) REQUIRE_THAT(body.gauge(xstar), Catch::Matchers::WithinAbs(1.0, 1e-9));
    REQUIRE(dot(u, x) <= body.gauge(x) * s + 1e-9);
  }
}

TEST_CASE("bipolar identity", "[bodies]") {
  CounterRng rng(303);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + static_cast<int>(rng.next_below(2));
    auto body = (trial % 2 == 0) ? random_vpolytope<Rational>(dim, 4, rng)
                                 : random_hpolytope<Rational>(dim, 4, rng);
    auto bipolar = body.polar().polar();
    for (int k = 0; k < 4; ++k) {
      Vec<Rational> x = random_grid_vector<Rational>(dim, rng, 8);
      REQUIRE(bipolar.gauge(x) == body.gauge(x));
    }
  }
  CounterRng frng(304);
  for (int trial = 0; trial < 10; ++trial) {
    auto body = random_ellipsoid(3, frng);
    auto bipolar = body.polar().polar();
    Vec<double> x = {frng.next_range(-2, 2), frng.next_range(-2, 2), frng.next_range(-2, 2)};
    REQUIRE_THAT(bipolar.gauge(x), Catch::Matchers::WithinAbs(body.gauge(x), 1e-9));
  }
}

TEST_CASE("radius symmetry under polarity", "[bodies]") {
  CounterRng rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + static_cast<int>(rng.next_below(2));
    auto K = random_vpolytope<Rational>(dim, 4, rng);
    auto B = random_hpolytope<Rational>(dim, 4, rng);
    REQUIRE(radius(K, B).value == radius(B.polar(), K.polar()).value);
  }
  CounterRng frng(405);
  for (int trial = 0; trial < 10; ++trial) {
    auto K = random_ellipsoid(2, frng);
    auto B = random_ellipsoid(2, frng);
    double a = radius(K, B).value;
    double b = radius(B.polar(), K.polar()).value;
    REQUIRE_THAT(a, Catch::Matchers::WithinRel(b, 1e-9));
  }
}

TEST_CASE("gauge homogeneity in the scale factor", "[bodies]") {
  auto body = square<Rational>();
  Vec<Rational> x = {Rational(3, 4), Rational(-1, 2)};
  for (Rational t : {Rational(1, 2), Rational(2)}) {
    REQUIRE(body.scaled(t).gauge(x) == body.gauge(x) / t);
  }
}

TEST_CASE("body json round trip", "[bodies]") {
  auto sq = square<Rational>().scaled(Rational(3, 2));
  auto j = sq.to_json();
  CHECK(j["scale"] == "3/2");
  auto back = ConvexBody<Rational>::from_json(j);
  CHECK(back.gauge({1, 1}) == sq.gauge({1, 1}));

  auto e = ConvexBody<double>::ellipsoid({{2, 0.5}, {0.5, 1}});
  auto eback = ConvexBody<double>::from_json(e.to_json());
  CHECK_THAT(eback.gauge({0.3, -0.7}), Catch::Matchers::WithinAbs(e.gauge({0.3, -0.7}), 1e-12));

  json lp = {{"type", "lpball"}, {"p", "inf"}, {"r", "1/2"}, {"dim", 2}};
  auto cube = ConvexBody<Rational>::from_json(lp);
  CHECK(cube.gauge({Rational(1, 2), Rational(1, 2)}) == Rational(1));
}

TEST_CASE("construction and query errors", "[bodies]") {
  CHECK_THROWS_AS(square<Rational>().gauge({1, 1, 1}), dimension_error);
  CHECK_THROWS_AS(ConvexBody<Rational>::hpolytope({{1, 0}}), degenerate_error);
  CHECK_THROWS_AS(ConvexBody<Rational>::ellipsoid({{1, 0}, {0, 1}}), backend_error);
  CHECK_THROWS_AS(ConvexBody<double>::lp_ball(0.5, 1.0, 2), body_error);
  CHECK_THROWS_AS(ConvexBody<double>::ellipsoid({{1, 2}, {0, 1}}), body_error);
  CHECK_THROWS_AS(ConvexBody<double>::ellipsoid({{1, 0}, {0, -1}}), degenerate_error);
  CHECK_THROWS_AS(ConvexBody<Rational>::lp_ball(3.0, 1, 2), backend_error);
  // nine-dimensional request exceeds the supported cap
  CHECK_THROWS_AS(ConvexBody<double>::lp_ball(2.0, 1.0, 9), dimension_error);
  // segment in the plane: gauge defined only on its span
  auto seg = ConvexBody<Rational>::vpolytope({{1, 0}});
  CHECK(seg.gauge({Rational(1, 2), 0}) == Rational(1, 2));
  CHECK_FALSE(seg.try_gauge({0, 1}).has_value());
  CHECK_THROWS_AS(seg.polar(), degenerate_error);
}
