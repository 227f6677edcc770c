#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rgc/curve.hpp"
#include "rgc/params.hpp"

using namespace rgc;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(ParamSet(6, 3, 5));
  CHECK_NOTHROW(ParamSet(4, 3, 3));
  CHECK_THROWS_AS(ParamSet(6, 1, 5), std::domain_error);  // k >= 2
  CHECK_THROWS_AS(ParamSet(6, 4, 3), std::domain_error);  // k <= d
  CHECK_THROWS_AS(ParamSet(6, 3, 6), std::domain_error);  // d <= n-1
  CHECK(ParamSet(13, 7, 12).effective_n() == 13);
  CHECK(ParamSet::unchecked(5, 1, 4).k() == 1);
}

TEST_CASE("operating point validation names the violated inequality") {
  ParamSet p(6, 3, 5);
  CHECK_NOTHROW(validate_point(p, {Rat(13), Rat(4)}));
  CHECK_THROWS_WITH_AS(validate_point(p, {Rat(1), Rat(0)}),
                       "operating point violates beta > 0", std::domain_error);
  CHECK_THROWS_WITH_AS(validate_point(p, {Rat(3), Rat(4)}),
                       "operating point violates beta <= alpha", std::domain_error);
  CHECK_THROWS_WITH_AS(validate_point(p, {Rat(21), Rat(4)}),
                       "operating point violates alpha <= d*beta", std::domain_error);
}

TEST_CASE("regime decomposition examples") {
  ParamSet p635(6, 3, 5);
  Regime r = regime_of(p635, {Rat(20), Rat(4)});
  CHECK(r.mu == 0);
  CHECK(r.theta == Rat(0));

  r = regime_of(p635, {Rat(13), Rat(4)});
  CHECK(r.mu == 1);
  CHECK(r.theta == Rat(3));
  CHECK(r.nu == Rat(Int(3), Int(4)));

  ParamSet p544(5, 4, 4);
  r = regime_of(p544, {Rat(1), Rat(1)});
  CHECK(r.mu == 3);
  CHECK(r.theta == Rat(0));

  CHECK_THROWS_AS(regime_of(p635, {Rat(3), Rat(4)}), std::domain_error);
  CHECK_THROWS_AS(regime_of(p635, {Rat(24), Rat(4)}), std::domain_error);
}

TEST_CASE("regime decomposition is a bijection on [beta, d*beta]") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nd(3, 12);
  for (int trial = 0; trial < 300; ++trial) {
    int n = nd(rng);
    std::uniform_int_distribution<int> kd(2, n - 1);
    int d = kd(rng);
    int k = std::uniform_int_distribution<int>(2, d)(rng);
    ParamSet p(n, k, d);
    Rat beta(Int(std::uniform_int_distribution<int>(1, 40)(rng)),
             Int(std::uniform_int_distribution<int>(1, 7)(rng)));
    // Pick mu and theta in their valid ranges, reconstruct alpha, and expect
    // the same (mu, theta) back.
    int mu = std::uniform_int_distribution<int>(0, d - 1)(rng);
    Rat theta = beta * Rat(Int(std::uniform_int_distribution<int>(0, 15)(rng)), Int(16));
    Rat alpha = Rat(d - mu) * beta - theta;
    if (alpha < beta) continue;
    Regime r = regime_of(p, {alpha, beta});
    CHECK(r.mu == mu);
    CHECK(r.theta == theta);
    CHECK(r.nu == theta / beta);
    CHECK(r.alpha(p) == alpha);
  }
}

TEST_CASE("normalize") {
  CHECK(normalize({Rat(13), Rat(4)}, Rat(38)) == NormalizedPoint{Rat(Int(13), Int(38)), Rat(Int(2), Int(19))});
  CHECK(normalize({Rat(7), Rat(7)}, Rat(7)) == NormalizedPoint{Rat(1), Rat(1)});
  CHECK(normalize({Rat(4), Rat(1)}, Rat(10)) == NormalizedPoint{Rat(Int(2), Int(5)), Rat(Int(1), Int(10))});
  CHECK_THROWS_AS(normalize({Rat(1), Rat(1)}, Rat(0)), std::domain_error);
  CHECK_THROWS_AS(normalize({Rat(1), Rat(1)}, Rat(-3)), std::domain_error);
}

namespace {
NormalizedPoint np(Rat b, Rat a) { return NormalizedPoint{std::move(a), std::move(b)}; }
}  // namespace

TEST_CASE("lower hull examples") {
  // Singleton.
  PLCurve single = lower_hull({np(Rat(1), Rat(1))});
  CHECK(single.size() == 1);

  // The three (6,3,5) achievable points are all hull vertices; the
  // orientation oracle on the triple confirms convex position.
  NormalizedPoint mbr = np(Rat(Int(1), Int(12)), Rat(Int(5), Int(12)));
  NormalizedPoint mid = np(Rat(Int(2), Int(19)), Rat(Int(13), Int(38)));
  NormalizedPoint msr = np(Rat(Int(1), Int(9)), Rat(Int(1), Int(3)));
  CHECK(orientation(mbr, mid, msr) > 0);
  PLCurve hull = lower_hull({msr, mid, mbr});
  REQUIRE(hull.size() == 3);
  CHECK(hull.vertices()[0] == mbr);
  CHECK(hull.vertices()[1] == mid);
  CHECK(hull.vertices()[2] == msr);

  // Collinear triple collapses to its endpoints.
  PLCurve line = lower_hull({np(Rat(0), Rat(0)), np(Rat(1), Rat(1)), np(Rat(2), Rat(2))});
  REQUIRE(line.size() == 2);
  CHECK(line.vertices()[0] == np(Rat(0), Rat(0)));
  CHECK(line.vertices()[1] == np(Rat(2), Rat(2)));

  CHECK_THROWS_AS(lower_hull({}), std::domain_error);
}

TEST_CASE("lower hull is convex and dominated by every input") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> coord(1, 60);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<NormalizedPoint> pts;
    int count = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < count; ++i)
      pts.push_back(np(Rat(Int(coord(rng)), Int(coord(rng))), Rat(Int(coord(rng)), Int(coord(rng)))));
    PLCurve hull = lower_hull(pts);
    CHECK(hull.is_convex());
    for (const auto& p : pts) {
      auto on_curve = hull.value_at(p.beta_bar);
      if (on_curve) CHECK(p.alpha_bar >= *on_curve);
      // Points outside the beta span lie right of the hull by construction.
    }
  }
}

TEST_CASE("curve canonicalization merges collinear vertices") {
  std::vector<NormalizedPoint> pts{np(Rat(0), Rat(4)), np(Rat(1), Rat(3)), np(Rat(2), Rat(2)),
                                   np(Rat(3), Rat(0))};
  PLCurve c = PLCurve::from_breakpoints(pts);
  REQUIRE(c.size() == 3);
  CHECK(c.vertices()[1] == np(Rat(2), Rat(2)));
  CHECK(c.is_tradeoff_oriented());
  CHECK(c.value_at(Rat(Int(1), Int(2))) == Rat(Int(7), Int(2)));
  CHECK(c.value_at(Rat(5)) == std::nullopt);
  CHECK_THROWS_AS(PLCurve::from_breakpoints({np(Rat(1), Rat(1)), np(Rat(1), Rat(2))}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLCurve::from_breakpoints({}), std::invalid_argument);
}
