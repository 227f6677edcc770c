#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rgc/rational.hpp"

using rgc::Int;
using rgc::Rat;

namespace {

// Random rational with multi-word numerator/denominator so reduction and
// carries are actually exercised.
Rat random_rat(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long long> num_dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> den_dist(1, 1'000'000'000LL);
  long long n = num_dist(rng);
  if (nonzero && n == 0) n = 1;
  return Rat(Int(n), Int(den_dist(rng)));
}

// Cross-multiplication equality on raw integer pairs, independent of Rat's
// normalization path.
bool cross_equal(const Int& n1, const Int& d1, const Rat& r) {
  return n1 * r.den() == r.num() * d1;
}

}  // namespace

TEST_CASE("construction and normalization") {
  CHECK(Rat(Int(6), Int(4)) == Rat(Int(3), Int(2)));
  CHECK(Rat(Int(-6), Int(4)) == Rat(Int(3), Int(-2)));
  CHECK(Rat(Int(-6), Int(4)).den() == 2);
  CHECK(Rat(Int(0), Int(-7)).den() == 1);
  CHECK(Rat(5).is_integer());
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("field axioms vs integer cross-multiplication oracle") {
  std::mt19937_64 rng(20240117);
  for (int trial = 0; trial < 500; ++trial) {
    Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);

    // a + b = (a.n*b.d + b.n*a.d) / (a.d*b.d), checked without reduction.
    CHECK(cross_equal(a.num() * b.den() + b.num() * a.den(), a.den() * b.den(), a + b));
    CHECK(cross_equal(a.num() * b.num(), a.den() * b.den(), a * b));
    CHECK(cross_equal(a.num() * b.den() - b.num() * a.den(), a.den() * b.den(), a - b));

    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rat(0) == a);
    CHECK(a * Rat(1) == a);
    CHECK(a + (-a) == Rat(0));

    Rat nz = random_rat(rng, /*nonzero=*/true);
    CHECK(nz * (Rat(1) / nz) == Rat(1));
    CHECK(cross_equal(a.num() * nz.den(), a.den() * nz.num(), a / nz));

    // Total order is consistent with subtraction.
    CHECK(((a < b) == ((a - b).sign() < 0)));
  }
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("floor and ceil") {
  CHECK(Rat(Int(7), Int(2)).floor() == 3);
  CHECK(Rat(Int(7), Int(2)).ceil() == 4);
  CHECK(Rat(Int(-7), Int(2)).floor() == -4);
  CHECK(Rat(Int(-7), Int(2)).ceil() == -3);
  CHECK(Rat(6).floor() == 6);
  CHECK(Rat(6).ceil() == 6);
  CHECK(Rat(0).floor() == 0);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = random_rat(rng);
    Int f = a.floor(), c = a.ceil();
    CHECK(Rat(f) <= a);
    CHECK(a < Rat(f) + Rat(1));
    CHECK(a <= Rat(c));
    CHECK(Rat(c) - Rat(1) < a);
    CHECK((a.is_integer() ? f == c : f + 1 == c));
  }
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rat::parse("13/38").str() == "13/38");
  CHECK(Rat::parse("26/76") == Rat::parse("13/38"));
  CHECK(Rat::parse("-4/6").str() == "-2/3");
  CHECK(Rat::parse("42").str() == "42");
  CHECK(Rat::parse(" 7 / 2 ") == Rat(Int(7), Int(2)));
  CHECK(Rat::parse("+3/9") == Rat(Int(1), Int(3)));
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = random_rat(rng);
    CHECK(Rat::parse(a.str()) == a);
  }
}

TEST_CASE("binomial") {
  CHECK(rgc::binomial(4, 2) == 6);
  CHECK(rgc::binomial(5, 0) == 1);
  CHECK(rgc::binomial(5, 5) == 1);
  CHECK(rgc::binomial(3, 4) == 0);
  CHECK(rgc::binomial(3, -1) == 0);
  CHECK(rgc::binomial(52, 5) == 2598960);
}
