#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rgc/achievability.hpp"
#include "rgc/fr_tradeoff.hpp"

using namespace rgc;

namespace {
Rat rat(long long n, long long d) { return Rat(Int(n), Int(d)); }
}  // namespace

TEST_CASE("layered operating points") {
  auto pts5 = layered_points(5);
  REQUIRE(pts5.size() == 3);
  CHECK(pts5[0].r == 2);
  CHECK(pts5[0].point == NormalizedPoint{rat(2, 5), rat(1, 10)});
  CHECK(pts5[1].point == NormalizedPoint{rat(3, 10), rat(3, 20)});

  // r = 2 is the (n, n-1, n-1) MBR point.
  FRPoint mbr = mbr_point(ParamSet(5, 4, 4), Rat(1));
  CHECK(pts5[0].point == normalize(mbr.point, mbr.file_size));

  auto pts6 = layered_points(6);
  CHECK(pts6.back().r == 5);
  CHECK(pts6.back().point == NormalizedPoint{rat(5, 24), rat(1, 6)});

  CHECK_THROWS_AS(layered_points(3), std::domain_error);
}

TEST_CASE("layered points are monotone in r") {
  for (int n = 4; n <= 10; ++n) {
    auto pts = layered_points(n);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      CHECK(pts[i].point.beta_bar > pts[i - 1].point.beta_bar);
      CHECK(pts[i].point.alpha_bar < pts[i - 1].point.alpha_bar);
    }
  }
}

TEST_CASE("the r = n-1 layered point lies on the FR tradeoff") {
  for (int n = 4; n <= 10; ++n) {
    auto pts = layered_points(n);
    const NormalizedPoint& p = pts.back().point;
    PLCurve fr = fr_normalized_curve(ParamSet(n, n - 1, n - 1));
    auto on_fr = fr.value_at(p.beta_bar);
    REQUIRE(on_fr.has_value());
    CHECK(*on_fr == p.alpha_bar);
  }
}

TEST_CASE("interior-point catalogue") {
  auto pts = known_interior_points(ParamSet(6, 3, 5));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].point == NormalizedPoint{rat(13, 38), rat(2, 19)});
  CHECK(pts[0].label == PointLabel::known_interior);

  CHECK(known_interior_points(ParamSet(5, 4, 4)).empty());
  CHECK(known_interior_points(ParamSet(7, 4, 6)).empty());
}

TEST_CASE("catalogue loads from the shipped resource file") {
  Catalogue cat = Catalogue::from_json_file(std::string(RGC_DATA_DIR) + "/interior_points.json");
  CHECK(cat.version == 1);
  REQUIRE(cat.entries().size() == 1);
  CHECK(cat.entries()[0].point.alpha_bar == rat(13, 38));
  auto pts = known_interior_points(ParamSet(6, 3, 5), cat);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].point.beta_bar == rat(2, 19));

  Catalogue extended = Catalogue::from_json_text(R"({
    "version": 2,
    "points": [{"n": 7, "k": 4, "d": 6, "alpha_bar": "1/4", "beta_bar": "1/12", "source": "test"}]
  })");
  CHECK(known_interior_points(ParamSet(7, 4, 6), extended).size() == 1);
  CHECK_THROWS(Catalogue::from_json_file("/nonexistent/file.json"));
}

TEST_CASE("achievable region examples") {
  // (6,5,5): MSR plus layered r = 2..5; segment equations
  // r(r-1)*6*a + 30*b = r^2+r for r = 2,3,4 and 4a + b = 1.
  PLCurve c = achievable_region(ParamSet(6, 5, 5));
  REQUIRE(c.size() == 5);
  CHECK(c.vertices()[0] == NormalizedPoint{rat(1, 3), rat(1, 15)});
  CHECK(c.vertices()[4] == NormalizedPoint{rat(1, 5), rat(1, 5)});
  for (int r = 2; r <= 4; ++r) {
    const auto& lo = c.vertices()[r - 2];
    const auto& hi = c.vertices()[r - 1];
    CHECK(Rat(Int(r) * (r - 1) * 6) * lo.alpha_bar + Rat(30) * lo.beta_bar == Rat(Int(r) * (r + 1)));
    CHECK(Rat(Int(r) * (r - 1) * 6) * hi.alpha_bar + Rat(30) * hi.beta_bar == Rat(Int(r) * (r + 1)));
  }
  CHECK(Rat(4) * c.vertices()[3].alpha_bar + c.vertices()[3].beta_bar == Rat(1));

  // (6,3,5): hull of MSR, MBR and the catalogued interior point.
  c = achievable_region(ParamSet(6, 3, 5));
  REQUIRE(c.size() == 3);
  CHECK(c.vertices()[0] == NormalizedPoint{rat(5, 12), rat(1, 12)});
  CHECK(c.vertices()[1] == NormalizedPoint{rat(13, 38), rat(2, 19)});
  CHECK(c.vertices()[2] == NormalizedPoint{rat(1, 3), rat(1, 9)});

  // (4,3,3): layered points participate.
  c = achievable_region(ParamSet(4, 3, 3));
  bool has_r3 = false;
  for (const auto& v : c.vertices())
    if (v == NormalizedPoint{rat(3, 8), rat(1, 4)}) has_r3 = true;
  CHECK(has_r3);
}

TEST_CASE("hull vertices are exactly the layered points plus MSR when k = d = n-1") {
  for (int n = 4; n <= 10; ++n) {
    ParamSet p(n, n - 1, n - 1);
    PLCurve hull = achievable_region(p);
    FRPoint msr = msr_point(p, Rat(1));
    std::set<std::pair<std::string, std::string>> expect;
    expect.insert({normalize(msr.point, msr.file_size).beta_bar.str(),
                   normalize(msr.point, msr.file_size).alpha_bar.str()});
    for (const auto& a : layered_points(n))
      expect.insert({a.point.beta_bar.str(), a.point.alpha_bar.str()});
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& v : hull.vertices()) got.insert({v.beta_bar.str(), v.alpha_bar.str()});
    CHECK(got == expect);
  }
}

TEST_CASE("gap reports") {
  // Characterized cases: identically zero.
  for (const auto& s : gap_report(ParamSet(6, 3, 5), BoundId::repair_matrix))
    CHECK(s.alpha_gap == Rat(0));
  for (const auto& s : gap_report(ParamSet(6, 5, 5), BoundId::linear_k_eq_d))
    CHECK(s.alpha_gap == Rat(0));

  // The FR curve does not characterize the (6,5,5) ER tradeoff: positive gap
  // somewhere strictly inside.
  bool positive = false;
  for (const auto& s : gap_report(ParamSet(6, 5, 5), BoundId::cutset)) {
    CHECK(s.alpha_gap >= Rat(0));
    if (s.alpha_gap > Rat(0)) positive = true;
  }
  CHECK(positive);
}

TEST_CASE("achievable region dominates every outer curve") {
  for (ParamSet p : {ParamSet(6, 3, 5), ParamSet(6, 5, 5), ParamSet(5, 4, 4), ParamSet(13, 7, 12)}) {
    std::vector<BoundId> ids{BoundId::repair_matrix, BoundId::mohajer_tandon, BoundId::improved_mt,
                             BoundId::combined};
    if (p.k() == p.d()) ids.push_back(BoundId::linear_k_eq_d);
    for (BoundId id : ids)
      for (const auto& s : gap_report(p, id)) CHECK(s.alpha_gap >= Rat(0));
  }
}
