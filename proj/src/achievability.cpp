#include "rgc/achievability.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rgc/fr_tradeoff.hpp"

namespace rgc {

std::string to_string(PointLabel label) {
  switch (label) {
    case PointLabel::msr: return "msr";
    case PointLabel::mbr: return "mbr";
    case PointLabel::layered: return "layered";
    case PointLabel::known_interior: return "known-interior";
  }
  return "?";
}

std::vector<AchievablePoint> layered_points(int n) {
  if (n < 4) throw std::domain_error("layered codes require n >= 4");
  std::vector<AchievablePoint> out;
  for (int r = 2; r <= n - 1; ++r) {
    NormalizedPoint p{Rat(Int(r), Int(n) * (r - 1)), Rat(Int(r), Int(n) * (n - 1))};
    out.push_back(AchievablePoint{p, PointLabel::layered, r, "canonical layered code"});
  }
  return out;
}

namespace {

const char* kBuiltinCatalogue = R"json(
{
  "version": 1,
  "points": [
    {
      "n": 6, "k": 3, "d": 5,
      "alpha_bar": "13/38", "beta_bar": "2/19",
      "source": "improved layered construction, Senthoor-Sasidharan-Kumar (ITW 2014)"
    }
  ]
}
)json";

}  // namespace

const Catalogue& Catalogue::builtin() {
  static const Catalogue cat = Catalogue::from_json_text(kBuiltinCatalogue);
  return cat;
}

Catalogue Catalogue::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Catalogue cat;
  cat.version = j.value("version", 0);
  for (const auto& e : j.at("points")) {
    Entry entry;
    entry.n = e.at("n").get<int>();
    entry.k = e.at("k").get<int>();
    entry.d = e.at("d").get<int>();
    entry.point.alpha_bar = Rat::parse(e.at("alpha_bar").get<std::string>());
    entry.point.beta_bar = Rat::parse(e.at("beta_bar").get<std::string>());
    entry.source = e.value("source", "");
    cat.entries_.push_back(std::move(entry));
  }
  return cat;
}

Catalogue Catalogue::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalogue file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::vector<AchievablePoint> Catalogue::lookup(const ParamSet& params) const {
  std::vector<AchievablePoint> out;
  for (const auto& e : entries_)
    if (e.n == params.n() && e.k == params.k() && e.d == params.d())
      out.push_back(AchievablePoint{e.point, PointLabel::known_interior, 0, e.source});
  return out;
}

std::vector<AchievablePoint> known_interior_points(const ParamSet& params) {
  return known_interior_points(params, Catalogue::builtin());
}

std::vector<AchievablePoint> known_interior_points(const ParamSet& params, const Catalogue& cat) {
  return cat.lookup(params);
}

PLCurve achievable_region(const ParamSet& params) {
  return achievable_region(params, Catalogue::builtin());
}

PLCurve achievable_region(const ParamSet& params, const Catalogue& cat) {
  std::vector<NormalizedPoint> pts;
  FRPoint msr = msr_point(params, Rat(1));
  FRPoint mbr = mbr_point(params, Rat(1));
  pts.push_back(normalize(msr.point, msr.file_size));
  pts.push_back(normalize(mbr.point, mbr.file_size));
  if (params.k() == params.d() && params.d() == params.n() - 1 && params.n() >= 4)
    for (const auto& a : layered_points(params.n())) pts.push_back(a.point);
  for (const auto& a : known_interior_points(params, cat)) pts.push_back(a.point);
  return lower_hull(std::move(pts));
}

std::vector<GapSample> gap_report(const ParamSet& params, BoundId id) {
  return gap_report(params, id, Catalogue::builtin());
}

std::vector<GapSample> gap_report(const ParamSet& params, BoundId id, const Catalogue& cat) {
  PLCurve ach = achievable_region(params, cat);
  PLCurve outer = normalized_outer_curve(params, id);
  Rat lo = max(ach.beta_min(), outer.beta_min());
  Rat hi = min(ach.beta_max(), outer.beta_max());
  std::vector<Rat> breaks{lo, hi};
  for (const auto& v : ach.vertices())
    if (v.beta_bar > lo && v.beta_bar < hi) breaks.push_back(v.beta_bar);
  for (const auto& v : outer.vertices())
    if (v.beta_bar > lo && v.beta_bar < hi) breaks.push_back(v.beta_bar);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<GapSample> out;
  out.reserve(breaks.size());
  for (const Rat& b : breaks)
    out.push_back(GapSample{b, *ach.value_at(b) - *outer.value_at(b)});
  return out;
}

}  // namespace rgc
