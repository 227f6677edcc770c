#pragma once

#include <string>
#include <vector>

#include "rgc/curve.hpp"
#include "rgc/er_bounds.hpp"
#include "rgc/params.hpp"

namespace rgc {

enum class PointLabel { msr, mbr, layered, known_interior };

std::string to_string(PointLabel label);

/// A normalized operating point known to be achievable by a concrete code.
struct AchievablePoint {
  NormalizedPoint point;
  PointLabel label = PointLabel::known_interior;
  int r = 0;  // layered-code parameter when label == layered
  std::string source;
};

/// Normalized points of canonical layered codes on n nodes (d = n-1):
/// (alpha_bar, beta_bar) = (r/(n(r-1)), r/(n(n-1))) for r = 2..n-1.
/// r = 2 is the (n, n-1, n-1) MBR point. Requires n >= 4.
std::vector<AchievablePoint> layered_points(int n);

/// Catalogue of achievable interior points asserted by citation rather than
/// construction, keyed by (n, k, d). Shipped as a JSON resource; the builtin
/// table mirrors the shipped file.
class Catalogue {
 public:
  struct Entry {
    int n = 0, k = 0, d = 0;
    NormalizedPoint point;
    std::string source;
  };

  static const Catalogue& builtin();
  static Catalogue from_json_text(const std::string& text);
  static Catalogue from_json_file(const std::string& path);

  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<AchievablePoint> lookup(const ParamSet& params) const;

  int version = 0;

 private:
  std::vector<Entry> entries_;
};

/// Catalogued interior points for the given parameters; empty when none are
/// recorded.
std::vector<AchievablePoint> known_interior_points(const ParamSet& params);
std::vector<AchievablePoint> known_interior_points(const ParamSet& params, const Catalogue& cat);

/// Space-sharing frontier of everything known achievable for the parameters:
/// MSR and MBR normalized points, layered points when k = d = n-1 (and
/// n >= 4), and catalogued interior points.
PLCurve achievable_region(const ParamSet& params);
PLCurve achievable_region(const ParamSet& params, const Catalogue& cat);

struct GapSample {
  Rat beta_bar;
  Rat alpha_gap;  // achievable alpha_bar minus outer-bound alpha_bar, >= 0
};

/// Gap between the achievable frontier and an outer-bound curve, sampled at
/// the union of their breakpoints over the common beta_bar span. Identically
/// zero exactly when the bound characterizes the tradeoff.
std::vector<GapSample> gap_report(const ParamSet& params, BoundId id);
std::vector<GapSample> gap_report(const ParamSet& params, BoundId id, const Catalogue& cat);

}  // namespace rgc
