#pragma once

#include <string>

#include <json.hpp>

#include "rgc/achievability.hpp"
#include "rgc/curve.hpp"
#include "rgc/er_bounds.hpp"
#include "rgc/gf.hpp"
#include "rgc/hrepair.hpp"

namespace rgc {

using ordered_json = nlohmann::ordered_json;

/// Matrix file format: {"field": p, "rows": r, "cols": c, "data": [[row], ...]}.
/// The block form adds {"n": n, "alpha": a, "beta": b}.
ordered_json matrix_to_json(const GFMatrix& m);
GFMatrix matrix_from_json(const nlohmann::json& j);
ordered_json block_matrix_to_json(const BlockMatrix& h);
BlockMatrix block_matrix_from_json(const nlohmann::json& j);

ordered_json regime_to_json(const Regime& reg);
ordered_json bound_report_to_json(const BoundReport& rep);
ordered_json curve_to_json(const PLCurve& curve);
ordered_json check_report_to_json(const CheckReport& rep);
ordered_json gap_samples_to_json(const std::vector<GapSample>& samples);

/// CSV rows for a curve: decimal convenience columns (approximate) followed
/// by the exact fractions. Header: beta_bar,alpha_bar,beta_bar_frac,alpha_bar_frac.
std::string curve_to_csv(const PLCurve& curve);

/// Fixed-format decimal rendering used everywhere a float appears in output,
/// so identical inputs produce byte-identical files.
std::string approx_str(const Rat& r);

}  // namespace rgc
