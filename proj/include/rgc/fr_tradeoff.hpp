#pragma once

#include <vector>

#include "rgc/curve.hpp"
#include "rgc/params.hpp"

namespace rgc {

/// An operating point together with the optimal functional-repair file size
/// at that point (the cut-set value).
struct FRPoint {
  OperatingPoint point;
  Rat file_size;
};

/// Cut-set bound: B <= sum_{l=0}^{k-1} min{alpha, (d-l)*beta}. Valid for both
/// functional and exact repair; every exact-repair bound in this library is
/// measured against it.
Rat cut_set_bound(const ParamSet& params, const OperatingPoint& point);

/// The individual terms gamma_i = min{alpha, (d-i)*beta}, i = 0..k-1.
std::vector<Rat> cut_set_terms(const ParamSet& params, const OperatingPoint& point);

/// Minimum-storage point: alpha = (d-k+1)*beta, B = k*alpha.
FRPoint msr_point(const ParamSet& params, const Rat& beta);

/// Minimum-bandwidth point: alpha = d*beta, B = (d*k - C(k,2))*beta.
FRPoint mbr_point(const ParamSet& params, const Rat& beta);

/// The normalized functional-repair tradeoff: the k corner points
/// alpha = (d-mu)*beta, mu = 0..k-1, each normalized by its cut-set value,
/// ordered from the MBR end (smallest beta_bar) to the MSR end.
PLCurve fr_normalized_curve(const ParamSet& params);

}  // namespace rgc
