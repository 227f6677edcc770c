#include "rgc/fr_tradeoff.hpp"

#include <algorithm>

namespace rgc {

std::vector<Rat> cut_set_terms(const ParamSet& params, const OperatingPoint& point) {
  validate_point(params, point);
  std::vector<Rat> terms;
  terms.reserve(params.k());
  for (int i = 0; i < params.k(); ++i)
    terms.push_back(min(point.alpha, Rat(params.d() - i) * point.beta));
  return terms;
}

Rat cut_set_bound(const ParamSet& params, const OperatingPoint& point) {
  Rat sum = 0;
  for (const Rat& t : cut_set_terms(params, point)) sum += t;
  return sum;
}

FRPoint msr_point(const ParamSet& params, const Rat& beta) {
  if (!(beta > 0)) throw std::domain_error("operating point violates beta > 0");
  Rat alpha = Rat(params.d() - params.k() + 1) * beta;
  return FRPoint{OperatingPoint{alpha, beta}, Rat(params.k()) * alpha};
}

FRPoint mbr_point(const ParamSet& params, const Rat& beta) {
  if (!(beta > 0)) throw std::domain_error("operating point violates beta > 0");
  Rat alpha = Rat(params.d()) * beta;
  Rat b = (Rat(Int(params.d()) * params.k()) - Rat(binomial(params.k(), 2))) * beta;
  return FRPoint{OperatingPoint{alpha, beta}, b};
}

PLCurve fr_normalized_curve(const ParamSet& params) {
  // Corner evaluation with beta = 1, from MBR (mu = 0) toward MSR. The
  // normalized image has increasing beta_bar in that order since the cut-set
  // value shrinks as alpha does.
  std::vector<NormalizedPoint> pts;
  Rat beta = 1;
  for (int mu = 0; mu <= params.k() - 1; ++mu) {
    OperatingPoint op{Rat(params.d() - mu) * beta, beta};
    Rat b = 0;
    for (int i = 0; i < params.k(); ++i) b += min(op.alpha, Rat(params.d() - i) * beta);
    pts.push_back(normalize(op, b));
  }
  return PLCurve::from_breakpoints(std::move(pts));
}

}  // namespace rgc
