#include "rgc/params.hpp"

namespace rgc {

ParamSet::ParamSet(int n, int k, int d) : n_(n), k_(k), d_(d) {
  if (k < 2) throw std::domain_error("parameter range violated: 2 <= k");
  if (k > d) throw std::domain_error("parameter range violated: k <= d");
  if (d > n - 1) throw std::domain_error("parameter range violated: d <= n-1");
}

ParamSet ParamSet::unchecked(int n, int k, int d) {
  ParamSet p;
  p.n_ = n;
  p.k_ = k;
  p.d_ = d;
  return p;
}

std::string ParamSet::str() const {
  return "(" + std::to_string(n_) + "," + std::to_string(k_) + "," + std::to_string(d_) + ")";
}

void validate_point(const ParamSet& params, const OperatingPoint& point) {
  if (!(point.beta > 0)) throw std::domain_error("operating point violates beta > 0");
  if (!(point.beta <= point.alpha)) throw std::domain_error("operating point violates beta <= alpha");
  if (!(point.alpha <= Rat(params.d()) * point.beta))
    throw std::domain_error("operating point violates alpha <= d*beta");
}

Regime regime_of(const ParamSet& params, const OperatingPoint& point) {
  if (!(point.beta > 0)) throw std::domain_error("operating point violates beta > 0");
  if (point.alpha < point.beta) throw std::domain_error("operating point violates beta <= alpha");
  if (point.alpha > Rat(params.d()) * point.beta)
    throw std::domain_error("operating point violates alpha <= d*beta");

  // mu is the unique integer with (d-mu-1)*beta < alpha <= (d-mu)*beta.
  Int mu = Int(params.d()) - (point.alpha / point.beta).ceil();
  Regime reg;
  reg.mu = static_cast<int>(mu);
  reg.beta = point.beta;
  reg.theta = Rat(params.d() - reg.mu) * point.beta - point.alpha;
  reg.nu = reg.theta / point.beta;
  return reg;
}

NormalizedPoint normalize(const OperatingPoint& point, const Rat& file_size) {
  if (!(file_size > 0)) throw std::domain_error("file size must be positive");
  return NormalizedPoint{point.alpha / file_size, point.beta / file_size};
}

}  // namespace rgc
