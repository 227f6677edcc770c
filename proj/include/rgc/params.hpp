#pragma once

#include <string>

#include "rgc/rational.hpp"

namespace rgc {

/// Code parameters (n, k, d): n storage nodes, any k recover the file, a
/// failed node is rebuilt from d helpers. Valid range is 2 <= k <= d <= n-1.
class ParamSet {
 public:
  ParamSet(int n, int k, int d);  // throws std::domain_error if out of range

  /// Skips range validation; for deliberately degenerate test inputs only.
  static ParamSet unchecked(int n, int k, int d);

  int n() const { return n_; }
  int k() const { return k_; }
  int d() const { return d_; }

  /// Node count after restriction to d+1 nodes. All file-size bounds are
  /// computed on this reduced code; the bound then carries over to larger n.
  int effective_n() const { return d_ + 1; }

  std::string str() const;

 private:
  ParamSet() = default;
  int n_ = 0, k_ = 0, d_ = 0;
};

/// A storage/repair operating point: alpha symbols per node, beta symbols
/// sent per helper per repair. Validity (beta > 0, beta <= alpha <= d*beta)
/// depends on the parameter set and is checked by validate_point.
struct OperatingPoint {
  Rat alpha;
  Rat beta;
  bool operator==(const OperatingPoint&) const = default;
};

/// Throws std::domain_error naming the violated inequality.
void validate_point(const ParamSet& params, const OperatingPoint& point);

/// Position of an operating point between tradeoff corners:
/// alpha = (d - mu)*beta - theta with theta in [0, beta), nu = theta/beta.
/// Points on the tradeoff have mu in {0, ..., k-1} with theta = 0 forced at
/// mu = k-1 (the MSR corner); below the MSR ratio alpha < (d-k+1)*beta the
/// decomposition still exists with mu up to d-1, and bound evaluators treat
/// such points as outside their applicable cases.
struct Regime {
  int mu = 0;
  Rat theta;
  Rat nu;
  Rat beta;  // scale of the point the regime was derived from

  Rat alpha(const ParamSet& params) const {
    return Rat(params.d() - mu) * beta - theta;
  }
};

/// Unique decomposition of a valid operating point. Throws std::domain_error
/// when alpha < beta or alpha > d*beta.
Regime regime_of(const ParamSet& params, const OperatingPoint& point);

/// An operating point divided by the file size: (alpha/B, beta/B).
struct NormalizedPoint {
  Rat alpha_bar;
  Rat beta_bar;
  bool operator==(const NormalizedPoint&) const = default;
};

/// Throws std::domain_error for non-positive file size.
NormalizedPoint normalize(const OperatingPoint& point, const Rat& file_size);

}  // namespace rgc
