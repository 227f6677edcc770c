#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rgc/curve.hpp"
#include "rgc/fr_tradeoff.hpp"
#include "rgc/params.hpp"

namespace rgc {

/// Raised when a bound (or case of a bound) is not defined for the given
/// parameters or regime, as opposed to the inputs being malformed.
class NotApplicableError : public std::domain_error {
 public:
  explicit NotApplicableError(const std::string& what) : std::domain_error(what) {}
};

enum class BoundId {
  cutset,
  trapezoid,
  repair_matrix,
  mohajer_tandon,
  improved_mt,
  combined,
  tian433,
  linear_k_eq_d,
  rank_dual,
};

std::string to_string(BoundId id);
/// Accepts the CLI spellings ("repair-matrix", "improved-mt", "linear", ...)
/// as well as the enum spellings with underscores.
std::optional<BoundId> bound_from_string(const std::string& name);

/// One bound evaluated at one operating point. `detail` carries the
/// intermediate quantities that determined the value (epsilon_0, epsilon_1,
/// delta, minimizing p/q/r, a, b, ...) as canonical rational strings.
/// When `applicable` is false the value falls back to the cut-set bound.
struct BoundReport {
  BoundId id = BoundId::cutset;
  Rat value;
  bool applicable = true;
  std::optional<Regime> regime;
  std::map<std::string, std::string> detail;
};

/// Cell counts of a trapezoidal configuration (prefix of q nodes plus the
/// repair data regenerating the remaining k-q of the first k): the rectangle
/// holds (d+1-k)(k-q) cells, the triangle C(k-q, 2). t selects a
/// sub-trapezoid repairing only the first t of those nodes.
struct TrapezoidShape {
  int q = 0;
  int t = 0;
  Int cell_count_rect;
  Int cell_count_tri;

  TrapezoidShape(const ParamSet& params, int q, int t);
};

/// B_q = q*alpha + C(k-q,2)*beta + (d+1-k)(k-q)*beta, 0 <= q <= k.
Rat trapezoid_bound(const ParamSet& params, const OperatingPoint& point, int q);

/// The alpha/beta interval [d-k+1, (d-k+2) - (d-k+1)/(d-k+2)] adjacent to the
/// MSR ratio where operating on the FR tradeoff is not ruled out. Requires
/// k >= 3.
std::pair<Rat, Rat> shah_exception_region(const ParamSet& params);

/// Lower bounds on the deficit between the optimal FR file size and any ER
/// file size, per regime. epsilon0 applies for mu in {1..k-2} (with
/// theta < beta*(d-k+1)/(d-k+2) when mu = k-2); epsilon1 for mu in {0..k-3}
/// (with theta != 0 when mu = 0). Values are clamped at zero since the FR
/// bound always holds. The throwing forms raise NotApplicableError outside
/// the stated ranges; the try_ forms return nullopt instead.
Rat epsilon0(const ParamSet& params, const Regime& regime);
Rat epsilon1(const ParamSet& params, const Regime& regime);
std::optional<Rat> try_epsilon0(const ParamSet& params, const Regime& regime);
std::optional<Rat> try_epsilon1(const ParamSet& params, const Regime& regime);

/// Repair-matrix bound: cut-set value minus the applicable deficit
/// (epsilon1 for mu=0 with theta!=0, max of both for mu in {1..k-3},
/// epsilon0 for mu=k-2 below the theta threshold). Outside those cases the
/// report is marked not applicable and carries the cut-set value.
BoundReport repair_matrix_bound(const ParamSet& params, const OperatingPoint& point);

/// Mohajer-Tandon bound: minimum over p = 0..k of
/// [(3k-2p)alpha + p(2(d-k)+p+1)beta/2 + (d-k+1)min{alpha, p beta}] / 3.
BoundReport mohajer_tandon_bound(const ParamSet& params, const OperatingPoint& point);

/// Improved Mohajer-Tandon bound: for each p, the helper-data rectangle of
/// height d-k+1 is cut into a full-width strips of height p-1 (counted by
/// triangle symmetry) plus a remainder of height b = d-k+1 - a(p-1); every
/// split with a >= 0, b >= 0 yields a valid bound, and the minimum over p and
/// a is taken. With a = 0 each term reduces to the Mohajer-Tandon term, so
/// the result never exceeds mohajer_tandon_bound and coincides with it when
/// k = d.
BoundReport improved_mt_bound(const ParamSet& params, const OperatingPoint& point);

/// The (4,3,3) bound 3B <= 4*alpha + 6*beta, returned as (4a+6b)/3.
Rat tian433_bound(const OperatingPoint& point);

/// File-size bound for linear codes with k = d (computed on the restriction
/// to d+1 nodes): floor[(r(r-1)n alpha + n(n-1) beta) / (r^2+r)] on the
/// interval d beta/r <= alpha <= d beta/(r-1) for 2 <= r <= n-2, and
/// (n-2) alpha + beta on the near-MSR interval. Throws NotApplicableError
/// when k != d or d < 3.
BoundReport linear_bound_k_eq_d(const ParamSet& params, const OperatingPoint& point);

/// Lower bound on the rank of a parity-check matrix of a linear ER code:
/// the dual-code data-collection bound, strengthened for k = d by the
/// intersection-chain bound ceil[(2 r n alpha - n(n-1) beta) / (r^2+r)] and
/// 2*alpha - beta near MSR. The corresponding file-size bound is
/// n*alpha minus this value.
Rat rank_dual_bound(const ParamSet& params, const OperatingPoint& point);

/// min{repair-matrix, improved Mohajer-Tandon}, additionally intersected
/// with the cut-set value and min_q B_q. detail["active"] names the bound
/// attaining the minimum.
BoundReport combined_bound(const ParamSet& params, const OperatingPoint& point);

/// Uniform dispatch by BoundId. Every report honors value <= cut-set;
/// detail["capped_by_cutset"] marks the (rare) case where the cap bit.
/// Throws NotApplicableError where the underlying bound does (tian433 off
/// (4,3,3), linear_k_eq_d with k != d).
BoundReport evaluate_bound(const ParamSet& params, const OperatingPoint& point, BoundId id);

/// Exact outer-bound curve in the normalized plane: beta is fixed to 1,
/// alpha sweeps the tradeoff interval [(d-k+1), d] across every breakpoint
/// of the chosen bound, and breakpoint images are normalized. Each segment
/// of the bound is affine in alpha, which the generator verifies exactly.
PLCurve normalized_outer_curve(const ParamSet& params, BoundId id);

}  // namespace rgc
