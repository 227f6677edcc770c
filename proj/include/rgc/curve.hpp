#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rgc/params.hpp"

namespace rgc {

/// Orientation of the turn a->b->c in the (beta_bar, alpha_bar) plane:
/// positive for a left (counterclockwise) turn, zero for collinear.
int orientation(const NormalizedPoint& a, const NormalizedPoint& b, const NormalizedPoint& c);

/// Piecewise-linear curve in the normalized plane, stored as vertices with
/// strictly increasing beta_bar and no three consecutive collinear vertices
/// (canonical form). Tradeoff curves additionally have non-increasing
/// alpha_bar; that is a property of the generators, not of the container.
class PLCurve {
 public:
  /// Canonicalizes an ordered vertex list: drops exact duplicates, merges
  /// collinear runs. Throws std::invalid_argument if empty or if beta_bar is
  /// not strictly increasing after deduplication.
  static PLCurve from_breakpoints(std::vector<NormalizedPoint> pts);

  const std::vector<NormalizedPoint>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }

  const Rat& beta_min() const { return v_.front().beta_bar; }
  const Rat& beta_max() const { return v_.back().beta_bar; }

  /// alpha_bar on the curve at the given beta_bar; nullopt outside the span.
  std::optional<Rat> value_at(const Rat& beta_bar) const;

  /// True when every turn is in one direction (the curve bounds a convex
  /// region from below).
  bool is_convex() const;

  /// True when alpha_bar is non-increasing along the curve.
  bool is_tradeoff_oriented() const;

 private:
  explicit PLCurve(std::vector<NormalizedPoint> v) : v_(std::move(v)) {}
  std::vector<NormalizedPoint> v_;
};

/// Lower-left convex envelope of a point set: the minimal curve such that
/// every input point lies on or above it. Space-sharing two achievable
/// normalized points achieves their segment, so this is the frontier of the
/// region reachable from the inputs. Throws std::domain_error on empty input.
PLCurve lower_hull(std::vector<NormalizedPoint> pts);

}  // namespace rgc
