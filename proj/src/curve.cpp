#include "rgc/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgc {

int orientation(const NormalizedPoint& a, const NormalizedPoint& b, const NormalizedPoint& c) {
  Rat cross = (b.beta_bar - a.beta_bar) * (c.alpha_bar - a.alpha_bar) -
              (b.alpha_bar - a.alpha_bar) * (c.beta_bar - a.beta_bar);
  return cross.sign();
}

PLCurve PLCurve::from_breakpoints(std::vector<NormalizedPoint> pts) {
  if (pts.empty()) throw std::invalid_argument("curve needs at least one vertex");
  std::vector<NormalizedPoint> v;
  v.reserve(pts.size());
  for (auto& p : pts) {
    if (!v.empty() && p == v.back()) continue;
    if (!v.empty() && !(v.back().beta_bar < p.beta_bar))
      throw std::invalid_argument("curve breakpoints must have strictly increasing beta_bar");
    while (v.size() >= 2 && orientation(v[v.size() - 2], v.back(), p) == 0) v.pop_back();
    v.push_back(std::move(p));
  }
  return PLCurve(std::move(v));
}

std::optional<Rat> PLCurve::value_at(const Rat& beta_bar) const {
  if (beta_bar < beta_min() || beta_bar > beta_max()) return std::nullopt;
  auto it = std::lower_bound(v_.begin(), v_.end(), beta_bar,
                             [](const NormalizedPoint& p, const Rat& b) { return p.beta_bar < b; });
  if (it != v_.end() && it->beta_bar == beta_bar) return it->alpha_bar;
  const NormalizedPoint& hi = *it;
  const NormalizedPoint& lo = *(it - 1);
  Rat t = (beta_bar - lo.beta_bar) / (hi.beta_bar - lo.beta_bar);
  return lo.alpha_bar + (hi.alpha_bar - lo.alpha_bar) * t;
}

bool PLCurve::is_convex() const {
  for (std::size_t i = 2; i < v_.size(); ++i)
    if (orientation(v_[i - 2], v_[i - 1], v_[i]) <= 0) return false;
  return true;
}

bool PLCurve::is_tradeoff_oriented() const {
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (v_[i].alpha_bar > v_[i - 1].alpha_bar) return false;
  return true;
}

PLCurve lower_hull(std::vector<NormalizedPoint> pts) {
  if (pts.empty()) throw std::domain_error("lower_hull of empty point set");
  std::sort(pts.begin(), pts.end(), [](const NormalizedPoint& a, const NormalizedPoint& b) {
    if (a.beta_bar != b.beta_bar) return a.beta_bar < b.beta_bar;
    return a.alpha_bar < b.alpha_bar;
  });
  // Of points sharing a beta_bar only the lowest can be on the envelope.
  std::vector<NormalizedPoint> uniq;
  for (auto& p : pts) {
    if (!uniq.empty() && uniq.back().beta_bar == p.beta_bar) continue;
    uniq.push_back(std::move(p));
  }
  std::vector<NormalizedPoint> chain;
  for (auto& p : uniq) {
    while (chain.size() >= 2 && orientation(chain[chain.size() - 2], chain.back(), p) <= 0)
      chain.pop_back();
    chain.push_back(std::move(p));
  }
  return PLCurve::from_breakpoints(std::move(chain));
}

}  // namespace rgc
