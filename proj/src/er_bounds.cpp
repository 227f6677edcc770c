#include "rgc/er_bounds.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace rgc {

namespace {

// Unclamped deficit expressions; branch by the group count r0/r1. These are
// affine in theta for fixed mu, which the curve generator relies on.
std::optional<Rat> eps0_raw(const ParamSet& params, int mu, const Rat& theta, const Rat& beta) {
  const int k = params.k(), d = params.d();
  if (mu < 1 || mu > k - 2) return std::nullopt;
  const int r0 = (k - mu) / (mu + 1);
  if (k - mu < mu + 1) {
    Rat num = Rat(Int(d - k + 1) * (k - mu - 1)) * (beta - theta) - theta;
    Rat den = Rat(Int(d - k + 1) * (k - mu) + 1);
    return num / den;
  }
  Rat c = Rat(d) - Rat(Int(mu + 1) * (r0 + 3), 2) + Rat(2);
  Rat num = c * Rat(Int(r0) * mu) * (beta - theta) - theta;
  Rat den = c * Rat(Int(r0) * (mu + 1)) + Rat(1);
  return num / den;
}

std::optional<Rat> eps1_raw(const ParamSet& params, int mu, const Rat& theta, const Rat& beta) {
  const int k = params.k(), d = params.d();
  if (mu < 0 || mu > k - 3) return std::nullopt;
  const int r1 = (k - mu - 1) / (mu + 2);
  if (k - mu - 1 < mu + 2) {
    Rat num = Rat(d - k + 1) * (Rat(k - mu - 3) * beta + theta);
    Rat den = Rat(Int(d - k + 1) * (k - mu - 1) + 1);
    return num / den;
  }
  Rat c = Rat(d) - Rat(Int(mu + 2) * (r1 + 3), 2) + Rat(2);
  Rat num = c * Rat(r1) * (Rat(mu) * beta + theta);
  Rat den = c * Rat(Int(r1) * (mu + 2)) + Rat(1);
  return num / den;
}

Rat mu_k_minus_2_theta_limit(const ParamSet& params, const Rat& beta) {
  return Rat(params.d() - params.k() + 1) / Rat(params.d() - params.k() + 2) * beta;
}

// Deficit selected by regime; nullopt when no case of the bound applies.
std::optional<Rat> select_delta(const ParamSet& params, const Regime& reg,
                                std::map<std::string, std::string>* detail) {
  const int k = params.k();
  if (reg.mu == 0 && !reg.theta.is_zero()) {
    auto e1 = try_epsilon1(params, reg);
    if (e1 && detail) (*detail)["epsilon1"] = e1->str();
    return e1;
  }
  if (reg.mu >= 1 && reg.mu <= k - 3) {
    auto e0 = try_epsilon0(params, reg);
    auto e1 = try_epsilon1(params, reg);
    if (!e0 && !e1) return std::nullopt;
    if (detail) {
      if (e0) (*detail)["epsilon0"] = e0->str();
      if (e1) (*detail)["epsilon1"] = e1->str();
    }
    return max(e0.value_or(Rat(0)), e1.value_or(Rat(0)));
  }
  if (reg.mu == k - 2) {
    auto e0 = try_epsilon0(params, reg);
    if (e0 && detail) (*detail)["epsilon0"] = e0->str();
    return e0;
  }
  return std::nullopt;
}

void cap_by_cutset(BoundReport* rep, const Rat& cut) {
  if (rep->value > cut) {
    rep->detail["uncapped_value"] = rep->value.str();
    rep->detail["capped_by_cutset"] = "true";
    rep->value = cut;
  }
}

Rat mt_term(const ParamSet& params, const OperatingPoint& pt, int p) {
  const int k = params.k(), d = params.d();
  Rat num = Rat(3 * k - 2 * p) * pt.alpha + Rat(Int(p) * (2 * (d - k) + p + 1), 2) * pt.beta +
            Rat(d - k + 1) * min(pt.alpha, Rat(p) * pt.beta);
  return num / Rat(3);
}

// Splits of the helper rectangle for the improved bound at a given p:
// d-k+1 = a(p-1) + b with a, b >= 0. Every split is a valid tiling; a = 0
// recovers the plain Mohajer-Tandon term.
std::vector<std::pair<int, int>> imt_splits(const ParamSet& params, int p) {
  const int h = params.d() - params.k() + 1;
  if (p <= 1) return {{0, h}};
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= h / (p - 1); ++a) out.push_back({a, h - a * (p - 1)});
  return out;
}

Rat imt_term(const ParamSet& params, const OperatingPoint& pt, int p, int a, int b) {
  const int k = params.k(), d = params.d();
  Rat num = pt.alpha * Rat(2 * (k - p) * (1 + a) + k * (1 + 2 * a)) +
            Rat(b) * min(pt.alpha, Rat(p) * pt.beta) +
            Rat(Int(1 + 2 * a) * p * (2 * (d - k) + p + 1), 2) * pt.beta;
  return num / Rat(3 + 4 * a);
}

struct LinearEval {
  Rat value;      // floor applied on the r-branch only
  Rat affine;     // same branch without the floor
  int r;          // 0 marks the near-MSR branch
};

LinearEval linear_eval(const ParamSet& params, const OperatingPoint& pt) {
  const int n = params.effective_n();
  const Rat dbeta = Rat(params.d()) * pt.beta;
  auto r_form = [&](int r) {
    return (Rat(Int(r) * (r - 1) * n) * pt.alpha + Rat(Int(n) * (n - 1)) * pt.beta) /
           Rat(Int(r) * (r + 1));
  };
  if (pt.alpha * Rat(n - 2) <= dbeta) {
    Rat v = Rat(n - 2) * pt.alpha + pt.beta;
    // Shared endpoint with the r = n-2 interval: both expressions agree.
    if (pt.alpha * Rat(n - 2) == dbeta && v != r_form(n - 2))
      throw std::logic_error("linear bound branches disagree at shared endpoint");
    return LinearEval{v, v, 0};
  }
  int r = static_cast<int>((dbeta / pt.alpha).ceil());
  if (r < 2) r = 2;
  Rat affine = r_form(r);
  if (pt.alpha * Rat(r) == dbeta && r + 1 <= n - 2 && affine != r_form(r + 1))
    throw std::logic_error("linear bound branches disagree at shared endpoint");
  return LinearEval{Rat(affine.floor()), affine, r};
}

// Chain-derived rank lower bound for k = d (on the d+1-node restriction):
// the r-interval pieces plus 2*alpha - beta near MSR. nullopt when the
// strengthening does not apply.
std::optional<Rat> chain_rank_lb(const ParamSet& params, const OperatingPoint& pt, bool rounded) {
  const int k = params.k(), d = params.d();
  const int n = params.effective_n();
  if (k != d || d < 3) return std::nullopt;
  const Rat dbeta = Rat(d) * pt.beta;
  std::optional<Rat> best;
  if (pt.alpha * Rat(n - 2) <= dbeta) best = Rat(2) * pt.alpha - pt.beta;
  for (int r = 2; r <= n - 2; ++r) {
    if (Rat(r) * pt.alpha < dbeta || pt.alpha * Rat(r - 1) > dbeta) continue;
    Rat v = (Rat(Int(2) * r * n) * pt.alpha - Rat(Int(n) * (n - 1)) * pt.beta) /
            Rat(Int(r) * (r + 1));
    if (rounded) v = Rat(v.ceil());
    if (!best || v > *best) best = v;
  }
  return best;
}

Rat rank_dual_core(const ParamSet& params, const OperatingPoint& pt, bool rounded) {
  const int k = params.k();
  const int n = params.effective_n();
  Rat best = Rat(n - k) * pt.alpha;
  for (int j = n - k + 1; j <= n; ++j)
    best += max(pt.alpha - Rat(j - 1) * pt.beta, Rat(0));
  if (auto chain = chain_rank_lb(params, pt, rounded)) best = max(best, *chain);
  return best;
}

}  // namespace

std::string to_string(BoundId id) {
  switch (id) {
    case BoundId::cutset: return "cutset";
    case BoundId::trapezoid: return "trapezoid";
    case BoundId::repair_matrix: return "repair-matrix";
    case BoundId::mohajer_tandon: return "mohajer-tandon";
    case BoundId::improved_mt: return "improved-mt";
    case BoundId::combined: return "combined";
    case BoundId::tian433: return "tian433";
    case BoundId::linear_k_eq_d: return "linear";
    case BoundId::rank_dual: return "rank-dual";
  }
  return "?";
}

std::optional<BoundId> bound_from_string(const std::string& name) {
  std::string s;
  for (char c : name) s += (c == '_') ? '-' : c;
  if (s == "cutset" || s == "fr") return BoundId::cutset;
  if (s == "trapezoid") return BoundId::trapezoid;
  if (s == "repair-matrix") return BoundId::repair_matrix;
  if (s == "mohajer-tandon" || s == "mt") return BoundId::mohajer_tandon;
  if (s == "improved-mt") return BoundId::improved_mt;
  if (s == "combined") return BoundId::combined;
  if (s == "tian433") return BoundId::tian433;
  if (s == "linear" || s == "linear-k-eq-d") return BoundId::linear_k_eq_d;
  if (s == "rank-dual") return BoundId::rank_dual;
  return std::nullopt;
}

TrapezoidShape::TrapezoidShape(const ParamSet& params, int q, int t) : q(q), t(t) {
  if (q < 0 || q > params.k()) throw std::domain_error("trapezoid q out of range [0, k]");
  if (t < 0 || t > params.k() - q) throw std::domain_error("trapezoid t out of range [0, k-q]");
  cell_count_rect = Int(params.d() + 1 - params.k()) * (params.k() - q);
  cell_count_tri = binomial(params.k() - q, 2);
}

Rat trapezoid_bound(const ParamSet& params, const OperatingPoint& point, int q) {
  validate_point(params, point);
  if (q < 0 || q > params.k()) throw std::domain_error("trapezoid q out of range [0, k]");
  const int k = params.k(), d = params.d();
  return Rat(q) * point.alpha +
         (Rat(binomial(k - q, 2)) + Rat(Int(d + 1 - k) * (k - q))) * point.beta;
}

std::pair<Rat, Rat> shah_exception_region(const ParamSet& params) {
  if (params.k() < 3) throw NotApplicableError("exception region requires k >= 3");
  const int g = params.d() - params.k() + 1;
  return {Rat(g), Rat(g + 1) - Rat(g) / Rat(g + 1)};
}

std::optional<Rat> try_epsilon0(const ParamSet& params, const Regime& regime) {
  if (regime.mu < 1 || regime.mu > params.k() - 2) return std::nullopt;
  if (regime.mu == params.k() - 2 &&
      !(regime.theta < mu_k_minus_2_theta_limit(params, regime.beta)))
    return std::nullopt;
  auto v = eps0_raw(params, regime.mu, regime.theta, regime.beta);
  return max(*v, Rat(0));
}

std::optional<Rat> try_epsilon1(const ParamSet& params, const Regime& regime) {
  if (regime.mu < 0 || regime.mu > params.k() - 3) return std::nullopt;
  if (regime.mu == 0 && regime.theta.is_zero()) return std::nullopt;
  auto v = eps1_raw(params, regime.mu, regime.theta, regime.beta);
  return max(*v, Rat(0));
}

Rat epsilon0(const ParamSet& params, const Regime& regime) {
  auto v = try_epsilon0(params, regime);
  if (!v)
    throw NotApplicableError(
        "epsilon0 requires mu in {1..k-2}, with theta < (d-k+1)/(d-k+2)*beta when mu = k-2");
  return *v;
}

Rat epsilon1(const ParamSet& params, const Regime& regime) {
  auto v = try_epsilon1(params, regime);
  if (!v) throw NotApplicableError("epsilon1 requires mu in {0..k-3}, with theta != 0 when mu = 0");
  return *v;
}

BoundReport repair_matrix_bound(const ParamSet& params, const OperatingPoint& point) {
  validate_point(params, point);
  Rat cut = cut_set_bound(params, point);
  BoundReport rep;
  rep.id = BoundId::repair_matrix;
  rep.regime = regime_of(params, point);
  rep.detail["cutset"] = cut.str();
  auto delta = select_delta(params, *rep.regime, &rep.detail);
  if (delta) {
    rep.applicable = true;
    rep.detail["delta"] = delta->str();
    rep.value = cut - *delta;
  } else {
    rep.applicable = false;
    rep.detail["fallback"] = "cutset";
    rep.value = cut;
  }
  return rep;
}

BoundReport mohajer_tandon_bound(const ParamSet& params, const OperatingPoint& point) {
  validate_point(params, point);
  BoundReport rep;
  rep.id = BoundId::mohajer_tandon;
  rep.regime = regime_of(params, point);
  int best_p = 0;
  Rat best = mt_term(params, point, 0);
  for (int p = 1; p <= params.k(); ++p) {
    Rat v = mt_term(params, point, p);
    if (v < best) {
      best = v;
      best_p = p;
    }
  }
  rep.value = best;
  rep.detail["p"] = std::to_string(best_p);
  cap_by_cutset(&rep, cut_set_bound(params, point));
  return rep;
}

BoundReport improved_mt_bound(const ParamSet& params, const OperatingPoint& point) {
  validate_point(params, point);
  BoundReport rep;
  rep.id = BoundId::improved_mt;
  rep.regime = regime_of(params, point);
  std::optional<Rat> best;
  int best_p = 0, best_a = 0, best_b = 0;
  for (int p = 0; p <= params.k(); ++p) {
    for (auto [a, b] : imt_splits(params, p)) {
      Rat v = imt_term(params, point, p, a, b);
      if (!best || v < *best) {
        best = v;
        best_p = p;
        best_a = a;
        best_b = b;
      }
    }
  }
  rep.value = *best;
  rep.detail["p"] = std::to_string(best_p);
  rep.detail["a"] = std::to_string(best_a);
  rep.detail["b"] = std::to_string(best_b);
  cap_by_cutset(&rep, cut_set_bound(params, point));
  return rep;
}

Rat tian433_bound(const OperatingPoint& point) {
  validate_point(ParamSet(4, 3, 3), point);
  return (Rat(4) * point.alpha + Rat(6) * point.beta) / Rat(3);
}

BoundReport linear_bound_k_eq_d(const ParamSet& params, const OperatingPoint& point) {
  if (params.k() != params.d()) throw NotApplicableError("linear bound requires k = d");
  if (params.effective_n() < 4) throw NotApplicableError("linear bound requires d >= 3");
  validate_point(params, point);
  auto ev = linear_eval(params, point);
  BoundReport rep;
  rep.id = BoundId::linear_k_eq_d;
  rep.regime = regime_of(params, point);
  rep.value = ev.value;
  if (ev.r == 0)
    rep.detail["branch"] = "near-msr";
  else
    rep.detail["r"] = std::to_string(ev.r);
  cap_by_cutset(&rep, cut_set_bound(params, point));
  return rep;
}

Rat rank_dual_bound(const ParamSet& params, const OperatingPoint& point) {
  validate_point(params, point);
  return rank_dual_core(params, point, /*rounded=*/true);
}

BoundReport combined_bound(const ParamSet& params, const OperatingPoint& point) {
  validate_point(params, point);
  BoundReport b1 = repair_matrix_bound(params, point);
  BoundReport b2 = improved_mt_bound(params, point);
  Rat cut = cut_set_bound(params, point);
  Rat bq = trapezoid_bound(params, point, 0);
  int bq_q = 0;
  for (int q = 1; q <= params.k(); ++q) {
    Rat v = trapezoid_bound(params, point, q);
    if (v < bq) {
      bq = v;
      bq_q = q;
    }
  }
  BoundReport rep;
  rep.id = BoundId::combined;
  rep.regime = b1.regime;
  rep.detail["repair_matrix"] = b1.value.str();
  rep.detail["improved_mt"] = b2.value.str();
  rep.detail["trapezoid_min"] = bq.str();
  rep.detail["trapezoid_q"] = std::to_string(bq_q);
  rep.detail["cutset"] = cut.str();
  rep.value = b1.value;
  rep.detail["active"] = "repair-matrix";
  if (b2.value < rep.value) {
    rep.value = b2.value;
    rep.detail["active"] = "improved-mt";
  }
  if (bq < rep.value) {
    rep.value = bq;
    rep.detail["active"] = "trapezoid";
  }
  if (cut < rep.value) {
    rep.value = cut;
    rep.detail["active"] = "cutset";
  }
  return rep;
}

BoundReport evaluate_bound(const ParamSet& params, const OperatingPoint& point, BoundId id) {
  switch (id) {
    case BoundId::cutset: {
      validate_point(params, point);
      BoundReport rep;
      rep.id = BoundId::cutset;
      rep.regime = regime_of(params, point);
      rep.value = cut_set_bound(params, point);
      return rep;
    }
    case BoundId::trapezoid: {
      validate_point(params, point);
      BoundReport rep;
      rep.id = BoundId::trapezoid;
      rep.regime = regime_of(params, point);
      rep.value = trapezoid_bound(params, point, 0);
      int best_q = 0;
      for (int q = 1; q <= params.k(); ++q) {
        Rat v = trapezoid_bound(params, point, q);
        if (v < rep.value) {
          rep.value = v;
          best_q = q;
        }
      }
      rep.detail["q"] = std::to_string(best_q);
      cap_by_cutset(&rep, cut_set_bound(params, point));
      return rep;
    }
    case BoundId::repair_matrix:
      return repair_matrix_bound(params, point);
    case BoundId::mohajer_tandon:
      return mohajer_tandon_bound(params, point);
    case BoundId::improved_mt:
      return improved_mt_bound(params, point);
    case BoundId::combined:
      return combined_bound(params, point);
    case BoundId::tian433: {
      if (params.n() != 4 || params.k() != 3 || params.d() != 3)
        throw NotApplicableError("tian433 bound applies to (4,3,3) only");
      BoundReport rep;
      rep.id = BoundId::tian433;
      rep.regime = regime_of(params, point);
      rep.value = tian433_bound(point);
      rep.detail["raw"] = rep.value.str();
      cap_by_cutset(&rep, cut_set_bound(params, point));
      return rep;
    }
    case BoundId::linear_k_eq_d:
      return linear_bound_k_eq_d(params, point);
    case BoundId::rank_dual: {
      validate_point(params, point);
      Rat rank = rank_dual_bound(params, point);
      BoundReport rep;
      rep.id = BoundId::rank_dual;
      rep.regime = regime_of(params, point);
      rep.detail["rank_lower_bound"] = rank.str();
      rep.value = Rat(params.effective_n()) * point.alpha - rank;
      cap_by_cutset(&rep, cut_set_bound(params, point));
      return rep;
    }
  }
  throw std::logic_error("unknown bound id");
}

namespace {

// Constituents of an outer bound as functions of alpha at beta = 1. The bound
// value is the minimum over parts; each part must be affine between
// consecutive candidate breakpoints.
struct CurveSpec {
  std::vector<Rat> candidates;
  std::function<std::vector<Rat>(const Rat&)> parts;
};

void add_corner_candidates(const ParamSet& params, std::vector<Rat>* cands) {
  for (int mu = 0; mu <= params.k() - 1; ++mu) cands->push_back(Rat(params.d() - mu));
}

// Roots of the deficit-case switches inside each tradeoff corner interval.
void add_repair_matrix_candidates(const ParamSet& params, std::vector<Rat>* cands) {
  const int k = params.k(), d = params.d();
  const Rat beta = 1;
  add_corner_candidates(params, cands);
  // Case boundary for mu = k-2.
  cands->push_back(Rat(d - k + 2) - mu_k_minus_2_theta_limit(params, beta));
  auto affine_root = [&](const Rat& v0, const Rat& vh, const Rat& h) -> std::optional<Rat> {
    // f(theta) = v0 + (vh - v0) * theta / h; root where f = 0.
    if (vh == v0) return std::nullopt;
    return -v0 * h / (vh - v0);
  };
  const Rat h = Rat(1, 2);
  for (int mu = 1; mu <= k - 2; ++mu) {
    auto e0_0 = eps0_raw(params, mu, Rat(0), beta);
    auto e0_h = eps0_raw(params, mu, h, beta);
    auto e1_0 = eps1_raw(params, mu, Rat(0), beta);
    auto e1_h = eps1_raw(params, mu, h, beta);
    std::vector<std::optional<Rat>> roots;
    if (e0_0) roots.push_back(affine_root(*e0_0, *e0_h, h));
    if (e1_0) roots.push_back(affine_root(*e1_0, *e1_h, h));
    if (e0_0 && e1_0) roots.push_back(affine_root(*e0_0 - *e1_0, *e0_h - *e1_h, h));
    for (const auto& r : roots)
      if (r && *r > 0 && *r < beta) cands->push_back(Rat(d - mu) - *r);
  }
}

CurveSpec make_curve_spec(const ParamSet& params, BoundId id) {
  CurveSpec spec;
  const Rat beta = 1;
  auto cutset_at = [params, beta](const Rat& alpha) {
    Rat sum = 0;
    for (int i = 0; i < params.k(); ++i) sum += min(alpha, Rat(params.d() - i) * beta);
    return sum;
  };
  switch (id) {
    case BoundId::cutset:
      add_corner_candidates(params, &spec.candidates);
      spec.parts = [cutset_at](const Rat& a) { return std::vector<Rat>{cutset_at(a)}; };
      return spec;
    case BoundId::trapezoid: {
      add_corner_candidates(params, &spec.candidates);
      spec.parts = [params, beta, cutset_at](const Rat& a) {
        std::vector<Rat> out{cutset_at(a)};
        for (int q = 0; q <= params.k(); ++q)
          out.push_back(trapezoid_bound(params, OperatingPoint{a, beta}, q));
        return out;
      };
      return spec;
    }
    case BoundId::repair_matrix:
      add_repair_matrix_candidates(params, &spec.candidates);
      spec.parts = [params, beta](const Rat& a) {
        return std::vector<Rat>{repair_matrix_bound(params, OperatingPoint{a, beta}).value};
      };
      return spec;
    case BoundId::mohajer_tandon: {
      add_corner_candidates(params, &spec.candidates);
      for (int p = 1; p <= params.k(); ++p) spec.candidates.push_back(Rat(p));
      spec.parts = [params, beta, cutset_at](const Rat& a) {
        std::vector<Rat> out{cutset_at(a)};
        OperatingPoint pt{a, beta};
        for (int p = 0; p <= params.k(); ++p) out.push_back(mt_term(params, pt, p));
        return out;
      };
      return spec;
    }
    case BoundId::improved_mt: {
      add_corner_candidates(params, &spec.candidates);
      for (int p = 1; p <= params.k(); ++p) spec.candidates.push_back(Rat(p));
      spec.parts = [params, beta, cutset_at](const Rat& a) {
        std::vector<Rat> out{cutset_at(a)};
        OperatingPoint pt{a, beta};
        for (int p = 0; p <= params.k(); ++p)
          for (auto [sa, sb] : imt_splits(params, p)) out.push_back(imt_term(params, pt, p, sa, sb));
        return out;
      };
      return spec;
    }
    case BoundId::combined: {
      add_repair_matrix_candidates(params, &spec.candidates);
      for (int p = 1; p <= params.k(); ++p) spec.candidates.push_back(Rat(p));
      spec.parts = [params, beta, cutset_at](const Rat& a) {
        OperatingPoint pt{a, beta};
        std::vector<Rat> out{cutset_at(a), repair_matrix_bound(params, pt).value};
        for (int p = 0; p <= params.k(); ++p)
          for (auto [sa, sb] : imt_splits(params, p)) out.push_back(imt_term(params, pt, p, sa, sb));
        for (int q = 0; q <= params.k(); ++q) out.push_back(trapezoid_bound(params, pt, q));
        return out;
      };
      return spec;
    }
    case BoundId::tian433: {
      if (params.n() != 4 || params.k() != 3 || params.d() != 3)
        throw NotApplicableError("tian433 bound applies to (4,3,3) only");
      add_corner_candidates(params, &spec.candidates);
      spec.parts = [cutset_at](const Rat& a) {
        return std::vector<Rat>{cutset_at(a), (Rat(4) * a + Rat(6)) / Rat(3)};
      };
      return spec;
    }
    case BoundId::linear_k_eq_d: {
      if (params.k() != params.d()) throw NotApplicableError("linear bound requires k = d");
      const int n = params.effective_n();
      if (n < 4) throw NotApplicableError("linear bound requires d >= 3");
      add_corner_candidates(params, &spec.candidates);
      for (int r = 2; r <= n - 2; ++r) spec.candidates.push_back(Rat(params.d(), Int(r)));
      spec.parts = [params, beta, cutset_at](const Rat& a) {
        return std::vector<Rat>{cutset_at(a),
                                linear_eval(params, OperatingPoint{a, beta}).affine};
      };
      return spec;
    }
    case BoundId::rank_dual: {
      const int n = params.effective_n();
      add_corner_candidates(params, &spec.candidates);
      for (int j = n - params.k() + 1; j <= n; ++j) spec.candidates.push_back(Rat(j - 1));
      if (params.k() == params.d() && params.d() >= 3)
        for (int r = 2; r <= n - 2; ++r) spec.candidates.push_back(Rat(params.d(), Int(r)));
      // The file-size form of the dual-code baseline is exactly the cut-set
      // value; the chain strengthening enters as a separate min-part so that
      // crossings between the two are located exactly.
      spec.parts = [params, beta, n, cutset_at](const Rat& a) {
        std::vector<Rat> out{cutset_at(a)};
        if (auto chain = chain_rank_lb(params, OperatingPoint{a, beta}, /*rounded=*/false))
          out.push_back(Rat(n) * a - *chain);
        return out;
      };
      return spec;
    }
  }
  throw std::logic_error("unknown bound id");
}

}  // namespace

PLCurve normalized_outer_curve(const ParamSet& params, BoundId id) {
  CurveSpec spec = make_curve_spec(params, id);
  const Rat lo = Rat(params.d() - params.k() + 1);
  const Rat hi = Rat(params.d());
  std::vector<Rat> cands{lo, hi};
  for (const Rat& c : spec.candidates)
    if (c > lo && c < hi) cands.push_back(c);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  // Each part is affine between consecutive candidates, so breakpoints of the
  // minimum are (strict) pairwise crossings inside those segments.
  std::vector<Rat> refined = cands;
  for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
    std::vector<Rat> v1 = spec.parts(cands[i]);
    std::vector<Rat> v2 = spec.parts(cands[i + 1]);
    for (std::size_t s = 0; s < v1.size(); ++s)
      for (std::size_t t = s + 1; t < v1.size(); ++t) {
        Rat d1 = v1[s] - v1[t];
        Rat d2 = v2[s] - v2[t];
        if (d1.sign() * d2.sign() < 0)
          refined.push_back(cands[i] + (cands[i + 1] - cands[i]) * d1 / (d1 - d2));
      }
  }
  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());

  auto value_at = [&spec](const Rat& a) {
    std::vector<Rat> v = spec.parts(a);
    Rat m = v.front();
    for (const Rat& x : v) m = min(m, x);
    return m;
  };
  std::vector<Rat> values;
  values.reserve(refined.size());
  for (const Rat& a : refined) values.push_back(value_at(a));
  for (std::size_t i = 0; i + 1 < refined.size(); ++i) {
    Rat mid = (refined[i] + refined[i + 1]) / Rat(2);
    if (value_at(mid) != (values[i] + values[i + 1]) / Rat(2))
      throw std::logic_error("outer-bound curve: bound is not affine between breakpoints at alpha=" +
                             mid.str());
  }

  std::vector<NormalizedPoint> pts;
  pts.reserve(refined.size());
  for (std::size_t i = refined.size(); i-- > 0;)
    pts.push_back(normalize(OperatingPoint{refined[i], Rat(1)}, values[i]));
  return PLCurve::from_breakpoints(std::move(pts));
}

}  // namespace rgc
