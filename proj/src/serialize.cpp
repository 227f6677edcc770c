#include "rgc/serialize.hpp"

#include <cstdio>

namespace rgc {

std::string approx_str(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
  return buf;
}

ordered_json matrix_to_json(const GFMatrix& m) {
  ordered_json j;
  j["field"] = m.field();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json data = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

GFMatrix matrix_from_json(const nlohmann::json& j) {
  int field = j.at("field").get<int>();
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  GFMatrix m(field, rows, cols);
  const auto& data = j.at("data");
  if (data.size() != rows) throw std::invalid_argument("matrix data has wrong row count");
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols) throw std::invalid_argument("matrix data has wrong column count");
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, data[i][c].get<uint32_t>());
  }
  return m;
}

ordered_json block_matrix_to_json(const BlockMatrix& h) {
  ordered_json j = matrix_to_json(h.base);
  j["n"] = h.n;
  j["alpha"] = h.alpha;
  j["beta"] = h.beta_cap;
  return j;
}

BlockMatrix block_matrix_from_json(const nlohmann::json& j) {
  BlockMatrix h;
  h.base = matrix_from_json(j);
  h.n = j.at("n").get<int>();
  h.alpha = j.at("alpha").get<int>();
  h.beta_cap = j.at("beta").get<int>();
  h.check_shape();
  return h;
}

ordered_json regime_to_json(const Regime& reg) {
  ordered_json j;
  j["mu"] = reg.mu;
  j["theta"] = reg.theta.str();
  j["nu"] = reg.nu.str();
  return j;
}

ordered_json bound_report_to_json(const BoundReport& rep) {
  ordered_json j;
  j["bound"] = to_string(rep.id);
  j["value"] = rep.value.str();
  j["value_approx"] = approx_str(rep.value);
  j["applicable"] = rep.applicable;
  if (rep.regime) j["regime"] = regime_to_json(*rep.regime);
  ordered_json detail = ordered_json::object();
  for (const auto& [k, v] : rep.detail) detail[k] = v;
  j["detail"] = std::move(detail);
  return j;
}

ordered_json curve_to_json(const PLCurve& curve) {
  ordered_json verts = ordered_json::array();
  for (const auto& v : curve.vertices()) {
    ordered_json p;
    p["beta_bar"] = v.beta_bar.str();
    p["alpha_bar"] = v.alpha_bar.str();
    p["beta_bar_approx"] = approx_str(v.beta_bar);
    p["alpha_bar_approx"] = approx_str(v.alpha_bar);
    verts.push_back(std::move(p));
  }
  return verts;
}

ordered_json check_report_to_json(const CheckReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  ordered_json out;
  out["ok"] = rep.ok();
  out["checks"] = std::move(checks);
  return out;
}

ordered_json gap_samples_to_json(const std::vector<GapSample>& samples) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : samples) {
    ordered_json j;
    j["beta_bar"] = s.beta_bar.str();
    j["alpha_gap"] = s.alpha_gap.str();
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string curve_to_csv(const PLCurve& curve) {
  std::string out = "beta_bar,alpha_bar,beta_bar_frac,alpha_bar_frac\n";
  for (const auto& v : curve.vertices()) {
    out += approx_str(v.beta_bar);
    out += ',';
    out += approx_str(v.alpha_bar);
    out += ',';
    out += v.beta_bar.str();
    out += ',';
    out += v.alpha_bar.str();
    out += '\n';
  }
  return out;
}

}  // namespace rgc
