// rgc - exact calculator for regenerating-code storage/repair-bandwidth
// tradeoff bounds, normalized tradeoff curves, and finite-field verification
// of the parity-check rank machinery behind the linear-code bounds.
//
// Exit codes: 0 success, 2 argument error, 3 bound not applicable,
// 4 verification failure, 5 I/O error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgc/achievability.hpp"
#include "rgc/er_bounds.hpp"
#include "rgc/fr_tradeoff.hpp"
#include "rgc/layered.hpp"
#include "rgc/serialize.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using rgc::ordered_json;

int fail(int code, const std::string& kind, const std::string& message) {
  ordered_json err;
  err["error"]["code"] = kind;
  err["error"]["message"] = message;
  std::cerr << err.dump(2) << "\n";
  return code;
}

ordered_json make_envelope(const std::string& command, const ordered_json& params,
                           ordered_json results,
                           std::chrono::steady_clock::time_point start) {
  ordered_json env;
  env["tool"] = "rgc";
  env["tool_version"] = kVersion;
  env["command"] = command;
  env["params"] = params;
  env["results"] = std::move(results);
  env["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count();
  return env;
}

struct PointArgs {
  int n = 0, k = 0, d = 0;
  std::string alpha, beta;
};

rgc::Catalogue load_catalogue(const std::string& path) {
  if (path.empty()) return rgc::Catalogue::builtin();
  return rgc::Catalogue::from_json_file(path);
}

std::vector<rgc::BoundId> bounds_for(const rgc::ParamSet& params) {
  using rgc::BoundId;
  std::vector<BoundId> ids{BoundId::cutset,        BoundId::trapezoid,
                           BoundId::repair_matrix, BoundId::mohajer_tandon,
                           BoundId::improved_mt,   BoundId::combined};
  if (params.n() == 4 && params.k() == 3 && params.d() == 3) ids.push_back(BoundId::tian433);
  if (params.k() == params.d() && params.d() >= 3) {
    ids.push_back(BoundId::linear_k_eq_d);
    ids.push_back(BoundId::rank_dual);
  }
  return ids;
}

int run_bounds(const PointArgs& a, const std::string& bound_name, const std::string& command) {
  auto start = std::chrono::steady_clock::now();
  rgc::ParamSet params(a.n, a.k, a.d);
  rgc::OperatingPoint pt{rgc::Rat::parse(a.alpha), rgc::Rat::parse(a.beta)};
  ordered_json jparams;
  jparams["n"] = a.n;
  jparams["k"] = a.k;
  jparams["d"] = a.d;
  jparams["alpha"] = pt.alpha.str();
  jparams["beta"] = pt.beta.str();

  ordered_json results = ordered_json::array();
  if (bound_name == "all") {
    for (rgc::BoundId id : bounds_for(params))
      results.push_back(rgc::bound_report_to_json(rgc::evaluate_bound(params, pt, id)));
  } else {
    auto id = rgc::bound_from_string(bound_name);
    if (!id) return fail(2, "argument", "unknown bound: " + bound_name);
    results.push_back(rgc::bound_report_to_json(rgc::evaluate_bound(params, pt, *id)));
  }
  std::cout << make_envelope(command, jparams, std::move(results), start).dump(2) << "\n";
  return 0;
}

int run_curve(int n, int k, int d, const std::string& bound_name, const std::string& format,
              const std::string& catalogue_path, const std::string& command) {
  auto start = std::chrono::steady_clock::now();
  rgc::ParamSet params(n, k, d);
  rgc::PLCurve curve = [&] {
    if (bound_name == "achievable") return rgc::achievable_region(params, load_catalogue(catalogue_path));
    auto id = rgc::bound_from_string(bound_name);
    if (!id) throw CLI::ValidationError("unknown bound: " + bound_name);
    return rgc::normalized_outer_curve(params, *id);
  }();
  if (format == "csv") {
    std::cout << rgc::curve_to_csv(curve);
    return 0;
  }
  ordered_json jparams;
  jparams["n"] = n;
  jparams["k"] = k;
  jparams["d"] = d;
  jparams["bound"] = bound_name;
  ordered_json results;
  results["vertices"] = rgc::curve_to_json(curve);
  std::cout << make_envelope(command, jparams, std::move(results), start).dump(2) << "\n";
  return 0;
}

int run_compare(int n, int k, int d, const std::string& out_dir, const std::string& catalogue_path,
                const std::string& command) {
  auto start = std::chrono::steady_clock::now();
  rgc::ParamSet params(n, k, d);
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) return fail(5, "io", "cannot create output directory: " + out_dir);

  struct NamedCurve {
    std::string name;
    rgc::PLCurve curve;
    bool outer;  // participates in the tightest-bound column
  };
  std::vector<NamedCurve> curves;
  curves.push_back({"fr", rgc::fr_normalized_curve(params), false});
  curves.push_back({"repair-matrix", rgc::normalized_outer_curve(params, rgc::BoundId::repair_matrix), true});
  curves.push_back({"mohajer-tandon", rgc::normalized_outer_curve(params, rgc::BoundId::mohajer_tandon), true});
  curves.push_back({"improved-mt", rgc::normalized_outer_curve(params, rgc::BoundId::improved_mt), true});
  curves.push_back({"combined", rgc::normalized_outer_curve(params, rgc::BoundId::combined), false});
  if (k == d && d >= 3)
    curves.push_back({"linear", rgc::normalized_outer_curve(params, rgc::BoundId::linear_k_eq_d), true});
  curves.push_back({"achievable", rgc::achievable_region(params, load_catalogue(catalogue_path)), false});

  ordered_json manifest;
  manifest["n"] = n;
  manifest["k"] = k;
  manifest["d"] = d;
  ordered_json files = ordered_json::array();
  for (const auto& c : curves) {
    fs::path file = fs::path(out_dir) / (c.name + ".csv");
    std::ofstream out(file);
    if (!out) return fail(5, "io", "cannot write " + file.string());
    out << rgc::curve_to_csv(c.curve);
    ordered_json f;
    f["curve"] = c.name;
    f["file"] = file.filename().string();
    f["vertices"] = c.curve.size();
    files.push_back(std::move(f));
  }
  manifest["curves"] = files;

  // Dominance table over the common span of the outer-bound curves.
  rgc::Rat lo = curves[1].curve.beta_min(), hi = curves[1].curve.beta_max();
  std::vector<rgc::Rat> breaks;
  for (const auto& c : curves) {
    if (!c.outer) continue;
    lo = rgc::max(lo, c.curve.beta_min());
    hi = rgc::min(hi, c.curve.beta_max());
  }
  for (const auto& c : curves)
    for (const auto& v : c.curve.vertices())
      if (v.beta_bar >= lo && v.beta_bar <= hi) breaks.push_back(v.beta_bar);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  fs::path dom_file = fs::path(out_dir) / "dominance.csv";
  std::ofstream dom(dom_file);
  if (!dom) return fail(5, "io", "cannot write " + dom_file.string());
  dom << "beta_bar_frac";
  for (const auto& c : curves) dom << "," << c.name;
  dom << ",tightest\n";
  for (const auto& b : breaks) {
    dom << b.str();
    std::string tightest;
    rgc::Rat best;
    for (const auto& c : curves) {
      auto v = c.curve.value_at(b);
      dom << "," << (v ? v->str() : "");
      if (c.outer && v && (tightest.empty() || *v > best)) {
        best = *v;
        tightest = c.name;
      }
    }
    dom << "," << tightest << "\n";
  }
  dom.close();
  manifest["dominance"] = "dominance.csv";

  {
    fs::path mf = fs::path(out_dir) / "manifest.json";
    std::ofstream out(mf);
    if (!out) return fail(5, "io", "cannot write " + mf.string());
    out << manifest.dump(2) << "\n";
  }

  ordered_json jparams;
  jparams["n"] = n;
  jparams["k"] = k;
  jparams["d"] = d;
  jparams["out"] = out_dir;
  std::cout << make_envelope(command, jparams, manifest, start).dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite, int n, int r, int alpha, int beta, int field, int trials,
               uint64_t seed, const std::string& matrix_path, int k_flag,
               const std::string& command) {
  auto start = std::chrono::steady_clock::now();
  ordered_json jparams;
  jparams["suite"] = suite;
  ordered_json results;
  bool ok = true;

  if (suite == "layered") {
    jparams["n"] = n;
    jparams["r"] = r;
    rgc::LayeredCode code = rgc::construct_layered_code(n, r);
    rgc::CheckReport rep = rgc::verify_layered_code(code);
    results = rgc::check_report_to_json(rep);
    results["alpha"] = code.alpha;
    results["beta"] = code.beta;
    results["file_size"] = code.file_size;
    results["parity_rank"] = rgc::gf_rank(code.parity);
    ok = rep.ok();
  } else if (suite == "chain" || suite == "hrepair") {
    jparams["n"] = n;
    jparams["alpha"] = alpha;
    jparams["beta"] = beta;
    jparams["field"] = field;
    ordered_json failures = ordered_json::array();
    auto run_one = [&](const rgc::BlockMatrix& h, const std::string& label) {
      rgc::CheckReport rep = rgc::validate_h_repair(h, h.n - 1);
      rgc::IncrementalRanks inc = rgc::incremental_ranks(h);
      if (!inc.per_node_bound_ok)
        rep.checks.push_back({"incremental_rank_lower_bound", false, ""});
      if (!inc.sums_to_rank) rep.checks.push_back({"delta_sum_equals_rank", false, ""});
      // Data-collection rank bound on the whole matrix.
      long long fr_rank = h.alpha;
      for (int j = 2; j <= h.n; ++j) {
        long long t = h.alpha - static_cast<long long>(j - 1) * h.beta_cap;
        if (t > 0) fr_rank += t;
      }
      if (inc.rank < fr_rank)
        rep.checks.push_back({"dual_rank_lower_bound", false,
                              "rank " + std::to_string(inc.rank) + " < " + std::to_string(fr_rank)});
      if (suite == "chain" && rep.ok()) {
        rgc::ChainState chain = rgc::build_chain(h);
        rgc::CheckReport chain_rep = rgc::verify_chain_lemmas(chain);
        for (auto& c : chain_rep.checks) rep.checks.push_back(c);
      }
      if (!rep.ok()) {
        ordered_json f;
        f["instance"] = label;
        f["violations"] = rgc::check_report_to_json(rep)["checks"];
        f["matrix"] = rgc::block_matrix_to_json(h);
        failures.push_back(std::move(f));
      }
    };
    if (!matrix_path.empty()) {
      std::ifstream in(matrix_path);
      if (!in) return fail(5, "io", "cannot open matrix file: " + matrix_path);
      nlohmann::json j;
      in >> j;
      rgc::BlockMatrix h = rgc::block_matrix_from_json(j);
      int kk = k_flag > 0 ? k_flag : h.n - 1;
      rgc::CheckReport rep = rgc::validate_h_repair(h, kk);
      rgc::IncrementalRanks inc = rgc::incremental_ranks(h);
      if (!inc.per_node_bound_ok)
        rep.checks.push_back({"incremental_rank_lower_bound", false, ""});
      results = rgc::check_report_to_json(rep);
      results["rank"] = inc.rank;
      ok = rep.ok();
      jparams["matrix"] = matrix_path;
      jparams["k"] = kk;
    } else {
      jparams["trials"] = trials;
      jparams["seed"] = seed;
      for (int i = 0; i < trials; ++i)
        run_one(rgc::random_h_repair(n, alpha, beta, field, seed + static_cast<uint64_t>(i)),
                "trial " + std::to_string(i));
      results["trials"] = trials;
      results["violations"] = failures.size();
      results["failures"] = failures;
      ok = failures.empty();
      results["ok"] = ok;
    }
  } else {
    return fail(2, "argument", "unknown suite: " + suite);
  }

  std::cout << make_envelope(command, jparams, std::move(results), start).dump(2) << "\n";
  return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact storage/repair-bandwidth tradeoff bounds for regenerating codes"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string command;
  for (int i = 1; i < argc; ++i) command += std::string(i > 1 ? " " : "") + argv[i];

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate file-size bounds at an operating point");
  PointArgs pa;
  std::string bound_name = "all";
  bounds_cmd->add_option("--n", pa.n, "number of nodes")->required();
  bounds_cmd->add_option("--k", pa.k, "data-collection threshold")->required();
  bounds_cmd->add_option("--d", pa.d, "number of helper nodes")->required();
  bounds_cmd->add_option("--alpha", pa.alpha, "symbols per node, integer or p/q")->required();
  bounds_cmd->add_option("--beta", pa.beta, "symbols per helper per repair, integer or p/q")->required();
  bounds_cmd->add_option("--bound", bound_name,
                         "cutset|trapezoid|repair-matrix|mohajer-tandon|improved-mt|combined|"
                         "tian433|linear|rank-dual|all");

  // curve
  auto* curve_cmd = app.add_subcommand("curve", "emit a normalized tradeoff curve");
  int cn = 0, ck = 0, cd = 0;
  std::string curve_bound, curve_format = "json", catalogue_path;
  curve_cmd->add_option("--n", cn)->required();
  curve_cmd->add_option("--k", ck)->required();
  curve_cmd->add_option("--d", cd)->required();
  curve_cmd->add_option("--bound", curve_bound, "bound name or 'achievable'")->required();
  curve_cmd->add_option("--format", curve_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  curve_cmd->add_option("--catalogue", catalogue_path, "interior-point catalogue JSON");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "emit all curves plus a dominance table");
  int mn = 0, mk = 0, md = 0;
  std::string out_dir;
  compare_cmd->add_option("--n", mn)->required();
  compare_cmd->add_option("--k", mk)->required();
  compare_cmd->add_option("--d", md)->required();
  compare_cmd->add_option("--out", out_dir, "output directory")->required();
  compare_cmd->add_option("--catalogue", catalogue_path, "interior-point catalogue JSON");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "finite-field verification suites");
  std::string suite, matrix_path;
  int vn = 5, vr = 3, valpha = 4, vbeta = 2, vfield = 2, vtrials = 100, vk = 0;
  std::uint64_t vseed = 1;
  verify_cmd->add_option("--suite", suite, "layered|chain|hrepair")->required();
  verify_cmd->add_option("--n", vn, "nodes");
  verify_cmd->add_option("--r", vr, "layered subset size");
  verify_cmd->add_option("--alpha", valpha, "node width");
  verify_cmd->add_option("--beta", vbeta, "off-diagonal rank cap");
  verify_cmd->add_option("--field", vfield, "prime field characteristic");
  verify_cmd->add_option("--trials", vtrials, "random instances");
  verify_cmd->add_option("--seed", vseed, "RNG seed (env RGC_SEED overrides)");
  verify_cmd->add_option("--matrix", matrix_path, "block-matrix JSON file to check");
  verify_cmd->add_option("--k", vk, "data-collection threshold for --matrix (default n-1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "argument", e.what());
  }

  if (const char* env_seed = std::getenv("RGC_SEED")) {
    try {
      vseed = std::stoull(env_seed);
    } catch (...) {
      return fail(2, "argument", "RGC_SEED is not an integer");
    }
  }

  try {
    if (bounds_cmd->parsed()) return run_bounds(pa, bound_name, command);
    if (curve_cmd->parsed())
      return run_curve(cn, ck, cd, curve_bound, curve_format, catalogue_path, command);
    if (compare_cmd->parsed()) return run_compare(mn, mk, md, out_dir, catalogue_path, command);
    if (verify_cmd->parsed())
      return run_verify(suite, vn, vr, valpha, vbeta, vfield, vtrials, vseed, matrix_path, vk,
                        command);
  } catch (const rgc::NotApplicableError& e) {
    return fail(3, "not-applicable", e.what());
  } catch (const CLI::ValidationError& e) {
    return fail(2, "argument", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(2, "argument", e.what());
  } catch (const std::domain_error& e) {
    return fail(2, "argument", e.what());
  } catch (const std::runtime_error& e) {
    return fail(5, "io", e.what());
  }
  return 0;
}
