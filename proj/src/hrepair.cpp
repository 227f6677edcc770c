#include "rgc/hrepair.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace rgc {

GFMatrix BlockMatrix::block(int i, int j) const {
  return base.row_slice(static_cast<std::size_t>(i) * alpha, alpha)
      .col_slice(static_cast<std::size_t>(j) * alpha, alpha);
}

GFMatrix BlockMatrix::thick_column(int j) const {
  return base.col_slice(static_cast<std::size_t>(j) * alpha, alpha);
}

GFMatrix BlockMatrix::restrict_columns(const std::vector<int>& nodes) const {
  GFMatrix out(base.field(), base.rows(), 0);
  for (int j : nodes) out = out.hstack(thick_column(j));
  return out;
}

void BlockMatrix::check_shape() const {
  if (n <= 0 || alpha <= 0) throw std::domain_error("block matrix needs n > 0 and alpha > 0");
  std::size_t side = static_cast<std::size_t>(n) * alpha;
  if (base.rows() != side || base.cols() != side)
    throw std::domain_error("block matrix base must be (n*alpha) x (n*alpha)");
}

bool CheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> CheckReport::violations() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return out;
}

namespace {

void subsets_of_size(int n, int size, std::vector<std::vector<int>>* out) {
  std::vector<int> cur(size);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      out->push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  if (size >= 0) rec(0, 0);
}

}  // namespace

CheckReport validate_h_repair(const BlockMatrix& h, int k) {
  h.check_shape();
  if (k < 1 || k > h.n) throw std::domain_error("k out of range for block matrix");
  CheckReport rep;
  if (h.beta_cap == 0)
    rep.checks.push_back({"beta_cap_positive", false, "beta_cap=0 is degenerate"});

  bool diag_ok = true;
  std::string diag_detail;
  for (int i = 0; i < h.n; ++i)
    if (!h.block(i, i).is_identity()) {
      diag_ok = false;
      diag_detail = "block (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")";
      break;
    }
  rep.checks.push_back({"diagonal_identity", diag_ok, diag_detail});

  bool off_ok = true;
  std::string off_detail;
  for (int i = 0; i < h.n && off_ok; ++i)
    for (int j = 0; j < h.n && off_ok; ++j) {
      if (i == j) continue;
      int r = gf_rank(h.block(i, j));
      if (r > h.beta_cap) {
        off_ok = false;
        off_detail = "block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") has rank " + std::to_string(r) + " > " + std::to_string(h.beta_cap);
      }
    }
  rep.checks.push_back({"off_diagonal_rank", off_ok, off_detail});

  bool dc_ok = true;
  std::string dc_detail;
  std::vector<std::vector<int>> subsets;
  subsets_of_size(h.n, h.n - k, &subsets);
  for (const auto& s : subsets) {
    if (s.empty()) break;  // k = n: nothing to check
    int r = gf_rank(h.restrict_columns(s));
    if (r != (h.n - k) * h.alpha) {
      dc_ok = false;
      dc_detail = "columns {";
      for (std::size_t i = 0; i < s.size(); ++i)
        dc_detail += (i ? "," : "") + std::to_string(s[i] + 1);
      dc_detail += "} have rank " + std::to_string(r) + " != " +
                   std::to_string((h.n - k) * h.alpha);
      break;
    }
  }
  rep.checks.push_back({"data_collection", dc_ok, dc_detail});
  return rep;
}

IncrementalRanks incremental_ranks(const BlockMatrix& h) {
  h.check_shape();
  IncrementalRanks out;
  GFMatrix prefix(h.base.field(), h.base.rows(), 0);
  int prev_rank = 0;
  for (int j = 0; j < h.n; ++j) {
    prefix = prefix.hstack(h.thick_column(j));
    int r = gf_rank(prefix);
    out.delta.push_back(r - prev_rank);
    prev_rank = r;
  }
  out.rank = prev_rank;
  for (int j = 0; j < h.n; ++j) {
    int lb = gf_rank(h.block(j, j));
    for (int l = 0; l < j; ++l) lb -= gf_rank(h.block(j, l));
    if (lb < 0) lb = 0;
    if (out.delta[j] < lb) out.per_node_bound_ok = false;
  }
  int sum = 0;
  for (int dlt : out.delta) sum += dlt;
  out.sums_to_rank = (sum == out.rank);
  return out;
}

GFMatrix ChainLevel::joined() const {
  GFMatrix out;
  for (const auto& c : thick_cols) out = out.hstack(c);
  return out;
}

GFMatrix ChainLevel::block(int i, int j, int alpha) const {
  const GFMatrix& col = thick_cols[static_cast<std::size_t>(j - first_j)];
  return col.row_slice(static_cast<std::size_t>(i - 1) * alpha, alpha);
}

ChainState build_chain(const BlockMatrix& h) {
  CheckReport valid = validate_h_repair(h, h.n - 1);
  if (!valid.ok()) {
    std::string msg = "chain requires a valid H_repair:";
    for (const auto& v : valid.violations()) msg += " " + v;
    throw std::domain_error(msg);
  }
  ChainState chain;
  chain.n = h.n;
  chain.alpha = h.alpha;

  ChainLevel top;
  top.t = h.n;
  top.first_j = 1;
  for (int j = 0; j < h.n; ++j) top.thick_cols.push_back(h.thick_column(j));
  top.rank = gf_rank(h.base);
  chain.levels.push_back(std::move(top));

  for (int t = h.n - 1; t >= 3; --t) {
    const ChainLevel& prev = chain.levels.back();
    ChainLevel cur;
    cur.t = t;
    cur.first_j = h.n - t + 1;
    // Columns n-t .. j-1 of the parent, joined left to right.
    GFMatrix left;
    left = prev.thick_cols[static_cast<std::size_t>(cur.first_j - 1 - prev.first_j)];
    for (int j = cur.first_j; j <= h.n; ++j) {
      const GFMatrix& parent_col = prev.thick_cols[static_cast<std::size_t>(j - prev.first_j)];
      GFMatrix inter = intersection_basis(parent_col, left);
      // The diagonal block keeps full column rank because the parent's does.
      GFMatrix diag = inter.row_slice(static_cast<std::size_t>(j - 1) * h.alpha, h.alpha);
      if (gf_rank(diag) != static_cast<int>(inter.cols()))
        throw std::logic_error("chain construction lost full column rank of a diagonal block");
      cur.thick_cols.push_back(std::move(inter));
      if (j < h.n) left = left.hstack(parent_col);
    }
    cur.rank = gf_rank(cur.joined());
    chain.levels.push_back(std::move(cur));
  }
  return chain;
}

CheckReport verify_chain_lemmas(const ChainState& chain) {
  CheckReport rep;
  const int n = chain.n;
  const int alpha = chain.alpha;

  bool mono_ok = true;
  std::string mono_detail;
  for (int t = n; t >= 4 && chain.levels.size() >= static_cast<std::size_t>(n - t + 2); --t) {
    if (chain.level(t).rank < chain.level(t - 1).rank) {
      mono_ok = false;
      mono_detail = "rank increased from level t=" + std::to_string(t - 1);
      break;
    }
  }
  rep.checks.push_back({"rank_chain_non_increasing", mono_ok, mono_detail});

  auto rank_block = [&](const ChainLevel& lvl, int i, int j) {
    return gf_rank(lvl.block(i, j, alpha));
  };

  // (a) diagonal blocks carry the full thick-column rank.
  bool a_ok = true;
  std::string a_detail;
  for (const auto& lvl : chain.levels)
    for (int j = lvl.first_j; j <= n && a_ok; ++j)
      if (rank_block(lvl, j, j) != lvl.width(j)) {
        a_ok = false;
        a_detail = "(t=" + std::to_string(lvl.t) + ", j=" + std::to_string(j) + ")";
      }
  rep.checks.push_back({"diag_rank_equals_column_rank", a_ok, a_detail});

  // (b) and (c) relate level t to its parent t+1.
  bool b_ok = true, c_ok = true;
  std::string b_detail, c_detail;
  for (std::size_t li = 1; li < chain.levels.size(); ++li) {
    const ChainLevel& cur = chain.levels[li];
    const ChainLevel& par = chain.levels[li - 1];
    // Prefix ranks of the parent starting at node n-t (= cur.first_j - 1).
    std::vector<int> prefix_rank;  // prefix_rank[m] = rank of parent cols n-t .. n-t+m
    GFMatrix acc;
    for (int j = cur.first_j - 1; j <= n; ++j) {
      acc = acc.hstack(par.thick_cols[static_cast<std::size_t>(j - par.first_j)]);
      prefix_rank.push_back(gf_rank(acc));
    }
    auto par_prefix = [&](int j_hi) {  // rank of parent cols n-t .. j_hi
      return prefix_rank[static_cast<std::size_t>(j_hi - (cur.first_j - 1))];
    };
    for (int j = cur.first_j; j <= n; ++j) {
      int lhs = rank_block(cur, j, j);
      int rhs = rank_block(par, j, j) - (par_prefix(j) - par_prefix(j - 1));
      if (lhs != rhs && b_ok) {
        b_ok = false;
        b_detail = "(t=" + std::to_string(cur.t) + ", j=" + std::to_string(j) + ")";
      }
    }
    for (int j = cur.first_j + 1; j <= n; ++j) {
      int lhs = rank_block(cur, j, j);
      for (int l = cur.first_j; l <= j - 1; ++l) lhs += rank_block(cur, j, l);
      int rhs = 0;
      for (int l = cur.first_j - 1; l <= j - 1; ++l) rhs += rank_block(par, j, l);
      if (lhs > rhs && c_ok) {
        c_ok = false;
        c_detail = "(t=" + std::to_string(cur.t) + ", j=" + std::to_string(j) + ")";
      }
    }
  }
  rep.checks.push_back({"diag_rank_drop_identity", b_ok, b_detail});
  rep.checks.push_back({"row_rank_contraction", c_ok, c_detail});

  // Induction-family rank bounds, checked exactly via integer cross products.
  bool ind_ok = true;
  std::string ind_detail;
  for (int s = 1; s <= n - 3 && ind_ok; ++s)
    for (const auto& lvl : chain.levels) {
      if (lvl.t < s + 3) continue;
      long long diag_sum = 0, off_sum = 0;
      for (int j = lvl.first_j; j <= n; ++j) diag_sum += rank_block(lvl, j, j);
      for (int j = lvl.first_j + 1; j <= n; ++j)
        for (int l = lvl.first_j; l <= j - 1; ++l) off_sum += rank_block(lvl, j, l);
      long long lhs = static_cast<long long>(lvl.rank) * (s + 1) * (s + 2);
      long long rhs = 2 * ((s + 1) * diag_sum - off_sum);
      if (lhs < rhs) {
        ind_ok = false;
        ind_detail = "(s=" + std::to_string(s) + ", t=" + std::to_string(lvl.t) + ")";
        break;
      }
    }
  rep.checks.push_back({"induction_rank_bound", ind_ok, ind_detail});
  return rep;
}

BlockMatrix random_h_repair(int n, int alpha, int beta_cap, int field_char, uint64_t seed) {
  if (!is_prime(field_char)) throw std::domain_error("field characteristic must be prime");
  if (n < 2 || alpha < 1 || beta_cap < 1 || beta_cap > alpha)
    throw std::domain_error("random H_repair needs n >= 2 and 1 <= beta_cap <= alpha");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(field_char - 1));
  for (int attempt = 0; attempt < 64; ++attempt) {
    BlockMatrix h;
    h.n = n;
    h.alpha = alpha;
    h.beta_cap = beta_cap;
    h.base = GFMatrix(field_char, static_cast<std::size_t>(n) * alpha,
                      static_cast<std::size_t>(n) * alpha);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          for (int x = 0; x < alpha; ++x)
            h.base.set(static_cast<std::size_t>(i) * alpha + x,
                       static_cast<std::size_t>(j) * alpha + x, 1);
          continue;
        }
        GFMatrix u(field_char, alpha, beta_cap), v(field_char, beta_cap, alpha);
        for (std::size_t x = 0; x < u.rows(); ++x)
          for (std::size_t y = 0; y < u.cols(); ++y) u.set(x, y, dist(rng));
        for (std::size_t x = 0; x < v.rows(); ++x)
          for (std::size_t y = 0; y < v.cols(); ++y) v.set(x, y, dist(rng));
        GFMatrix prod = u.mul(v);
        for (int x = 0; x < alpha; ++x)
          for (int y = 0; y < alpha; ++y)
            h.base.set(static_cast<std::size_t>(i) * alpha + x,
                       static_cast<std::size_t>(j) * alpha + y, prod.at(x, y));
      }
    if (validate_h_repair(h, n - 1).ok()) return h;
  }
  throw std::runtime_error("failed to sample a conforming H_repair (exhausted attempts)");
}

}  // namespace rgc
