#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgc/gf.hpp"

namespace rgc {

/// Square matrix of n x n thick blocks of size alpha, the shape of the
/// exact-repair parity-check arrangement: identity blocks on the diagonal,
/// off-diagonal blocks of rank at most beta_cap.
struct BlockMatrix {
  GFMatrix base;
  int n = 0;
  int alpha = 0;
  int beta_cap = 0;

  /// Block row i, block column j (0-indexed): alpha x alpha.
  GFMatrix block(int i, int j) const;
  /// All alpha columns of node j.
  GFMatrix thick_column(int j) const;
  /// Restriction to the thick columns of the given nodes, in order.
  GFMatrix restrict_columns(const std::vector<int>& nodes) const;

  void check_shape() const;  // throws std::domain_error on mismatch
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::vector<std::string> violations() const;
};

/// Structural validation: (i) identity diagonal blocks, (ii) off-diagonal
/// block ranks <= beta_cap, (iii) every (n-k)-subset of thick columns has
/// full rank (n-k)*alpha (data collection). beta_cap == 0 is flagged as
/// degenerate.
CheckReport validate_h_repair(const BlockMatrix& h, int k);

/// Incremental thick-column ranks delta_j = rank(H|[1..j]) - rank(H|[1..j-1]),
/// together with the per-node lower bound
/// delta_j >= (rank(A_jj) - sum_{l<j} rank(A_jl))^+ and the telescoping
/// identity sum_j delta_j = rank(H).
struct IncrementalRanks {
  std::vector<int> delta;
  int rank = 0;
  bool per_node_bound_ok = true;
  bool sums_to_rank = true;
};

IncrementalRanks incremental_ranks(const BlockMatrix& h);

/// One level of the column-space intersection chain. Level t has thick
/// columns indexed j = n-t+1 .. n (1-indexed as stored in first_j), each a
/// basis of the intersection of the parent's column j with the span of the
/// parent's columns n-t .. j-1. All levels live in the ambient n*alpha rows.
struct ChainLevel {
  int t = 0;
  int first_j = 0;                   // 1-indexed node of the first thick column
  std::vector<GFMatrix> thick_cols;  // thick_cols[idx] is node first_j + idx
  int rank = 0;

  GFMatrix joined() const;
  /// Thick row i (1-indexed node) of thick column j (1-indexed node).
  GFMatrix block(int i, int j, int alpha) const;
  int width(int j) const { return static_cast<int>(thick_cols[j - first_j].cols()); }
};

struct ChainState {
  int n = 0;
  int alpha = 0;
  std::vector<ChainLevel> levels;  // t = n down to 3

  const ChainLevel& level(int t) const { return levels[static_cast<std::size_t>(n - t)]; }
};

/// Builds the chain H^(n) .. H^(3) by repeated column-space intersection.
/// Requires d = n-1 validation (k = n-1) to pass; throws std::domain_error
/// otherwise. Diagonal blocks of every level are verified to have full
/// column rank equal to the thick-column rank.
ChainState build_chain(const BlockMatrix& h);

/// Exact rank relations along the chain:
///  (a) rank(H^(t)_j) = rank(A^(t)_jj)                       (equality)
///  (b) rank(A^(t)_jj) = rank(A^(t+1)_jj)
///        - [rank(H^(t+1)|{n-t..j}) - rank(H^(t+1)|{n-t..j-1})] (equality)
///  (c) rank(A^(t)_jj) + sum_{l=n-t+1}^{j-1} rank(A^(t)_jl)
///        <= sum_{l=n-t}^{j-1} rank(A^(t+1)_jl)               (inequality)
/// plus non-increasing level ranks and the induction-family instances
/// rank(H^(t)) >= 2/((s+1)(s+2)) [(s+1) sum_j rank(A_jj) - sum sum rank(A_jl)]
/// for s = 1..n-3, t >= s+3.
CheckReport verify_chain_lemmas(const ChainState& chain);

/// Seed-deterministic random H_repair instance: off-diagonal blocks are
/// products of alpha x beta and beta x alpha uniform matrices (rank <= beta),
/// identity diagonal. Samples failing validation for k = n-1 are rejected
/// and redrawn.
BlockMatrix random_h_repair(int n, int alpha, int beta_cap, int field_char, uint64_t seed);

}  // namespace rgc
