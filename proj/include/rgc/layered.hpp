#pragma once

#include <vector>

#include "rgc/gf.hpp"
#include "rgc/hrepair.hpp"

namespace rgc {

/// Canonical layered code on n nodes for d = n-1: one single-parity (r, r-1)
/// codelet per r-subset of nodes, over GF(2). Node i stores one symbol per
/// incident codelet, so alpha = C(n-1, r-1); a helper sends the symbols of
/// codelets shared with the failed node, so beta = C(n-2, r-2); the file size
/// is (r-1) * C(n, r).
struct LayeredCode {
  int n = 0;
  int r = 0;
  int field_char = 2;
  int alpha = 0;
  int beta = 0;
  long long file_size = 0;

  std::vector<std::vector<int>> subsets;        // all r-subsets, lex order
  std::vector<std::vector<int>> node_subsets;   // per node, incident subset ids
  GFMatrix parity;     // C(n,r) x n*alpha, one row per codelet
  GFMatrix generator;  // file_size x n*alpha

  /// Column of coordinate (subset s, node i); i must lie in subsets[s].
  int coord_index(int subset_id, int node) const;

  /// The repair equations arranged as an (n*alpha x n*alpha) block matrix
  /// with identity diagonal blocks.
  BlockMatrix h_repair() const;
};

/// Requires n >= 4 and 2 <= r <= n-1.
LayeredCode construct_layered_code(int n, int r);

/// Five checks: generator rank equals the file size; data collection from
/// every (n-1)-subset; exact repair of every node with per-helper transfer
/// counts <= beta; structural validity of the assembled block form; and the
/// intersection-chain rank bound met with equality at the code's operating
/// point.
CheckReport verify_layered_code(const LayeredCode& code);

}  // namespace rgc
