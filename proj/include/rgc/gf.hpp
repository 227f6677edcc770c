#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include <stdexcept>

namespace rgc {

bool is_prime(int p);

/// Dense matrix over a prime field GF(p), row-major, entries reduced mod p.
/// Zero-row and zero-column matrices are legal (they arise as empty
/// intersection bases).
class GFMatrix {
 public:
  GFMatrix() : p_(2), rows_(0), cols_(0) {}
  GFMatrix(int field_char, std::size_t rows, std::size_t cols);

  static GFMatrix identity(int field_char, std::size_t n);

  int field() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  uint32_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, uint32_t v) { e_[r * cols_ + c] = v % p_; }

  GFMatrix mul(const GFMatrix& o) const;
  GFMatrix transpose() const;

  /// Columns [c0, c0+width).
  GFMatrix col_slice(std::size_t c0, std::size_t width) const;
  /// Rows [r0, r0+height).
  GFMatrix row_slice(std::size_t r0, std::size_t height) const;

  GFMatrix hstack(const GFMatrix& o) const;
  GFMatrix vstack(const GFMatrix& o) const;

  bool is_identity() const;
  bool operator==(const GFMatrix& o) const = default;

  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
  uint32_t mulf(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t inv(uint32_t a) const;

 private:
  uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<uint32_t> e_;
};

/// Rank by row reduction with the first-nonzero pivot rule; deterministic.
int gf_rank(const GFMatrix& m);

/// Reduced row-echelon form (same pivot rule).
GFMatrix gf_rref(const GFMatrix& m);

/// Columns form a basis of the right null space {x : m x = 0}, one basis
/// vector per free column in ascending column order.
GFMatrix gf_nullspace(const GFMatrix& m);

/// The subset of m's columns, in order, that are linearly independent.
GFMatrix gf_column_basis(const GFMatrix& m);

/// Columns form a basis of the intersection of the column spaces of m1 and
/// m2, computed from the null space of [m1 | -m2]. Throws std::domain_error
/// on mismatched row counts or fields. Deterministic.
GFMatrix intersection_basis(const GFMatrix& m1, const GFMatrix& m2);

}  // namespace rgc
