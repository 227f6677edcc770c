#include "rgc/gf.hpp"

namespace rgc {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

GFMatrix::GFMatrix(int field_char, std::size_t rows, std::size_t cols)
    : p_(static_cast<uint32_t>(field_char)), rows_(rows), cols_(cols), e_(rows * cols, 0) {
  if (!is_prime(field_char)) throw std::domain_error("field characteristic must be prime");
}

GFMatrix GFMatrix::identity(int field_char, std::size_t n) {
  GFMatrix m(field_char, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

uint32_t GFMatrix::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  // Fermat: a^(p-2) mod p.
  uint64_t base = a, result = 1;
  uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

GFMatrix GFMatrix::mul(const GFMatrix& o) const {
  if (p_ != o.p_) throw std::domain_error("field mismatch in matrix product");
  if (cols_ != o.rows_) throw std::domain_error("shape mismatch in matrix product");
  GFMatrix out(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      uint32_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.e_[i * o.cols_ + j] =
            (out.e_[i * o.cols_ + j] + static_cast<uint64_t>(a) * o.at(k, j)) % p_;
    }
  return out;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

GFMatrix GFMatrix::col_slice(std::size_t c0, std::size_t width) const {
  if (c0 + width > cols_) throw std::domain_error("column slice out of range");
  GFMatrix out(p_, rows_, width);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < width; ++j) out.set(i, j, at(i, c0 + j));
  return out;
}

GFMatrix GFMatrix::row_slice(std::size_t r0, std::size_t height) const {
  if (r0 + height > rows_) throw std::domain_error("row slice out of range");
  GFMatrix out(p_, height, cols_);
  for (std::size_t i = 0; i < height; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(r0 + i, j));
  return out;
}

GFMatrix GFMatrix::hstack(const GFMatrix& o) const {
  if (cols_ == 0 && rows_ == 0) return o;
  if (o.cols_ == 0 && o.rows_ == 0) return *this;
  if (p_ != o.p_) throw std::domain_error("field mismatch in hstack");
  if (rows_ != o.rows_) throw std::domain_error("row count mismatch in hstack");
  GFMatrix out(p_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) out.set(i, cols_ + j, o.at(i, j));
  }
  return out;
}

GFMatrix GFMatrix::vstack(const GFMatrix& o) const {
  if (cols_ == 0 && rows_ == 0) return o;
  if (o.cols_ == 0 && o.rows_ == 0) return *this;
  if (p_ != o.p_) throw std::domain_error("field mismatch in vstack");
  if (cols_ != o.cols_) throw std::domain_error("column count mismatch in vstack");
  GFMatrix out(p_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(rows_ + i, j, o.at(i, j));
  return out;
}

bool GFMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

namespace {

// Forward elimination into (reduced) echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(GFMatrix* m, bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m->cols() && row < m->rows(); ++col) {
    std::size_t piv = row;
    while (piv < m->rows() && m->at(piv, col) == 0) ++piv;
    if (piv == m->rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m->cols(); ++j) {
        uint32_t t = m->at(row, j);
        m->set(row, j, m->at(piv, j));
        m->set(piv, j, t);
      }
    uint32_t s = m->inv(m->at(row, col));
    if (s != 1)
      for (std::size_t j = 0; j < m->cols(); ++j) m->set(row, j, m->mulf(m->at(row, j), s));
    std::size_t start = reduced ? 0 : row + 1;
    for (std::size_t i = start; i < m->rows(); ++i) {
      if (i == row) continue;
      uint32_t f = m->at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < m->cols(); ++j)
        m->set(i, j, m->sub(m->at(i, j), m->mulf(f, m->at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int gf_rank(const GFMatrix& m) {
  GFMatrix work = m;
  return static_cast<int>(eliminate(&work, /*reduced=*/false).size());
}

GFMatrix gf_rref(const GFMatrix& m) {
  GFMatrix work = m;
  eliminate(&work, /*reduced=*/true);
  return work;
}

GFMatrix gf_nullspace(const GFMatrix& m) {
  GFMatrix r = m;
  std::vector<std::size_t> pivots = eliminate(&r, /*reduced=*/true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  GFMatrix out(m.field(), m.cols(), free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    out.set(fc, fi, 1);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      out.set(pivots[pi], fi, out.sub(0, r.at(pi, fc)));
  }
  return out;
}

GFMatrix gf_column_basis(const GFMatrix& m) {
  // Greedy: keep each column that adds rank, tracked in an echelon workspace.
  GFMatrix echelon(m.field(), m.rows(), 0);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    GFMatrix cand = echelon.hstack(m.col_slice(c, 1));
    if (gf_rank(cand) > static_cast<int>(keep.size())) {
      keep.push_back(c);
      echelon = std::move(cand);
    }
  }
  GFMatrix out(m.field(), m.rows(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, j, m.at(i, keep[j]));
  return out;
}

GFMatrix intersection_basis(const GFMatrix& m1, const GFMatrix& m2) {
  if (m1.field() != m2.field()) throw std::domain_error("field mismatch in intersection");
  if (m1.rows() != m2.rows()) throw std::domain_error("row count mismatch in intersection");
  if (m1.cols() == 0 || m2.cols() == 0) return GFMatrix(m1.field(), m1.rows(), 0);
  GFMatrix combined(m1.field(), m1.rows(), m1.cols() + m2.cols());
  for (std::size_t i = 0; i < m1.rows(); ++i) {
    for (std::size_t j = 0; j < m1.cols(); ++j) combined.set(i, j, m1.at(i, j));
    for (std::size_t j = 0; j < m2.cols(); ++j)
      combined.set(i, m1.cols() + j, combined.sub(0, m2.at(i, j)));
  }
  GFMatrix null = gf_nullspace(combined);
  if (null.cols() == 0) return GFMatrix(m1.field(), m1.rows(), 0);
  GFMatrix x = null.row_slice(0, m1.cols());
  return gf_column_basis(m1.mul(x));
}

}  // namespace rgc
