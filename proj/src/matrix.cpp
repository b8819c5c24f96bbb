#include "homnalg/matrix.hpp"

#include "homnalg/error.hpp"
#include "homnalg/subspace.hpp"

namespace homnalg {

void sv_add(SparseVec& dst, std::size_t idx, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = dst.find(idx);
  if (it == dst.end()) {
    dst.emplace(idx, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) dst.erase(it);
  }
}

void sv_add_scaled(SparseVec& dst, const Rat& c, const SparseVec& src) {
  if (sgn(c) == 0) return;
  for (const auto& [i, x] : src) sv_add(dst, i, c * x);
}

Vec sv_dense(const SparseVec& sv, std::size_t n) {
  Vec v(n);
  for (const auto& [i, x] : sv) v[i] = x;
  return v;
}

SparseVec sv_from_dense(const Vec& v) {
  SparseVec sv;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) sv.emplace(i, v[i]);
  return sv;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

void Matrix::set_column(std::size_t c, const SparseVec& v) {
  for (const auto& [r, x] : v) at(r, c) = x;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch in product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (sgn(bkj) != 0) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

Vec mul(const Matrix& m, const Vec& v) {
  if (v.size() != m.cols()) throw Error("matrix/vector dimension mismatch");
  Vec out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Rat& x = m.at(r, c);
      if (sgn(x) != 0) out[r] += x * v[c];
    }
  }
  return out;
}

SparseVec apply_sparse_columns(const Matrix& m, const SparseVec& v) {
  SparseVec out;
  for (const auto& [c, coef] : v) {
    if (c >= m.cols()) throw Error("sparse index out of range");
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Rat& x = m.at(r, c);
      if (sgn(x) != 0) sv_add(out, r, coef * x);
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  return image_basis(m).dim();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // Gauss-Jordan on [m | I]
  Matrix w(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) w.at(r, c) = m.at(r, c);
    w.at(r, n + r) = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && sgn(w.at(piv, col)) == 0) ++piv;
    if (piv == n) throw Error("matrix is singular");
    if (piv != row)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(w.at(piv, c), w.at(row, c));
    Rat inv = 1 / w.at(row, col);
    for (std::size_t c = 0; c < 2 * n; ++c) w.at(row, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || sgn(w.at(r, col)) == 0) continue;
      Rat f = w.at(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) w.at(r, c) -= f * w.at(row, c);
    }
    ++row;
  }
  if (row != n) throw Error("matrix is singular");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = w.at(r, n + c);
  return out;
}

}  // namespace homnalg
