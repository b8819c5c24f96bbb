#pragma once

#include <cstddef>
#include <map>

#include "homnalg/error.hpp"
#include "homnalg/rational.hpp"

namespace homnalg {

/// Sparse coordinate vector, ordered by index so every traversal is
/// deterministic.
using SparseVec = std::map<std::size_t, Rat>;

void sv_add(SparseVec& dst, std::size_t idx, const Rat& c);
void sv_add_scaled(SparseVec& dst, const Rat& c, const SparseVec& src);
Vec sv_dense(const SparseVec& sv, std::size_t n);
SparseVec sv_from_dense(const Vec& v);

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec& v);
  void set_column(std::size_t c, const SparseVec& v);

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Vec mul(const Matrix& m, const Vec& v);
SparseVec apply_sparse_columns(const Matrix& m, const SparseVec& v);
std::size_t rank(const Matrix& m);

/// Inverse of a square invertible matrix; throws Error otherwise.
Matrix inverse(const Matrix& m);

}  // namespace homnalg
