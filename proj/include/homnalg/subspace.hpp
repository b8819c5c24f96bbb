#pragma once

#include <optional>

#include "homnalg/matrix.hpp"

namespace homnalg {

/// Subspace of Q^ambient stored as a reduced row echelon basis. The RREF of a
/// subspace is unique, so equality of subspaces is equality of the stored
/// representation.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after eliminating along the stored basis.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis, if v is a member.
  std::optional<Vec> coords(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

  friend class SpanBuilder;

private:
  std::size_t ambient_;
  std::vector<Vec> rows_;          // RREF, ordered by pivot column
  std::vector<std::size_t> pivots_;
};

/// Incremental echelon builder: feed generators one at a time, extract the
/// canonical subspace at the end. Row order is maintained by pivot, and a
/// final back-substitution pass produces the RREF.
class SpanBuilder {
public:
  explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}

  /// Returns true if the generator enlarged the span.
  bool add(Vec v);
  bool add(const SparseVec& v);
  /// Residue of v against the rows collected so far.
  Vec reduce(Vec v) const;
  bool contains_reduced(const Vec& v) const;

  std::size_t current_dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace finish();

private:
  std::size_t ambient_;
  std::vector<Vec> rows_;          // echelon (not yet fully reduced upward)
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image_under(const Matrix& f, const Subspace& s);

/// One particular solution of m x = b with all free coordinates set to zero,
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace homnalg
