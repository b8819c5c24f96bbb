#pragma once

#include "homnalg/subspace.hpp"

namespace homnalg {

/// Quotient V/R of a coordinate space by a relation subspace, presented by a
/// representative basis: the standard basis vectors sitting at the non-pivot
/// columns of the echelonized relations. project() annihilates exactly the
/// relations and sends rep_basis[i] to the i-th unit vector.
class PresentedSpace {
public:
  PresentedSpace() = default;
  PresentedSpace(std::size_t ambient, Subspace relations);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rep_cols_.size(); }
  const Subspace& relations() const { return relations_; }
  /// Ambient indices of the representative standard basis vectors.
  const std::vector<std::size_t>& rep_cols() const { return rep_cols_; }
  Vec rep_vector(std::size_t i) const { return unit_vec(ambient_, rep_cols_[i]); }

  Vec project(const Vec& v) const;
  Vec project(const SparseVec& v) const;
  /// lift(q) = sum_i q_i rep_basis[i]; project(lift(q)) = q.
  Vec lift(const Vec& q) const;
  /// dim() x ambient matrix of project().
  Matrix projection_matrix() const;

private:
  std::size_t ambient_ = 0;
  Subspace relations_;
  std::vector<std::size_t> rep_cols_;
  // project of the pivot standard basis vectors, in quotient coordinates
  std::vector<Vec> pivot_images_;
  std::vector<std::ptrdiff_t> col_kind_;  // >=0: rep slot; <0: -(pivot row)-1
};

PresentedSpace quotient_presentation(std::size_t ambient, const Subspace& relations);

/// Presentation of ker/img for img <= ker: the quotient is expressed in the
/// coordinates of ker's basis.
struct SubQuotient {
  Subspace cycles;       // ker
  PresentedSpace space;  // over cycle coordinates
};
SubQuotient subquotient(Subspace ker, const Subspace& img);

}  // namespace homnalg
