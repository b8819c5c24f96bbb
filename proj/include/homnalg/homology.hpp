#pragma once

#include "homnalg/algebra.hpp"

namespace homnalg {

/// Action of the (n-1)-fold tensor algebra on L: the left action is the
/// bracket, the right action its negative.
Vec corep_action_left(const HomNAlgebra& a, const Vec& l, const Vec& t);
Vec corep_action_right(const HomNAlgebra& a, const Vec& t, const Vec& l);

/// delta_1 : L^(x n) -> L, pure tensor to bracket.
Matrix delta1(const HomNAlgebra& a);

/// delta_2 : L^(x 2n-1) -> L^(x n),
/// x_1..x_n, y_1..y_{n-1} |-> [x...] x alpha(y_1) x ... x alpha(y_{n-1})
///   - sum_i alpha(x_1) x ... x [x_i, y...] x ... x alpha(x_n).
Matrix delta2(const HomNAlgebra& a);

/// Column space of delta_2, built by streaming the columns so the dense
/// matrix is never materialized.
Subspace delta2_image(const HomNAlgebra& a);

/// The chain complex of the algebra with coefficients in itself over the
/// derived binary algebra on L^(x n-1): CL_k = L x D^(x k). Holds the derived
/// algebra so repeated differential evaluations share its table.
class LeibnizComplex {
public:
  explicit LeibnizComplex(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return algebra_; }
  const AlgebraPtr& derived() const { return derived_; }
  std::size_t module_dim(std::uint32_t k) const;  // d * D^k

  /// Dense matrix of d_k (k >= 1); refuses when the dense size exceeds the
  /// operation cap.
  Matrix matrix(std::uint32_t k) const;
  /// d_k applied to one basis element of CL_k, as a sparse vector.
  SparseVec apply_basis(std::uint32_t k, std::size_t idx) const;
  SparseVec apply_chain(std::uint32_t k, const SparseVec& v) const;

private:
  AlgebraPtr algebra_;
  AlgebraPtr derived_;
  std::uint32_t d_, bigd_;
};

struct HomologyGroup {
  std::uint32_t degree = 0;
  Subspace cycles;       // Ker d_degree (full space in degree 0)
  PresentedSpace space;  // quotient by Im d_{degree+1}, in cycle coordinates
  std::size_t dim = 0;
};

/// Coker delta_1 = L_ab.
HomologyGroup hl0(const HomNAlgebra& a);
/// Ker delta_1 / Im delta_2 (the canonical degree-1 path).
HomologyGroup hl1(const HomNAlgebra& a);
/// Ker d_k / Im d_{k+1} from the generic complex.
HomologyGroup hl_general(const AlgebraPtr& a, std::uint32_t k);

}  // namespace homnalg
