#pragma once

#include "homnalg/extensions.hpp"

namespace homnalg {

/// Supported slot configurations: every slot the whole algebra, one proper
/// ideal in an arbitrary position (the symbols are position-symmetrized), or
/// one proper ideal pinned to a fixed slot (the direct-sum summands of the
/// six-term sequence).
struct TensorConfig {
  enum class Kind { AllFull, OneIdeal, OneIdealFixedSlot };
  Kind kind = Kind::AllFull;
  Subspace ideal;        // meaningful unless AllFull
  std::size_t slot = 0;  // meaningful for OneIdealFixedSlot
};

/// Presentation of the non-abelian tensor product: a free space on admissible
/// basis symbols, the relation subspace spanned by the bracket-compatibility
/// and sign relations, the quotient, and the induced algebra structure.
class TensorPresentation {
public:
  TensorPresentation(AlgebraPtr base, TensorConfig config);

  const AlgebraPtr& base() const { return base_; }
  const TensorConfig& config() const { return config_; }
  std::size_t free_dim() const { return symbols_.size(); }
  const Subspace& relations() const { return relations_; }
  const PresentedSpace& space() const { return space_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  /// Twist on free coordinates; maps the relation subspace into itself.
  const Matrix& alpha_star_free() const { return alpha_free_; }
  /// psi on free coordinates: symbol -> bracket value in ambient coordinates.
  const Matrix& psi_free() const { return psi_free_; }

  /// Multilinear expansion of a symbol with vector entries into free
  /// coordinates (slots lying in the ideal expand over its basis).
  SparseVec expand_symbol(const std::vector<Vec>& entries) const;
  /// The option vectors of a stored basis symbol.
  std::vector<Vec> symbol_entries(std::size_t sym) const;

private:
  void build_symbols();
  void build_relations();
  void build_algebra();

  AlgebraPtr base_;
  TensorConfig config_;
  std::vector<std::vector<Vec>> slot_options_;    // per slot: candidate entry vectors
  std::vector<std::vector<bool>> slot_in_ideal_;  // per slot: option membership in the ideal
  std::vector<IdxTuple> symbols_;                 // option index per slot
  std::map<IdxTuple, std::size_t> symbol_index_;
  Subspace relations_;
  PresentedSpace space_;
  Matrix alpha_free_;
  Matrix psi_free_;
  AlgebraPtr algebra_;
};

TensorPresentation tensor_product(const AlgebraPtr& a, const std::vector<Subspace>& ideals);

struct PsiResult {
  Morphism morphism;            // tensor algebra -> base (or the ideal subalgebra)
  bool kills_relations = false; // psi vanishes on the relation subspace
  bool is_morphism = false;
  bool image_in_intersection = false;
  Subspace image;               // in ambient coordinates
};
PsiResult psi_map(const TensorPresentation& t);

struct PhiReport {
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
};
/// phi(l_1 * ... * l_n) = {l_1, ..., l_n}: comparison of the all-full tensor
/// product with the uce quotient. Injectivity is reported, not asserted.
PhiReport phi_to_uce(const TensorPresentation& t, const UceResult& u);

struct Prop46Report {
  std::size_t dim_ker_psi_restricted = 0;  // Ker(psi_| on the direct sum)
  std::size_t dim_hl1 = 0;                 // of the base
  std::size_t dim_hl1_quotient = 0;        // of base/ideal
  std::size_t dim_coker = 0;               // M / sum_i [L,...,M,...,L]
  std::size_t dim_ker_psi_full = 0;        // Ker(psi) on L*...*L
  std::size_t dim_ker_psi_bar = 0;         // Ker(psi) on (L/M)*...*(L/M)
  bool kernels_match_hl1 = false;
  bool exact_at_first_middle = false;      // at Ker(psi)
  bool exact_at_second_middle = false;     // at Ker(psi-bar)
  bool connecting_onto_coker = false;
};
/// Snake construction for an n-sided ideal of a perfect algebra; verifies
/// exactness at the two middle nodes and surjectivity at the end.
Prop46Report prop46_sequence(const AlgebraPtr& a, const Subspace& m);

}  // namespace homnalg
