#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "homnalg/presented.hpp"
#include "homnalg/tuples.hpp"

namespace homnalg {

struct ValidationInfo {
  bool fundamental = false;
  bool multiplicative = false;
  bool exhaustive = false;  // the full basis-tuple scans actually ran
};

/// A finite-dimensional multiplicative Hom-Leibniz n-algebra: sparse structure
/// constant table keyed by basis index tuples (absent tuples are zero) and a
/// single twist endomorphism. Immutable after construction.
class HomNAlgebra {
public:
  const std::string& name() const { return name_; }
  std::uint32_t arity() const { return arity_; }
  std::uint32_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<IdxTuple, Vec>& table() const { return table_; }
  const Matrix& alpha() const { return alpha_; }
  const Vec& alpha_col(std::uint32_t j) const { return alpha_cols_[j]; }
  const ValidationInfo& validation() const { return valid_; }
  bool is_valid() const { return valid_.fundamental && valid_.multiplicative; }

  /// Structure constants of a basis tuple; nullptr means zero.
  const Vec* table_find(const IdxTuple& t) const {
    auto it = table_.find(t);
    return it == table_.end() ? nullptr : &it->second;
  }

  friend class AlgebraBuilder;

private:
  HomNAlgebra() = default;
  std::string name_;
  std::uint32_t arity_ = 2, dim_ = 0;
  std::vector<std::string> labels_;
  std::map<IdxTuple, Vec> table_;
  Matrix alpha_;
  std::vector<Vec> alpha_cols_;
  ValidationInfo valid_;
};

using AlgebraPtr = std::shared_ptr<const HomNAlgebra>;

/// Eager: always run the exhaustive validators (resource-capped).
/// SmallOnly: run them only below a fixed tuple count; larger algebras whose
/// validity is guaranteed by construction are flagged exhaustive = false and
/// an actual scan failure is a hard error.
enum class ValidationPolicy { Eager, SmallOnly };

class AlgebraBuilder {
public:
  AlgebraBuilder(std::string name, std::uint32_t arity, std::uint32_t dim);
  AlgebraBuilder& labels(std::vector<std::string> ls);
  AlgebraBuilder& set_entry(const IdxTuple& t, Vec value);  // throws on duplicates
  AlgebraBuilder& alpha(Matrix a);
  /// Complete the table by the signed permutation rule; conflicting supplied
  /// entries are an error.
  AlgebraBuilder& generate_skew();
  AlgebraPtr finish(ValidationPolicy policy);

private:
  std::string name_;
  std::uint32_t arity_, dim_;
  std::vector<std::string> labels_;
  std::map<IdxTuple, Vec> table_;
  std::optional<Matrix> alpha_;
};

struct NewAlgebraOptions {
  bool generate_skew = false;
};

/// Front door construction: checks indices, optionally skew-completes, then
/// runs both validators and stores the flags (an invalid algebra is
/// constructible; downstream operations refuse it).
AlgebraPtr new_algebra(const std::string& name, std::uint32_t arity, std::uint32_t dim,
                       std::vector<std::string> labels,
                       const std::vector<std::pair<IdxTuple, Vec>>& entries, Matrix alpha,
                       NewAlgebraOptions options = {});

std::vector<std::string> default_labels(std::uint32_t dim, const std::string& prefix);

/// Throws unless both validation flags are set.
void require_valid(const HomNAlgebra& a, const char* op);

struct Violation {
  IdxTuple tuple;
  Vec diff;
};

/// Evaluates the twisted fundamental identity on all d^(2n-1) basis tuples
/// (x_1..x_n, y_1..y_{n-1}); returns the offending tuples in lexicographic
/// order. Empty result means the identity holds.
std::vector<Violation> validate_fundamental_identity(const HomNAlgebra& a);

/// Checks alpha[x_1..x_n] = [alpha x_1 .. alpha x_n] on all basis tuples.
std::vector<Violation> validate_multiplicative(const HomNAlgebra& a);

/// Multilinear extension of the structure constant table.
Vec bracket_eval(const HomNAlgebra& a, std::span<const Vec> args);
Vec bracket_eval(const HomNAlgebra& a, std::initializer_list<Vec> args);

/// Matrix of x -> [x, y_1, ..., y_{n-1}].
Matrix ad(const HomNAlgebra& a, std::span<const Vec> ys);

Subspace center(const HomNAlgebra& a);

/// Span of brackets with slot i drawn from M_{sigma(i)}, over all sigma.
Subspace commutator_subspace(const HomNAlgebra& a, const std::vector<Subspace>& ms);
Subspace commutator_full(const HomNAlgebra& a);
bool is_perfect(const HomNAlgebra& a);

/// Char-0 polarization span of brackets with equal adjacent slots.
Subspace ann_subspace(const HomNAlgebra& a);

bool is_ideal(const HomNAlgebra& a, const Subspace& m);

struct Morphism {
  std::string name;
  AlgebraPtr source, target;
  Matrix matrix;  // target.dim x source.dim
};

struct MorphismCheck {
  bool bracket_ok = false;
  bool twist_ok = false;
  std::vector<Violation> violations;  // basis tuples where brackets disagree
  bool ok() const { return bracket_ok && twist_ok; }
};
MorphismCheck check_morphism(const Morphism& f);
bool is_surjective(const Morphism& f);
Vec apply_morphism(const Morphism& f, const Vec& v);

struct QuotientResult {
  AlgebraPtr algebra;
  Morphism projection;
  PresentedSpace presentation;
};

/// Quotient by an n-sided Hom-ideal, with the induced bracket and twist and
/// the projection morphism. Re-validates the fundamental identity.
QuotientResult quotient_algebra(const AlgebraPtr& a, const Subspace& m);

/// L / L^ann with the induced structure; fails (with the reason) when the
/// polarization span is not alpha-invariant or not an ideal.
QuotientResult lie_quotient(const AlgebraPtr& a);

/// The Hom-Leibniz (binary) algebra on L^(n-1 tensor factors).
AlgebraPtr derived_hom_leibniz(const AlgebraPtr& a);

/// Bracket g([...]) and twist g, for a self-morphism g of an untwisted
/// (identity-twist) algebra.
AlgebraPtr yau_twist(const AlgebraPtr& untwisted, const Matrix& g);

bool is_hom_lie(const HomNAlgebra& a);

/// Componentwise product algebra (same arity).
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

struct Subalgebra {
  AlgebraPtr algebra;
  Matrix inclusion;  // ambient.dim x sub.dim
};

/// Restriction of the structure to a subspace that is closed under the
/// bracket and the twist (throws if it is not).
Subalgebra subalgebra_on(const AlgebraPtr& a, const Subspace& v, const std::string& name);

}  // namespace homnalg
