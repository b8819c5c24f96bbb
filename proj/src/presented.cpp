#include "homnalg/presented.hpp"

#include "homnalg/error.hpp"

namespace homnalg {

PresentedSpace::PresentedSpace(std::size_t ambient, Subspace relations)
    : ambient_(ambient), relations_(std::move(relations)) {
  if (relations_.ambient_dim() != ambient_) throw Error("relations have wrong ambient dimension");
  col_kind_.assign(ambient_, 0);
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t i = 0; i < relations_.dim(); ++i) is_pivot[relations_.pivots()[i]] = true;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) rep_cols_.push_back(c);
  std::vector<std::size_t> rep_slot(ambient_, 0);
  for (std::size_t i = 0; i < rep_cols_.size(); ++i) rep_slot[rep_cols_[i]] = i;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (is_pivot[c]) {
      col_kind_[c] = -static_cast<std::ptrdiff_t>(pivot_row) - 1;
      ++pivot_row;
    } else {
      col_kind_[c] = static_cast<std::ptrdiff_t>(rep_slot[c]);
    }
  }
  // image of the pivot standard basis vector e_p under project:
  // residue of e_p is e_p - row_p, supported on the free columns of -row_p
  pivot_images_.resize(relations_.dim());
  for (std::size_t i = 0; i < relations_.dim(); ++i) {
    Vec img(rep_cols_.size());
    const Vec& row = relations_.basis()[i];
    for (std::size_t j = 0; j < rep_cols_.size(); ++j) img[j] = -row[rep_cols_[j]];
    pivot_images_[i] = std::move(img);
  }
}

Vec PresentedSpace::project(const Vec& v) const {
  if (v.size() != ambient_) throw Error("vector has wrong ambient dimension");
  Vec out(rep_cols_.size());
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (sgn(v[c]) == 0) continue;
    std::ptrdiff_t k = col_kind_[c];
    if (k >= 0) {
      out[static_cast<std::size_t>(k)] += v[c];
    } else {
      const Vec& img = pivot_images_[static_cast<std::size_t>(-k - 1)];
      add_scaled(out, v[c], img);
    }
  }
  return out;
}

Vec PresentedSpace::project(const SparseVec& v) const {
  Vec out(rep_cols_.size());
  for (const auto& [c, x] : v) {
    if (c >= ambient_) throw Error("sparse index out of range");
    std::ptrdiff_t k = col_kind_[c];
    if (k >= 0) {
      out[static_cast<std::size_t>(k)] += x;
    } else {
      add_scaled(out, x, pivot_images_[static_cast<std::size_t>(-k - 1)]);
    }
  }
  return out;
}

Vec PresentedSpace::lift(const Vec& q) const {
  if (q.size() != rep_cols_.size()) throw Error("quotient vector has wrong dimension");
  Vec out(ambient_);
  for (std::size_t i = 0; i < q.size(); ++i) out[rep_cols_[i]] = q[i];
  return out;
}

Matrix PresentedSpace::projection_matrix() const {
  Matrix m(rep_cols_.size(), ambient_);
  for (std::size_t c = 0; c < ambient_; ++c) {
    std::ptrdiff_t k = col_kind_[c];
    if (k >= 0) {
      m.at(static_cast<std::size_t>(k), c) = 1;
    } else {
      const Vec& img = pivot_images_[static_cast<std::size_t>(-k - 1)];
      for (std::size_t r = 0; r < img.size(); ++r) m.at(r, c) = img[r];
    }
  }
  return m;
}

PresentedSpace quotient_presentation(std::size_t ambient, const Subspace& relations) {
  return PresentedSpace(ambient, relations);
}

SubQuotient subquotient(Subspace ker, const Subspace& img) {
  if (img.ambient_dim() != ker.ambient_dim()) throw Error("ambient dimension mismatch");
  if (!ker.contains(img)) throw Error("image does not lie inside the kernel");
  SpanBuilder rel(ker.dim());
  for (const Vec& g : img.basis()) {
    auto c = ker.coords(g);
    rel.add(*c);
  }
  SubQuotient q{std::move(ker), PresentedSpace()};
  q.space = PresentedSpace(q.cycles.dim(), rel.finish());
  return q;
}

}  // namespace homnalg
