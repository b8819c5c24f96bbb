#include "homnalg/homology.hpp"

#include <algorithm>

#include "homnalg/budget.hpp"

namespace homnalg {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

// sparse expansion of a pure tensor with dense vector legs
void tensor_expand(const std::vector<const Vec*>& legs, std::uint32_t radix, const Rat& scale,
                   SparseVec& out, std::size_t base_shift) {
  std::vector<std::vector<std::uint32_t>> sup(legs.size());
  for (std::size_t j = 0; j < legs.size(); ++j) {
    for (std::uint32_t c = 0; c < legs[j]->size(); ++c)
      if (sgn((*legs[j])[c]) != 0) sup[j].push_back(c);
    if (sup[j].empty()) return;
  }
  std::vector<std::size_t> cur(legs.size(), 0);
  while (true) {
    Rat coeff = scale;
    std::size_t idx = base_shift;
    for (std::size_t j = 0; j < legs.size(); ++j) {
      std::uint32_t c = sup[j][cur[j]];
      coeff *= (*legs[j])[c];
      idx = idx * radix + c;
    }
    sv_add(out, idx, coeff);
    std::size_t j = legs.size();
    while (j > 0) {
      if (++cur[j - 1] < sup[j - 1].size()) break;
      cur[j - 1] = 0;
      --j;
    }
    if (j == 0) return;
  }
}

}  // namespace

Vec corep_action_left(const HomNAlgebra& a, const Vec& l, const Vec& t) {
  const std::uint32_t n = a.arity(), d = a.dim();
  const std::size_t bigD = ipow(d, n - 1);
  if (l.size() != d || t.size() != bigD) throw Error("corep action: dimension mismatch");
  Vec out(d);
  std::vector<Vec> args(n);
  args[0] = l;
  for (std::size_t T = 0; T < bigD; ++T) {
    if (sgn(t[T]) == 0) continue;
    IdxTuple parts = unflatten(T, d, n - 1);
    for (std::uint32_t j = 0; j < n - 1; ++j) args[j + 1] = unit_vec(d, parts[j]);
    add_scaled(out, t[T], bracket_eval(a, std::span<const Vec>(args)));
  }
  return out;
}

Vec corep_action_right(const HomNAlgebra& a, const Vec& t, const Vec& l) {
  Vec out = corep_action_left(a, l, t);
  for (Rat& x : out) x = -x;
  return out;
}

Matrix delta1(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  const std::size_t cols = ipow(d, n);
  require_budget(cols, "delta1");
  Matrix m(d, cols);
  for (const auto& [t, v] : a.table()) m.set_column(flatten(t, d), v);
  return m;
}

Matrix delta2(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  const std::size_t rows = ipow(d, n), cols = ipow(d, 2 * n - 1);
  require_budget(static_cast<std::uint64_t>(rows) * cols, "delta2");
  Matrix m(rows, cols);
  std::vector<const Vec*> legs(n);
  for_each_tuple(d, 2 * n - 1, [&](const IdxTuple& full) {
    IdxTuple x(full.begin(), full.begin() + n);
    IdxTuple y(full.begin() + n, full.end());
    SparseVec col;
    // [x_1..x_n] x alpha(y_1) x ... x alpha(y_{n-1})
    if (const Vec* v = a.table_find(x)) {
      legs[0] = v;
      for (std::uint32_t j = 0; j < n - 1; ++j) legs[j + 1] = &a.alpha_col(y[j]);
      tensor_expand(legs, d, Rat(1), col, 0);
    }
    // - sum_i alpha(x_1) x ... x [x_i, y...] x ... x alpha(x_n)
    IdxTuple look(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      look[0] = x[i];
      std::copy(y.begin(), y.end(), look.begin() + 1);
      const Vec* v = a.table_find(look);
      if (!v) continue;
      for (std::uint32_t j = 0; j < n; ++j) legs[j] = (j == i) ? v : &a.alpha_col(x[j]);
      tensor_expand(legs, d, Rat(-1), col, 0);
    }
    if (!col.empty()) m.set_column(flatten(full, d), col);
  });
  return m;
}

Subspace delta2_image(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  const std::size_t rows = ipow(d, n);
  require_budget(ipow(d, 2 * n - 1), "delta2 image");
  SpanBuilder image(rows);
  std::vector<const Vec*> legs(n);
  for_each_tuple(d, 2 * n - 1, [&](const IdxTuple& full) {
    IdxTuple x(full.begin(), full.begin() + n);
    IdxTuple y(full.begin() + n, full.end());
    SparseVec col;
    if (const Vec* v = a.table_find(x)) {
      legs[0] = v;
      for (std::uint32_t j = 0; j < n - 1; ++j) legs[j + 1] = &a.alpha_col(y[j]);
      tensor_expand(legs, d, Rat(1), col, 0);
    }
    IdxTuple look(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      look[0] = x[i];
      std::copy(y.begin(), y.end(), look.begin() + 1);
      const Vec* v = a.table_find(look);
      if (!v) continue;
      for (std::uint32_t j = 0; j < n; ++j) legs[j] = (j == i) ? v : &a.alpha_col(x[j]);
      tensor_expand(legs, d, Rat(-1), col, 0);
    }
    if (!col.empty()) image.add(col);
  });
  return image.finish();
}

LeibnizComplex::LeibnizComplex(AlgebraPtr a) : algebra_(std::move(a)) {
  require_valid(*algebra_, "LeibnizComplex");
  derived_ = derived_hom_leibniz(algebra_);
  d_ = algebra_->dim();
  bigd_ = derived_->dim();
}

std::size_t LeibnizComplex::module_dim(std::uint32_t k) const {
  return d_ * ipow(bigd_, k);
}

SparseVec LeibnizComplex::apply_basis(std::uint32_t k, std::size_t idx) const {
  if (k == 0) return {};
  const std::uint32_t D = bigd_;
  // decompose idx = (m, t_0, ..., t_{k-1})
  std::vector<std::uint32_t> t(k);
  for (std::size_t j = k; j-- > 0;) {
    t[j] = static_cast<std::uint32_t>(idx % D);
    idx /= D;
  }
  const std::uint32_t m = static_cast<std::uint32_t>(idx);

  SparseVec out;
  // legs over CL_{k-1} = L x D^(k-1): radix is uniform only per position, so
  // flatten by hand: index = ((l * D + u_1) * D + ...)
  auto emit = [&](const Vec& head, const std::vector<const Vec*>& tail, const Rat& sign) {
    // head over L, tail legs over D
    for (std::uint32_t ell = 0; ell < d_; ++ell) {
      if (sgn(head[ell]) == 0) continue;
      tensor_expand(tail, D, sign * head[ell], out, ell);
    }
  };

  Vec dm = unit_vec(d_, m);
  std::vector<const Vec*> tail(k - 1);
  // term 1: [m, t_0] x alpha'(t_1) x ... x alpha'(t_{k-1})
  {
    Vec head = corep_action_left(*algebra_, dm, unit_vec(ipow(d_, algebra_->arity() - 1), t[0]));
    if (!is_zero(head)) {
      for (std::uint32_t j = 1; j < k; ++j) tail[j - 1] = &derived_->alpha_col(t[j]);
      emit(head, tail, Rat(1));
    }
  }
  // term 2: sum_{p=1}^{k-1} (-1)^{p+1} [t_p, m] x alpha'(t_0) ... ^t_p ...
  for (std::uint32_t p = 1; p < k; ++p) {
    Vec head = corep_action_right(*algebra_, unit_vec(ipow(d_, algebra_->arity() - 1), t[p]), dm);
    if (is_zero(head)) continue;
    std::size_t w = 0;
    for (std::uint32_t j = 0; j < k; ++j)
      if (j != p) tail[w++] = &derived_->alpha_col(t[j]);
    emit(head, tail, Rat((p + 1) % 2 == 0 ? 1 : -1));
  }
  // term 3: sum_{p<q} (-1)^q alpha(m) x alpha'(t_0) ... [t_p,t_q] at p ... ^t_q ...
  const Vec& am = algebra_->alpha_col(m);
  if (!is_zero(am)) {
    IdxTuple key(2);
    for (std::uint32_t p = 0; p < k; ++p) {
      for (std::uint32_t q = p + 1; q < k; ++q) {
        key[0] = t[p];
        key[1] = t[q];
        const Vec* br = derived_->table_find(key);
        if (!br) continue;
        std::size_t w = 0;
        for (std::uint32_t j = 0; j < k; ++j) {
          if (j == q) continue;
          tail[w++] = (j == p) ? br : &derived_->alpha_col(t[j]);
        }
        emit(am, tail, Rat(q % 2 == 0 ? 1 : -1));
      }
    }
  }
  return out;
}

SparseVec LeibnizComplex::apply_chain(std::uint32_t k, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [idx, coef] : v) {
    SparseVec img = apply_basis(k, idx);
    sv_add_scaled(out, coef, img);
  }
  return out;
}

Matrix LeibnizComplex::matrix(std::uint32_t k) const {
  if (k == 0) throw Error("differential defined for degree >= 1");
  const std::size_t cols = module_dim(k), rows = module_dim(k - 1);
  require_budget(static_cast<std::uint64_t>(cols) * rows, "differential matrix");
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.set_column(c, apply_basis(k, c));
  return m;
}

HomologyGroup hl0(const HomNAlgebra& a) {
  HomologyGroup h;
  h.degree = 0;
  h.cycles = Subspace::full(a.dim());
  h.space = PresentedSpace(a.dim(), image_basis(delta1(a)));
  h.dim = h.space.dim();
  return h;
}

HomologyGroup hl1(const HomNAlgebra& a) {
  require_valid(a, "hl1");
  Subspace ker = kernel_basis(delta1(a));
  Subspace img = delta2_image(a);
  SubQuotient q = subquotient(std::move(ker), img);
  HomologyGroup h;
  h.degree = 1;
  h.cycles = std::move(q.cycles);
  h.space = std::move(q.space);
  h.dim = h.space.dim();
  return h;
}

HomologyGroup hl_general(const AlgebraPtr& a, std::uint32_t k) {
  require_valid(*a, "hl_general");
  LeibnizComplex c(a);
  if (k == 0) {
    HomologyGroup h;
    h.degree = 0;
    h.cycles = Subspace::full(a->dim());
    h.space = PresentedSpace(a->dim(), image_basis(c.matrix(1)));
    h.dim = h.space.dim();
    return h;
  }
  Subspace ker = kernel_basis(c.matrix(k));
  Subspace img = image_basis(c.matrix(k + 1));
  SubQuotient q = subquotient(std::move(ker), img);
  HomologyGroup h;
  h.degree = k;
  h.cycles = std::move(q.cycles);
  h.space = std::move(q.space);
  h.dim = h.space.dim();
  return h;
}

}  // namespace homnalg
