#include "homnalg/algebra.hpp"

#include <algorithm>
#include <set>

#include "homnalg/budget.hpp"

namespace homnalg {

namespace {

// Exhaustive scans at construction run only below this tuple count when the
// algebra is an internal, theorem-backed construction; the test suite
// spot-checks bigger ones on sampled tuples.
constexpr std::uint64_t kSmallScan = 200'000;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

}  // namespace

std::vector<std::string> default_labels(std::uint32_t dim, const std::string& prefix) {
  std::vector<std::string> ls;
  ls.reserve(dim);
  for (std::uint32_t i = 1; i <= dim; ++i) ls.push_back(prefix + std::to_string(i));
  return ls;
}

void require_valid(const HomNAlgebra& a, const char* op) {
  if (!a.is_valid())
    throw Error(std::string(op) + ": algebra '" + a.name() +
                "' failed validation (fundamental identity or multiplicativity)");
}

AlgebraBuilder::AlgebraBuilder(std::string name, std::uint32_t arity, std::uint32_t dim)
    : name_(std::move(name)), arity_(arity), dim_(dim) {
  if (arity < 2) throw Error("arity must be at least 2");
}

AlgebraBuilder& AlgebraBuilder::labels(std::vector<std::string> ls) {
  if (ls.size() != dim_) throw Error("label count does not match dimension");
  labels_ = std::move(ls);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_entry(const IdxTuple& t, Vec value) {
  if (t.size() != arity_) throw Error("bracket tuple has wrong arity");
  for (std::uint32_t i : t)
    if (i >= dim_) throw Error("basis index out of range in bracket tuple");
  if (value.size() != dim_) throw Error("bracket value has wrong dimension");
  if (table_.count(t)) throw Error("duplicate bracket tuple");
  if (!is_zero(value)) table_.emplace(t, std::move(value));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::alpha(Matrix a) {
  if (a.rows() != dim_ || a.cols() != dim_) throw Error("alpha must be dim x dim");
  alpha_ = std::move(a);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::generate_skew() {
  auto perms = signed_permutations(arity_);
  std::map<IdxTuple, Vec> completed;
  for (const auto& [t, v] : table_) {
    for (const auto& p : perms) {
      IdxTuple tp = permute_tuple(t, p.perm);
      Vec vp = v;
      if (p.sign < 0)
        for (Rat& x : vp) x = -x;
      auto it = completed.find(tp);
      if (it == completed.end()) {
        completed.emplace(std::move(tp), std::move(vp));
      } else if (it->second != vp) {
        std::string where;
        for (std::uint32_t i : tp) where += (where.empty() ? "" : ",") + std::to_string(i + 1);
        throw Error("skew completion conflict at tuple [" + where + "]");
      }
    }
  }
  for (auto it = completed.begin(); it != completed.end();) {
    if (is_zero(it->second))
      it = completed.erase(it);
    else
      ++it;
  }
  table_ = std::move(completed);
  return *this;
}

AlgebraPtr AlgebraBuilder::finish(ValidationPolicy policy) {
  auto a = std::shared_ptr<HomNAlgebra>(new HomNAlgebra());
  a->name_ = std::move(name_);
  a->arity_ = arity_;
  a->dim_ = dim_;
  a->labels_ = labels_.empty() ? default_labels(dim_, "e") : std::move(labels_);
  a->table_ = std::move(table_);
  a->alpha_ = alpha_ ? std::move(*alpha_) : Matrix(dim_, dim_);
  a->alpha_cols_.reserve(dim_);
  for (std::uint32_t j = 0; j < dim_; ++j) a->alpha_cols_.push_back(a->alpha_.column(j));

  const std::uint64_t fi_tuples = ipow(dim_, 2 * arity_ - 1);
  const std::uint64_t mult_tuples = ipow(dim_, arity_);
  bool run_fi = policy == ValidationPolicy::Eager || fi_tuples <= kSmallScan;
  bool run_mult = policy == ValidationPolicy::Eager || mult_tuples <= kSmallScan;

  if (run_mult) {
    a->valid_.multiplicative = validate_multiplicative(*a).empty();
  } else {
    a->valid_.multiplicative = true;
  }
  if (run_fi) {
    a->valid_.fundamental = validate_fundamental_identity(*a).empty();
  } else {
    a->valid_.fundamental = true;
  }
  a->valid_.exhaustive = run_fi && run_mult;

  if (policy == ValidationPolicy::SmallOnly && !(a->valid_.fundamental && a->valid_.multiplicative))
    throw Error("internal construction produced an invalid algebra: " + a->name_);
  return a;
}

AlgebraPtr new_algebra(const std::string& name, std::uint32_t arity, std::uint32_t dim,
                       std::vector<std::string> labels,
                       const std::vector<std::pair<IdxTuple, Vec>>& entries, Matrix alpha,
                       NewAlgebraOptions options) {
  AlgebraBuilder b(name, arity, dim);
  if (!labels.empty()) b.labels(std::move(labels));
  for (const auto& [t, v] : entries) b.set_entry(t, v);
  b.alpha(std::move(alpha));
  if (options.generate_skew) b.generate_skew();
  return b.finish(ValidationPolicy::Eager);
}

Vec bracket_eval(const HomNAlgebra& a, std::span<const Vec> args) {
  if (args.size() != a.arity()) throw Error("bracket_eval: wrong number of arguments");
  const std::uint32_t n = a.arity(), d = a.dim();
  for (const Vec& v : args)
    if (v.size() != d) throw Error("bracket_eval: argument has wrong length");
  // iterate over the support product
  std::vector<std::vector<std::uint32_t>> supports(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t c = 0; c < d; ++c)
      if (sgn(args[i][c]) != 0) supports[i].push_back(c);
    if (supports[i].empty()) return zero_vec(d);
  }
  Vec out(d);
  IdxTuple t(n);
  std::vector<std::size_t> cursor(n, 0);
  while (true) {
    Rat coeff = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      t[i] = supports[i][cursor[i]];
      coeff *= args[i][t[i]];
    }
    if (const Vec* v = a.table_find(t)) add_scaled(out, coeff, *v);
    std::size_t i = n;
    while (i > 0) {
      if (++cursor[i - 1] < supports[i - 1].size()) break;
      cursor[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

Vec bracket_eval(const HomNAlgebra& a, std::initializer_list<Vec> args) {
  std::vector<Vec> v(args);
  return bracket_eval(a, std::span<const Vec>(v));
}

std::vector<Violation> validate_fundamental_identity(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  require_budget(ipow(d, 2 * n - 1), "fundamental identity scan");
  std::vector<Violation> out;
  std::vector<Vec> lhs_args(n), rhs_args(n);
  for_each_tuple(d, n, [&](const IdxTuple& x) {
    // inner lookups reused across all y
    for_each_tuple(d, n - 1, [&](const IdxTuple& y) {
      const Vec* inner = a.table_find(x);
      bool all_zero = inner == nullptr;
      std::vector<const Vec*> inner_i(n, nullptr);
      IdxTuple xy(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        xy[0] = x[i];
        std::copy(y.begin(), y.end(), xy.begin() + 1);
        inner_i[i] = a.table_find(xy);
        if (inner_i[i]) all_zero = false;
      }
      if (all_zero) return;
      // LHS: [[x...], alpha(y_1), ..., alpha(y_{n-1})]
      lhs_args[0] = inner ? *inner : zero_vec(d);
      for (std::uint32_t j = 0; j < n - 1; ++j) lhs_args[j + 1] = a.alpha_col(y[j]);
      Vec diff = bracket_eval(a, std::span<const Vec>(lhs_args));
      // RHS: sum_i [alpha(x_1), ..., [x_i, y...], ..., alpha(x_n)]
      for (std::uint32_t i = 0; i < n; ++i) {
        if (!inner_i[i]) continue;
        for (std::uint32_t j = 0; j < n; ++j)
          rhs_args[j] = (j == i) ? *inner_i[i] : a.alpha_col(x[j]);
        Vec term = bracket_eval(a, std::span<const Vec>(rhs_args));
        for (std::uint32_t c = 0; c < d; ++c) diff[c] -= term[c];
      }
      if (!is_zero(diff)) {
        IdxTuple full(x);
        full.insert(full.end(), y.begin(), y.end());
        out.push_back({std::move(full), std::move(diff)});
      }
    });
  });
  return out;
}

std::vector<Violation> validate_multiplicative(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  require_budget(ipow(d, n), "multiplicativity scan");
  std::vector<Violation> out;
  std::vector<Vec> args(n);
  for_each_tuple(d, n, [&](const IdxTuple& x) {
    const Vec* v = a.table_find(x);
    Vec lhs = v ? mul(a.alpha(), *v) : zero_vec(d);
    for (std::uint32_t j = 0; j < n; ++j) args[j] = a.alpha_col(x[j]);
    Vec rhs = bracket_eval(a, std::span<const Vec>(args));
    for (std::uint32_t c = 0; c < d; ++c) lhs[c] -= rhs[c];
    if (!is_zero(lhs)) out.push_back({x, std::move(lhs)});
  });
  return out;
}

Matrix ad(const HomNAlgebra& a, std::span<const Vec> ys) {
  if (ys.size() != a.arity() - 1) throw Error("ad: need n-1 arguments");
  const std::uint32_t d = a.dim();
  Matrix m(d, d);
  std::vector<Vec> args(a.arity());
  for (std::uint32_t j = 0; j < a.arity() - 1; ++j) args[j + 1] = ys[j];
  for (std::uint32_t c = 0; c < d; ++c) {
    args[0] = unit_vec(d, c);
    m.set_column(c, bracket_eval(a, std::span<const Vec>(args)));
  }
  return m;
}

namespace {

// Null space read off the RREF rows of an already-echelonized row space.
Subspace kernel_of_rowspace(const Subspace& rs) {
  const std::size_t nc = rs.ambient_dim();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t p : rs.pivots()) is_pivot[p] = true;
  SpanBuilder ker(nc);
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vec v(nc);
    v[f] = 1;
    for (std::size_t i = 0; i < rs.dim(); ++i) v[rs.pivots()[i]] = -rs.basis()[i][f];
    ker.add(std::move(v));
  }
  return ker.finish();
}

}  // namespace

Subspace center(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  require_budget(static_cast<std::uint64_t>(n) * ipow(d, n), "center computation");
  // x in Z(L) iff the bracket vanishes with x in any slot, for all basis
  // tuples in the remaining slots; the condition is linear in x.
  SpanBuilder rows(d);
  IdxTuple t(n);
  for (std::uint32_t slot = 0; slot < n; ++slot) {
    for_each_tuple(d, n - 1, [&](const IdxTuple& rest) {
      for (std::uint32_t j = 0, k = 0; j < n; ++j)
        if (j != slot) t[j] = rest[k++];
      // row r of the d x d block: coefficient of x_c is table(t with c at slot)[r]
      std::vector<Vec> block(d, Vec());
      bool any = false;
      for (std::uint32_t c = 0; c < d; ++c) {
        t[slot] = c;
        if (const Vec* v = a.table_find(t)) {
          if (!any) {
            block.assign(d, zero_vec(d));
            any = true;
          }
          for (std::uint32_t r = 0; r < d; ++r) block[r][c] = (*v)[r];
        }
      }
      if (any)
        for (Vec& row : block)
          if (!is_zero(row)) rows.add(std::move(row));
    });
  }
  return kernel_of_rowspace(rows.finish());
}

Subspace commutator_subspace(const HomNAlgebra& a, const std::vector<Subspace>& ms) {
  const std::uint32_t n = a.arity(), d = a.dim();
  if (ms.size() != n) throw Error("commutator: need one subspace per slot");
  for (const Subspace& m : ms)
    if (m.ambient_dim() != d) throw Error("commutator: ambient dimension mismatch");
  // distinct slot assignments over all sigma
  std::set<IdxTuple> assignments;
  for (const auto& p : signed_permutations(n)) assignments.insert(p.perm);
  std::set<IdxTuple> seen;
  SpanBuilder span(d);
  std::vector<Vec> args(n);
  for (const IdxTuple& as : assignments) {
    // skip assignments identical as a tuple of subspaces
    IdxTuple sig(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      sig[j] = as[j];
      for (std::uint32_t k = 0; k < as[j]; ++k)
        if (ms[k] == ms[as[j]]) {
          sig[j] = k;
          break;
        }
    }
    if (!seen.insert(sig).second) continue;
    std::vector<std::uint32_t> dims(n);
    bool empty = false;
    for (std::uint32_t j = 0; j < n; ++j) {
      dims[j] = static_cast<std::uint32_t>(ms[sig[j]].dim());
      if (dims[j] == 0) empty = true;
    }
    if (empty) continue;
    std::uint64_t count = 1;
    for (std::uint32_t j = 0; j < n; ++j) count *= dims[j];
    require_budget(count, "commutator span");
    IdxTuple cursor(n, 0);
    while (true) {
      for (std::uint32_t j = 0; j < n; ++j) args[j] = ms[sig[j]].basis()[cursor[j]];
      span.add(bracket_eval(a, std::span<const Vec>(args)));
      std::size_t i = n;
      while (i > 0) {
        if (++cursor[i - 1] < dims[i - 1]) break;
        cursor[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return span.finish();
}

Subspace commutator_full(const HomNAlgebra& a) {
  // all slots run over the whole algebra: permutations are redundant, the
  // span is generated by the table values
  SpanBuilder span(a.dim());
  for (const auto& [t, v] : a.table()) span.add(v);
  return span.finish();
}

bool is_perfect(const HomNAlgebra& a) {
  return commutator_full(a).dim() == a.dim();
}

Subspace ann_subspace(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  require_budget(ipow(d, n), "annihilator span");
  SpanBuilder span(d);
  IdxTuple t(n);
  for (std::uint32_t pos = 0; pos + 1 < n; ++pos) {
    for_each_tuple(d, n - 2, [&](const IdxTuple& rest) {
      for (std::uint32_t j = 0, k = 0; j < n; ++j)
        if (j != pos && j != pos + 1) t[j] = rest[k++];
      for (std::uint32_t x = 0; x < d; ++x) {
        for (std::uint32_t y = x; y < d; ++y) {
          Vec g = zero_vec(d);
          t[pos] = x;
          t[pos + 1] = y;
          if (const Vec* v = a.table_find(t)) add_scaled(g, 1, *v);
          t[pos] = y;
          t[pos + 1] = x;
          if (const Vec* v = a.table_find(t)) add_scaled(g, 1, *v);
          if (!is_zero(g)) span.add(std::move(g));
        }
      }
    });
  }
  return span.finish();
}

bool is_ideal(const HomNAlgebra& a, const Subspace& m) {
  const std::uint32_t n = a.arity(), d = a.dim();
  if (m.ambient_dim() != d) throw Error("is_ideal: ambient dimension mismatch");
  // alpha-invariance
  for (const Vec& v : m.basis())
    if (!m.contains(mul(a.alpha(), v))) return false;
  // absorption with a single slot in M
  std::vector<Vec> args(n);
  IdxTuple t(n);
  for (std::uint32_t slot = 0; slot < n; ++slot) {
    for (const Vec& mv : m.basis()) {
      bool bad = false;
      for_each_tuple(d, n - 1, [&](const IdxTuple& rest) {
        if (bad) return;
        for (std::uint32_t j = 0, k = 0; j < n; ++j)
          args[j] = (j == slot) ? mv : unit_vec(d, rest[k++]);
        if (!m.contains(bracket_eval(a, std::span<const Vec>(args)))) bad = true;
      });
      if (bad) return false;
    }
  }
  return true;
}

MorphismCheck check_morphism(const Morphism& f) {
  const HomNAlgebra& s = *f.source;
  const HomNAlgebra& t = *f.target;
  MorphismCheck r;
  if (s.arity() != t.arity()) {
    r.bracket_ok = r.twist_ok = false;
    return r;
  }
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim())
    throw Error("morphism matrix has wrong shape");
  const std::uint32_t n = s.arity();
  require_budget(ipow(s.dim(), n), "morphism check");
  r.twist_ok = mul(f.matrix, s.alpha()) == mul(t.alpha(), f.matrix);
  r.bracket_ok = true;
  std::vector<Vec> fcols(s.dim());
  for (std::uint32_t c = 0; c < s.dim(); ++c) fcols[c] = f.matrix.column(c);
  std::vector<Vec> args(n);
  for_each_tuple(s.dim(), n, [&](const IdxTuple& x) {
    const Vec* v = s.table_find(x);
    Vec lhs = v ? mul(f.matrix, *v) : zero_vec(t.dim());
    for (std::uint32_t j = 0; j < n; ++j) args[j] = fcols[x[j]];
    Vec rhs = bracket_eval(t, std::span<const Vec>(args));
    for (std::uint32_t c = 0; c < t.dim(); ++c) lhs[c] -= rhs[c];
    if (!is_zero(lhs)) {
      r.bracket_ok = false;
      r.violations.push_back({x, std::move(lhs)});
    }
  });
  return r;
}

bool is_surjective(const Morphism& f) {
  return rank(f.matrix) == f.target->dim();
}

Vec apply_morphism(const Morphism& f, const Vec& v) {
  return mul(f.matrix, v);
}

QuotientResult quotient_algebra(const AlgebraPtr& a, const Subspace& m) {
  require_valid(*a, "quotient_algebra");
  if (!is_ideal(*a, m)) throw Error("quotient_algebra: subspace is not an n-sided Hom-ideal");
  const std::uint32_t n = a->arity(), d = a->dim();
  PresentedSpace p(d, m);
  const std::size_t q = p.dim();
  AlgebraBuilder b(a->name() + "/M", n, static_cast<std::uint32_t>(q));
  std::vector<std::string> ls(q);
  for (std::size_t i = 0; i < q; ++i) ls[i] = a->labels()[p.rep_cols()[i]];
  b.labels(std::move(ls));
  IdxTuple lifted(n);
  for_each_tuple(static_cast<std::uint32_t>(q), n, [&](const IdxTuple& t) {
    for (std::uint32_t j = 0; j < n; ++j) lifted[j] = static_cast<std::uint32_t>(p.rep_cols()[t[j]]);
    if (const Vec* v = a->table_find(lifted)) {
      Vec w = p.project(*v);
      if (!is_zero(w)) b.set_entry(t, std::move(w));
    }
  });
  Matrix alpha_q(q, q);
  for (std::size_t j = 0; j < q; ++j)
    alpha_q.set_column(j, p.project(a->alpha_col(static_cast<std::uint32_t>(p.rep_cols()[j]))));
  b.alpha(std::move(alpha_q));
  QuotientResult res;
  res.algebra = b.finish(ValidationPolicy::SmallOnly);
  res.projection = Morphism{"proj", a, res.algebra, p.projection_matrix()};
  res.presentation = std::move(p);
  return res;
}

QuotientResult lie_quotient(const AlgebraPtr& a) {
  require_valid(*a, "lie_quotient");
  Subspace ann = ann_subspace(*a);
  bool alpha_inv = true;
  for (const Vec& v : ann.basis())
    if (!ann.contains(mul(a->alpha(), v))) alpha_inv = false;
  if (!alpha_inv)
    throw Error("lie_quotient: the annihilator span is not alpha-invariant");
  if (!is_ideal(*a, ann)) throw Error("lie_quotient: the annihilator span is not an n-sided ideal");
  return quotient_algebra(a, ann);
}

AlgebraPtr derived_hom_leibniz(const AlgebraPtr& a) {
  require_valid(*a, "derived_hom_leibniz");
  const std::uint32_t n = a->arity(), d = a->dim();
  const std::uint64_t bigD = ipow(d, n - 1);
  require_budget(bigD * bigD * (n - 1), "derived algebra table");
  const std::uint32_t D = static_cast<std::uint32_t>(bigD);
  AlgebraBuilder b("dnl(" + a->name() + ")", 2, D);
  std::vector<std::string> ls(D);
  for (std::uint32_t i = 0; i < D; ++i) {
    IdxTuple t = unflatten(i, d, n - 1);
    std::string lab;
    for (std::uint32_t j = 0; j < n - 1; ++j)
      lab += (j ? "_" : "") + a->labels()[t[j]];
    ls[i] = lab;
  }
  b.labels(std::move(ls));

  // [a_1 x ... x a_{n-1}, b_1 x ... x b_{n-1}]
  //   = sum_i alpha(a_1) x ... x [a_i, b_1..b_{n-1}] x ... x alpha(a_{n-1})
  IdxTuple key(2);
  std::vector<Vec> legs(n - 1);
  for (std::uint32_t ai = 0; ai < D; ++ai) {
    IdxTuple at = unflatten(ai, d, n - 1);
    for (std::uint32_t bi = 0; bi < D; ++bi) {
      IdxTuple bt = unflatten(bi, d, n - 1);
      SparseVec acc;
      IdxTuple look(n);
      for (std::uint32_t i = 0; i < n - 1; ++i) {
        look[0] = at[i];
        std::copy(bt.begin(), bt.end(), look.begin() + 1);
        const Vec* v = a->table_find(look);
        if (!v) continue;
        for (std::uint32_t j = 0; j < n - 1; ++j) legs[j] = (j == i) ? *v : a->alpha_col(at[j]);
        // sparse tensor expansion of legs into D coordinates
        std::vector<std::vector<std::uint32_t>> sup(n - 1);
        bool empty = false;
        for (std::uint32_t j = 0; j < n - 1 && !empty; ++j) {
          for (std::uint32_t c = 0; c < d; ++c)
            if (sgn(legs[j][c]) != 0) sup[j].push_back(c);
          empty = sup[j].empty();
        }
        if (empty) continue;
        std::vector<std::size_t> cur(n - 1, 0);
        while (true) {
          Rat coeff = 1;
          std::size_t idx = 0;
          for (std::uint32_t j = 0; j < n - 1; ++j) {
            std::uint32_t c = sup[j][cur[j]];
            coeff *= legs[j][c];
            idx = idx * d + c;
          }
          sv_add(acc, idx, coeff);
          std::size_t j = n - 1;
          while (j > 0) {
            if (++cur[j - 1] < sup[j - 1].size()) break;
            cur[j - 1] = 0;
            --j;
          }
          if (j == 0) break;
        }
      }
      if (!acc.empty()) {
        key[0] = ai;
        key[1] = bi;
        b.set_entry(key, sv_dense(acc, D));
      }
    }
  }
  // alpha' = alpha on every tensor leg
  Matrix alpha_d(D, D);
  for (std::uint32_t j = 0; j < D; ++j) {
    IdxTuple t = unflatten(j, d, n - 1);
    SparseVec col{{0, Rat(1)}};
    std::size_t width = 1;
    for (std::uint32_t i = 0; i < n - 1; ++i) {
      SparseVec next;
      const Vec& ac = a->alpha_col(t[i]);
      for (const auto& [idx, coef] : col)
        for (std::uint32_t c = 0; c < d; ++c)
          if (sgn(ac[c]) != 0) sv_add(next, idx * d + c, coef * ac[c]);
      col = std::move(next);
      width *= d;
    }
    (void)width;
    alpha_d.set_column(j, col);
  }
  b.alpha(std::move(alpha_d));
  return b.finish(ValidationPolicy::SmallOnly);
}

AlgebraPtr yau_twist(const AlgebraPtr& untwisted, const Matrix& g) {
  require_valid(*untwisted, "yau_twist");
  if (!untwisted->alpha().is_identity())
    throw Error("yau_twist: input must carry the identity twist");
  Morphism gm{"g", untwisted, untwisted, g};
  if (!check_morphism(gm).ok())
    throw Error("yau_twist: g is not a self-morphism of the untwisted algebra");
  AlgebraBuilder b(untwisted->name() + "~", untwisted->arity(), untwisted->dim());
  b.labels(std::vector<std::string>(untwisted->labels()));
  for (const auto& [t, v] : untwisted->table()) {
    Vec w = mul(g, v);
    if (!is_zero(w)) b.set_entry(t, std::move(w));
  }
  b.alpha(Matrix(g));
  AlgebraPtr out = b.finish(ValidationPolicy::Eager);
  if (!out->is_valid())
    throw Error("yau_twist: twisted bracket fails validation (unexpected for a self-morphism)");
  return out;
}

bool is_hom_lie(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  require_budget(ipow(d, n) * signed_permutations(n).size(), "skew-symmetry scan");
  auto perms = signed_permutations(n);
  bool ok = true;
  for_each_tuple(d, n, [&](const IdxTuple& t) {
    if (!ok) return;
    const Vec* v = a.table_find(t);
    for (const auto& p : perms) {
      IdxTuple tp = permute_tuple(t, p.perm);
      const Vec* vp = a.table_find(tp);
      Vec lhs = vp ? *vp : zero_vec(d);
      Vec rhs = v ? *v : zero_vec(d);
      if (p.sign < 0)
        for (Rat& x : rhs) x = -x;
      if (lhs != rhs) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  require_valid(*a, "direct_product");
  require_valid(*b, "direct_product");
  if (a->arity() != b->arity()) throw Error("direct_product: arity mismatch");
  const std::uint32_t n = a->arity(), da = a->dim(), db = b->dim();
  AlgebraBuilder bd(a->name() + "x" + b->name(), n, da + db);
  std::vector<std::string> ls;
  for (const auto& l : a->labels()) ls.push_back("l." + l);
  for (const auto& l : b->labels()) ls.push_back("r." + l);
  bd.labels(std::move(ls));
  for (const auto& [t, v] : a->table()) {
    Vec w(da + db);
    for (std::uint32_t i = 0; i < da; ++i) w[i] = v[i];
    bd.set_entry(t, std::move(w));
  }
  for (const auto& [t, v] : b->table()) {
    IdxTuple ts(t);
    for (std::uint32_t& i : ts) i += da;
    Vec w(da + db);
    for (std::uint32_t i = 0; i < db; ++i) w[da + i] = v[i];
    bd.set_entry(ts, std::move(w));
  }
  Matrix alpha(da + db, da + db);
  for (std::uint32_t r = 0; r < da; ++r)
    for (std::uint32_t c = 0; c < da; ++c) alpha.at(r, c) = a->alpha().at(r, c);
  for (std::uint32_t r = 0; r < db; ++r)
    for (std::uint32_t c = 0; c < db; ++c) alpha.at(da + r, da + c) = b->alpha().at(r, c);
  bd.alpha(std::move(alpha));
  return bd.finish(ValidationPolicy::SmallOnly);
}

Subalgebra subalgebra_on(const AlgebraPtr& a, const Subspace& v, const std::string& name) {
  require_valid(*a, "subalgebra_on");
  const std::uint32_t n = a->arity(), d = a->dim();
  if (v.ambient_dim() != d) throw Error("subalgebra_on: ambient dimension mismatch");
  const std::uint32_t r = static_cast<std::uint32_t>(v.dim());
  AlgebraBuilder b(name, n, r);
  std::vector<Vec> args(n);
  require_budget(ipow(r, n), "subalgebra table");
  bool closed = true;
  for_each_tuple(r, n, [&](const IdxTuple& t) {
    if (!closed) return;
    for (std::uint32_t j = 0; j < n; ++j) args[j] = v.basis()[t[j]];
    Vec val = bracket_eval(*a, std::span<const Vec>(args));
    auto c = v.coords(val);
    if (!c) {
      closed = false;
      return;
    }
    if (!is_zero(*c)) b.set_entry(t, std::move(*c));
  });
  if (!closed) throw Error("subalgebra_on: subspace is not closed under the bracket");
  Matrix alpha_s(r, r);
  for (std::uint32_t j = 0; j < r; ++j) {
    auto c = v.coords(mul(a->alpha(), v.basis()[j]));
    if (!c) throw Error("subalgebra_on: subspace is not alpha-invariant");
    alpha_s.set_column(j, *c);
  }
  b.alpha(std::move(alpha_s));
  Subalgebra s;
  s.algebra = b.finish(ValidationPolicy::SmallOnly);
  Matrix incl(d, r);
  for (std::uint32_t j = 0; j < r; ++j) incl.set_column(j, v.basis()[j]);
  s.inclusion = std::move(incl);
  return s;
}

}  // namespace homnalg
