#include "homnalg/tensorprod.hpp"

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

}  // namespace

TensorPresentation::TensorPresentation(AlgebraPtr base, TensorConfig config)
    : base_(std::move(base)), config_(std::move(config)) {
  require_valid(*base_, "tensor_product");
  if (config_.kind != TensorConfig::Kind::AllFull) {
    if (config_.ideal.ambient_dim() != base_->dim())
      throw Error("tensor_product: ideal has wrong ambient dimension");
    if (!is_ideal(*base_, config_.ideal))
      throw Error("tensor_product: subspace is not an n-sided Hom-ideal");
  }
  build_symbols();
  build_relations();
  build_algebra();
}

void TensorPresentation::build_symbols() {
  const std::uint32_t n = base_->arity(), d = base_->dim();
  const Subspace& m = config_.ideal;

  auto std_options = [&]() {
    std::vector<Vec> opts;
    for (std::uint32_t c = 0; c < d; ++c) opts.push_back(unit_vec(d, c));
    return opts;
  };

  slot_options_.assign(n, {});
  slot_in_ideal_.assign(n, {});
  switch (config_.kind) {
    case TensorConfig::Kind::AllFull: {
      for (std::uint32_t j = 0; j < n; ++j) slot_options_[j] = std_options();
      break;
    }
    case TensorConfig::Kind::OneIdeal: {
      // union of the standard basis and the ideal basis, merged as vectors
      std::vector<Vec> opts = std_options();
      for (const Vec& v : m.basis())
        if (std::find(opts.begin(), opts.end(), v) == opts.end()) opts.push_back(v);
      for (std::uint32_t j = 0; j < n; ++j) slot_options_[j] = opts;
      break;
    }
    case TensorConfig::Kind::OneIdealFixedSlot: {
      for (std::uint32_t j = 0; j < n; ++j)
        slot_options_[j] = (j == config_.slot) ? std::vector<Vec>(m.basis()) : std_options();
      break;
    }
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    slot_in_ideal_[j].resize(slot_options_[j].size());
    for (std::size_t o = 0; o < slot_options_[j].size(); ++o)
      slot_in_ideal_[j][o] =
          config_.kind == TensorConfig::Kind::AllFull ? false : m.contains(slot_options_[j][o]);
  }

  std::uint64_t total = 1;
  for (std::uint32_t j = 0; j < n; ++j) total *= slot_options_[j].size();
  require_budget(total, "tensor symbol enumeration");

  IdxTuple t(n, 0);
  bool done = slot_options_[0].empty();
  for (std::uint32_t j = 0; j < n; ++j) done = done || slot_options_[j].empty();
  while (!done) {
    bool admissible = config_.kind != TensorConfig::Kind::OneIdeal;
    if (!admissible)
      for (std::uint32_t j = 0; j < n && !admissible; ++j) admissible = slot_in_ideal_[j][t[j]];
    if (admissible) {
      symbol_index_.emplace(t, symbols_.size());
      symbols_.push_back(t);
    }
    std::size_t j = n;
    while (j > 0) {
      if (++t[j - 1] < slot_options_[j - 1].size()) break;
      t[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
}

SparseVec TensorPresentation::expand_symbol(const std::vector<Vec>& entries) const {
  const std::uint32_t n = base_->arity();
  if (entries.size() != n) throw Error("expand_symbol: wrong slot count");
  const Subspace& m = config_.ideal;
  // per slot: expansion of the entry over that slot's options
  std::vector<std::vector<std::pair<std::uint32_t, Rat>>> exp(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const Vec& v = entries[j];
    bool use_ideal_coords = false;
    switch (config_.kind) {
      case TensorConfig::Kind::AllFull: break;
      case TensorConfig::Kind::OneIdeal: use_ideal_coords = m.contains(v); break;
      case TensorConfig::Kind::OneIdealFixedSlot: use_ideal_coords = (j == config_.slot); break;
    }
    if (use_ideal_coords) {
      auto c = m.coords(v);
      if (!c) throw Error("expand_symbol: entry escapes the ideal slot");
      for (std::size_t i = 0; i < c->size(); ++i) {
        if (sgn((*c)[i]) == 0) continue;
        // option index of the ideal basis vector in this slot
        const Vec& bv = m.basis()[i];
        auto it = std::find(slot_options_[j].begin(), slot_options_[j].end(), bv);
        exp[j].push_back({static_cast<std::uint32_t>(it - slot_options_[j].begin()), (*c)[i]});
      }
    } else {
      for (std::size_t c = 0; c < v.size(); ++c)
        if (sgn(v[c]) != 0) exp[j].push_back({static_cast<std::uint32_t>(c), v[c]});
    }
    if (exp[j].empty()) return {};
  }
  SparseVec out;
  IdxTuple t(n);
  std::vector<std::size_t> cur(n, 0);
  while (true) {
    Rat coeff = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
      t[j] = exp[j][cur[j]].first;
      coeff *= exp[j][cur[j]].second;
    }
    auto it = symbol_index_.find(t);
    if (it == symbol_index_.end()) throw Error("expand_symbol: inadmissible symbol produced");
    sv_add(out, it->second, coeff);
    std::size_t j = n;
    while (j > 0) {
      if (++cur[j - 1] < exp[j - 1].size()) break;
      cur[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
  return out;
}

std::vector<Vec> TensorPresentation::symbol_entries(std::size_t sym) const {
  const IdxTuple& t = symbols_[sym];
  std::vector<Vec> out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = slot_options_[j][t[j]];
  return out;
}

void TensorPresentation::build_relations() {
  const std::uint32_t n = base_->arity(), d = base_->dim();
  const Subspace& m = config_.ideal;
  SpanBuilder rel(free_dim());

  // entry streams for the 2n-1 positions of a relation instance
  std::vector<std::vector<Vec>> entry_opts(2 * n - 1);
  std::vector<std::vector<bool>> entry_in_m(2 * n - 1);
  auto std_opts = [&]() {
    std::vector<Vec> o;
    for (std::uint32_t c = 0; c < d; ++c) o.push_back(unit_vec(d, c));
    return o;
  };
  switch (config_.kind) {
    case TensorConfig::Kind::AllFull:
      for (auto& o : entry_opts) o = std_opts();
      break;
    case TensorConfig::Kind::OneIdeal: {
      std::vector<Vec> merged = std_opts();
      for (const Vec& v : m.basis())
        if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
      for (auto& o : entry_opts) o = merged;
      break;
    }
    case TensorConfig::Kind::OneIdealFixedSlot: {
      // slot p (and its twist partner in the leading term) draw from the ideal
      for (std::size_t i = 0; i < 2 * n - 1; ++i) entry_opts[i] = std_opts();
      entry_opts[config_.slot] = std::vector<Vec>(m.basis());
      if (config_.slot >= 1) entry_opts[n + config_.slot - 1] = std::vector<Vec>(m.basis());
      break;
    }
  }
  for (std::size_t i = 0; i < 2 * n - 1; ++i) {
    entry_in_m[i].resize(entry_opts[i].size());
    for (std::size_t o = 0; o < entry_opts[i].size(); ++o)
      entry_in_m[i][o] =
          config_.kind == TensorConfig::Kind::AllFull ? false : m.contains(entry_opts[i][o]);
  }

  std::uint64_t total = 1;
  for (auto& o : entry_opts) total *= o.size();
  require_budget(total * (signed_permutations(n).size() + 1), "tensor relation enumeration");

  std::vector<Vec> w(2 * n - 1);
  std::vector<Vec> term(n);
  std::vector<Vec> bargs(n);

  // relation (c): every permutation instance equals the identity instance on
  // the arranged tuple, so enumerating all arranged entry tuples realizes the
  // whole S_{2n-1} family.
  auto emit_c = [&]() {
    SparseVec g;
    // leading term [w_1..w_n] * alpha(w_{n+1}) * ... * alpha(w_{2n-1})
    for (std::uint32_t j = 0; j < n; ++j) bargs[j] = w[j];
    term[0] = bracket_eval(*base_, std::span<const Vec>(bargs));
    for (std::uint32_t j = 1; j < n; ++j) term[j] = mul(base_->alpha(), w[n + j - 1]);
    sv_add_scaled(g, Rat(1), expand_symbol(term));
    // - sum_i alpha(w_1) * ... * [w_i, w_{n+1}, ..., w_{2n-1}] * ... * alpha(w_n)
    for (std::uint32_t i = 0; i < n; ++i) {
      bargs[0] = w[i];
      for (std::uint32_t j = 1; j < n; ++j) bargs[j] = w[n + j - 1];
      Vec br = bracket_eval(*base_, std::span<const Vec>(bargs));
      for (std::uint32_t j = 0; j < n; ++j)
        term[j] = (j == i) ? br : mul(base_->alpha(), w[j]);
      sv_add_scaled(g, Rat(-1), expand_symbol(term));
    }
    if (!g.empty()) rel.add(g);
  };

  // relation (d): [w_sigma(1)..w_sigma(n)] * alpha(w_{n+1}) ... - sign(sigma) [w_1..w_n] * ...
  auto perms = signed_permutations(n);
  auto emit_d = [&]() {
    for (const auto& p : perms) {
      bool identity = true;
      for (std::uint32_t j = 0; j < n; ++j) identity = identity && p.perm[j] == j;
      if (identity) continue;  // the identity instance is zero
      SparseVec g;
      for (std::uint32_t j = 0; j < n; ++j) bargs[j] = w[p.perm[j]];
      term[0] = bracket_eval(*base_, std::span<const Vec>(bargs));
      for (std::uint32_t j = 1; j < n; ++j) term[j] = mul(base_->alpha(), w[n + j - 1]);
      sv_add_scaled(g, Rat(1), expand_symbol(term));
      for (std::uint32_t j = 0; j < n; ++j) bargs[j] = w[j];
      term[0] = bracket_eval(*base_, std::span<const Vec>(bargs));
      sv_add_scaled(g, Rat(-p.sign), expand_symbol(term));
      if (!g.empty()) rel.add(g);
    }
  };

  // admissibility of an instance: for the position-symmetrized ideal
  // configuration at least one entry must come from the ideal
  auto instance_admissible = [&](const IdxTuple& pick) {
    if (config_.kind != TensorConfig::Kind::OneIdeal) return true;
    for (std::size_t i = 0; i < 2 * n - 1; ++i)
      if (entry_in_m[i][pick[i]]) return true;
    return false;
  };

  IdxTuple pick(2 * n - 1, 0);
  bool empty = false;
  for (auto& o : entry_opts) empty = empty || o.empty();
  if (!empty) {
    while (true) {
      if (instance_admissible(pick)) {
        for (std::size_t i = 0; i < 2 * n - 1; ++i) w[i] = entry_opts[i][pick[i]];
        emit_c();
        emit_d();
      }
      std::size_t i = 2 * n - 1;
      while (i > 0) {
        if (++pick[i - 1] < entry_opts[i - 1].size()) break;
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  relations_ = rel.finish();
  space_ = PresentedSpace(free_dim(), relations_);
}

void TensorPresentation::build_algebra() {
  const std::uint32_t n = base_->arity(), d = base_->dim();
  const std::size_t q = space_.dim();

  // psi on free coordinates
  psi_free_ = Matrix(d, free_dim());
  std::vector<Vec> entries;
  for (std::size_t s = 0; s < free_dim(); ++s) {
    entries = symbol_entries(s);
    psi_free_.set_column(s, bracket_eval(*base_, std::span<const Vec>(entries)));
  }
  // twist on free coordinates
  alpha_free_ = Matrix(free_dim(), free_dim());
  for (std::size_t s = 0; s < free_dim(); ++s) {
    entries = symbol_entries(s);
    for (Vec& v : entries) v = mul(base_->alpha(), v);
    alpha_free_.set_column(s, sv_dense(expand_symbol(entries), free_dim()));
  }

  AlgebraBuilder b("tensor(" + base_->name() + ")", n, static_cast<std::uint32_t>(q));
  {
    std::vector<std::string> ls(q);
    for (std::size_t j = 0; j < q; ++j) {
      std::vector<Vec> es = symbol_entries(space_.rep_cols()[j]);
      std::string lab;
      for (std::uint32_t i = 0; i < n; ++i) {
        // label standard options by basis label, echelon options positionally
        const Vec& v = es[i];
        std::string piece = "m";
        for (std::uint32_t c = 0; c < d; ++c)
          if (v == unit_vec(d, c)) {
            piece = base_->labels()[c];
            break;
          }
        lab += (i ? "*" : "") + piece;
      }
      ls[j] = lab;
    }
    b.labels(std::move(ls));
  }
  // bracket (4): the j-th slot of the product symbol is the bracket of the
  // j-th argument's entries
  require_budget(ipow(q, n), "tensor bracket table");
  std::vector<Vec> prod_entries(n);
  std::vector<Vec> psi_of_rep(q);
  for (std::size_t j = 0; j < q; ++j) psi_of_rep[j] = psi_free_.column(space_.rep_cols()[j]);
  for_each_tuple(static_cast<std::uint32_t>(q), n, [&](const IdxTuple& t) {
    bool zero = false;
    for (std::uint32_t j = 0; j < n && !zero; ++j) {
      prod_entries[j] = psi_of_rep[t[j]];
      zero = is_zero(prod_entries[j]);
    }
    if (zero) return;
    Vec val = space_.project(expand_symbol(prod_entries));
    if (!is_zero(val)) b.set_entry(t, std::move(val));
  });
  Matrix alpha_q(q, q);
  for (std::size_t j = 0; j < q; ++j)
    alpha_q.set_column(j, space_.project(sv_from_dense(alpha_free_.column(space_.rep_cols()[j]))));
  b.alpha(std::move(alpha_q));
  algebra_ = b.finish(ValidationPolicy::SmallOnly);
}

TensorPresentation tensor_product(const AlgebraPtr& a, const std::vector<Subspace>& ideals) {
  if (ideals.size() != a->arity()) throw Error("tensor_product: need one subspace per slot");
  const Subspace full = Subspace::full(a->dim());
  std::size_t proper = 0, proper_at = 0;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!(ideals[i] == full)) {
      ++proper;
      proper_at = i;
    }
  }
  TensorConfig cfg;
  if (proper == 0) {
    cfg.kind = TensorConfig::Kind::AllFull;
  } else if (proper == 1) {
    cfg.kind = TensorConfig::Kind::OneIdeal;
    cfg.ideal = ideals[proper_at];
  } else {
    throw Error("tensor_product: unsupported ideal configuration (all slots full, or exactly one proper ideal)");
  }
  return TensorPresentation(a, std::move(cfg));
}

PsiResult psi_map(const TensorPresentation& t) {
  const AlgebraPtr& a = t.base();
  PsiResult r;
  // psi must annihilate the relation subspace
  r.kills_relations = true;
  for (const Vec& g : t.relations().basis())
    if (!is_zero(mul(t.psi_free(), g))) r.kills_relations = false;
  const std::size_t q = t.space().dim();
  Matrix mq(a->dim(), q);
  for (std::size_t j = 0; j < q; ++j)
    mq.set_column(j, t.psi_free().column(t.space().rep_cols()[j]));
  r.image = image_basis(mq);

  if (t.config().kind == TensorConfig::Kind::AllFull) {
    r.morphism = Morphism{"psi", t.algebra(), a, std::move(mq)};
    r.image_in_intersection = true;
  } else {
    const Subspace& m = t.config().ideal;
    r.image_in_intersection = m.contains(r.image);
    Subalgebra sub = subalgebra_on(a, m, "ideal");
    Matrix mm(m.dim(), q);
    for (std::size_t j = 0; j < q; ++j) {
      auto c = m.coords(mq.column(j));
      if (!c) throw Error("psi_map: value escapes the ideal");
      mm.set_column(j, *c);
    }
    r.morphism = Morphism{"psi", t.algebra(), sub.algebra, std::move(mm)};
  }
  r.is_morphism = r.kills_relations && check_morphism(r.morphism).ok();
  return r;
}

PhiReport phi_to_uce(const TensorPresentation& t, const UceResult& u) {
  if (t.config().kind != TensorConfig::Kind::AllFull)
    throw Error("phi_to_uce: needs the all-full configuration");
  if (t.base() != u.base) throw Error("phi_to_uce: different base algebras");
  if (!is_perfect(*t.base())) throw Error("phi_to_uce: base is not perfect");
  const std::uint32_t n = t.base()->arity(), d = t.base()->dim();
  PhiReport rep;
  // on free coordinates phi sends the symbol with standard entries to the
  // class of the corresponding pure tensor; free coords match L^(x n) coords
  rep.well_defined = true;
  for (const Vec& g : t.relations().basis())
    if (!is_zero(u.presentation.project(g))) rep.well_defined = false;
  const std::size_t qt = t.space().dim(), qu = u.presentation.dim();
  Matrix phi(qu, qt);
  for (std::size_t j = 0; j < qt; ++j) {
    SparseVec pure{{t.space().rep_cols()[j], Rat(1)}};
    phi.set_column(j, u.presentation.project(pure));
  }
  (void)n;
  (void)d;
  std::size_t rk = rank(phi);
  rep.injective = rk == qt;
  rep.surjective = rk == qu;
  return rep;
}

Prop46Report prop46_sequence(const AlgebraPtr& a, const Subspace& m) {
  if (!is_perfect(*a)) throw Error("prop46: algebra is not perfect");
  if (!is_ideal(*a, m)) throw Error("prop46: subspace is not an n-sided Hom-ideal");
  const std::uint32_t n = a->arity(), d = a->dim();
  Prop46Report rep;

  // middle row: L*...*L --psi--> L
  TensorPresentation t2(a, TensorConfig{TensorConfig::Kind::AllFull, Subspace(), 0});
  PsiResult psi2 = psi_map(t2);
  Matrix psi2_q(d, t2.space().dim());
  for (std::size_t j = 0; j < t2.space().dim(); ++j)
    psi2_q.set_column(j, t2.psi_free().column(t2.space().rep_cols()[j]));
  Subspace k2 = kernel_basis(psi2_q);

  // bottom row: quotient algebra
  QuotientResult quot = quotient_algebra(a, m);
  TensorPresentation t3(quot.algebra, TensorConfig{TensorConfig::Kind::AllFull, Subspace(), 0});
  Matrix psi3_q(quot.algebra->dim(), t3.space().dim());
  for (std::size_t j = 0; j < t3.space().dim(); ++j)
    psi3_q.set_column(j, t3.psi_free().column(t3.space().rep_cols()[j]));
  Subspace k3 = kernel_basis(psi3_q);

  // top row: the direct sum of the fixed-slot summands, mapping to M
  std::vector<TensorPresentation> summands;
  std::vector<std::size_t> offs;
  std::size_t total = 0;
  for (std::uint32_t p = 0; p < n; ++p) {
    summands.emplace_back(a, TensorConfig{TensorConfig::Kind::OneIdealFixedSlot, m, p});
    offs.push_back(total);
    total += summands.back().space().dim();
  }
  Matrix psi1(m.dim(), total);   // into M coordinates
  Matrix v1(t2.space().dim(), total);  // inclusion-induced map into L*...*L
  for (std::uint32_t p = 0; p < n; ++p) {
    const TensorPresentation& tp = summands[p];
    for (std::size_t j = 0; j < tp.space().dim(); ++j) {
      std::size_t col = offs[p] + j;
      std::size_t sym = tp.space().rep_cols()[j];
      Vec val = tp.psi_free().column(sym);
      auto c = m.coords(val);
      if (!c) throw Error("prop46: restricted psi escapes the ideal");
      psi1.set_column(col, *c);
      v1.set_column(col, t2.space().project(t2.expand_symbol(tp.symbol_entries(sym))));
    }
  }
  Subspace k1 = kernel_basis(psi1);

  // v2: symbol-wise projection L*...*L -> (L/M)*...*(L/M)
  Matrix v2(t3.space().dim(), t2.space().dim());
  {
    const Matrix proj = quot.projection.matrix;
    std::vector<Vec> entries;
    for (std::size_t j = 0; j < t2.space().dim(); ++j) {
      entries = t2.symbol_entries(t2.space().rep_cols()[j]);
      for (Vec& v : entries) v = mul(proj, v);
      v2.set_column(j, t3.space().project(t3.expand_symbol(entries)));
    }
  }

  // connecting map well-definedness needs psi2(Ker v2) inside Im(psi1)
  Subspace im_psi1_ambient = image_under(Matrix::from_columns(d, [&] {
                                           std::vector<Vec> cols;
                                           for (const Vec& b : m.basis()) cols.push_back(b);
                                           return cols;
                                         }()),
                                         image_basis(psi1));
  {
    Subspace kv2 = kernel_basis(v2);
    for (const Vec& v : kv2.basis())
      if (!im_psi1_ambient.contains(mul(psi2_q, v)))
        throw Error("prop46: connecting map is ill-defined (column exactness failure)");
  }

  rep.dim_ker_psi_restricted = k1.dim();
  rep.dim_ker_psi_full = k2.dim();
  rep.dim_ker_psi_bar = k3.dim();
  HomologyGroup h = hl1(*a);
  HomologyGroup hq = hl1(*quot.algebra);
  rep.dim_hl1 = h.dim;
  rep.dim_hl1_quotient = hq.dim;
  rep.kernels_match_hl1 = (k2.dim() == h.dim) && (k3.dim() == hq.dim);

  Subspace im_psi1 = image_basis(psi1);
  PresentedSpace coker(m.dim(), im_psi1);
  rep.dim_coker = coker.dim();

  // exactness at Ker(psi): Im(v1 | K1) = Ker(v2 | K2)
  SpanBuilder im_v1k1(t2.space().dim());
  for (const Vec& v : k1.basis()) im_v1k1.add(mul(v1, v));
  Subspace left = im_v1k1.finish();
  SpanBuilder kv2k2b(t2.space().dim());
  {
    // K2 cap Ker v2 = kernel of v2 restricted to K2
    Matrix restr(t3.space().dim(), k2.dim());
    for (std::size_t j = 0; j < k2.dim(); ++j) restr.set_column(j, mul(v2, k2.basis()[j]));
    Subspace kc = kernel_basis(restr);
    for (const Vec& c : kc.basis()) {
      Vec full(t2.space().dim());
      for (std::size_t i = 0; i < k2.dim(); ++i) add_scaled(full, c[i], k2.basis()[i]);
      kv2k2b.add(std::move(full));
    }
  }
  Subspace right = kv2k2b.finish();
  rep.exact_at_first_middle = left == right;

  // exactness at Ker(psi-bar): Im(v2 | K2) = Ker(connecting)
  SpanBuilder im_v2k2(t3.space().dim());
  for (const Vec& v : k2.basis()) im_v2k2.add(mul(v2, v));
  Subspace mid_left = im_v2k2.finish();
  // connecting: lift through v2, apply psi2, read in M, project to coker
  Matrix conn(coker.dim(), k3.dim());
  for (std::size_t j = 0; j < k3.dim(); ++j) {
    auto lift = solve(v2, k3.basis()[j]);
    if (!lift) throw Error("prop46: projection of tensor squares is not surjective");
    Vec img = mul(psi2_q, *lift);
    auto c = m.coords(img);
    if (!c) throw Error("prop46: connecting image escapes the ideal");
    conn.set_column(j, coker.project(*c));
  }
  Subspace ker_conn_in_k3 = kernel_basis(conn);
  SpanBuilder ker_conn(t3.space().dim());
  for (const Vec& c : ker_conn_in_k3.basis()) {
    Vec full(t3.space().dim());
    for (std::size_t i = 0; i < k3.dim(); ++i) add_scaled(full, c[i], k3.basis()[i]);
    ker_conn.add(std::move(full));
  }
  Subspace mid_right = ker_conn.finish();
  rep.exact_at_second_middle = mid_left == mid_right;
  rep.connecting_onto_coker = rank(conn) == coker.dim();
  return rep;
}

}  // namespace homnalg
