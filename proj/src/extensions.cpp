#include "homnalg/extensions.hpp"

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

void tensor_expand_units(const std::vector<const Vec*>& legs, std::uint32_t radix, const Rat& scale,
                         SparseVec& out) {
  std::vector<std::vector<std::uint32_t>> sup(legs.size());
  for (std::size_t j = 0; j < legs.size(); ++j) {
    for (std::uint32_t c = 0; c < legs[j]->size(); ++c)
      if (sgn((*legs[j])[c]) != 0) sup[j].push_back(c);
    if (sup[j].empty()) return;
  }
  std::vector<std::size_t> cur(legs.size(), 0);
  while (true) {
    Rat coeff = scale;
    std::size_t idx = 0;
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

const char* ext_class_name(ExtClass c) {
  switch (c) {
    case ExtClass::Central: return "central";
    case ExtClass::AlphaCentral: return "alpha-central";
    default: return "neither";
  }
}

Extension make_extension(const Morphism& f) {
  require_valid(*f.source, "make_extension");
  require_valid(*f.target, "make_extension");
  if (!check_morphism(f).ok()) throw Error("make_extension: not a homomorphism");
  if (!is_surjective(f)) throw Error("make_extension: not surjective");
  Extension e;
  e.map = f;
  e.kernel = kernel_basis(f.matrix);
  const HomNAlgebra& k = *f.source;
  const std::uint32_t n = k.arity(), d = k.dim();
  // central: [M, K, ..., K] with M in every slot (Def 2.7 permutations)
  std::vector<Subspace> slots(n, Subspace::full(d));
  slots[0] = e.kernel;
  bool comm_route = commutator_subspace(k, slots).dim() == 0;
  bool center_route = center(k).contains(e.kernel);
  if (comm_route != center_route)
    throw Error("make_extension: centrality routes disagree (internal inconsistency)");
  e.central = comm_route;
  // alpha-central: [alpha(M), ..., alpha(M), K] with the K slot anywhere
  Subspace am = image_under(k.alpha(), e.kernel);
  std::vector<Subspace> aslots(n, am);
  aslots[n - 1] = Subspace::full(d);
  e.alpha_central = commutator_subspace(k, aslots).dim() == 0;
  if (e.central && !e.alpha_central)
    throw Error("make_extension: central extension not alpha-central (internal inconsistency)");
  return e;
}

ExtClass classify_extension(const Extension& e) {
  if (e.central) return ExtClass::Central;
  if (e.alpha_central) return ExtClass::AlphaCentral;
  return ExtClass::Neither;
}

UceResult uce(const AlgebraPtr& a) {
  require_valid(*a, "uce");
  const std::uint32_t n = a->arity(), d = a->dim();
  require_budget(ipow(d, 2 * n - 1), "uce");
  UceResult r;
  r.base = a;
  r.i_subspace = delta2_image(*a);
  r.presentation = PresentedSpace(ipow(d, n), r.i_subspace);
  const std::size_t q = r.presentation.dim();

  // delta1 of the representative pure tensors
  Matrix m1 = delta1(*a);
  std::vector<Vec> rep_delta1(q);
  for (std::size_t j = 0; j < q; ++j) rep_delta1[j] = m1.column(r.presentation.rep_cols()[j]);

  AlgebraBuilder b("uce(" + a->name() + ")", n, static_cast<std::uint32_t>(q));
  {
    std::vector<std::string> ls(q);
    for (std::size_t j = 0; j < q; ++j) {
      IdxTuple t = unflatten(r.presentation.rep_cols()[j], d, n);
      std::string lab;
      for (std::uint32_t i = 0; i < n; ++i) lab += (i ? "." : "") + a->labels()[t[i]];
      ls[j] = lab;
    }
    b.labels(std::move(ls));
  }
  // bracket: class of delta1(u_1) x ... x delta1(u_n)
  {
    std::vector<const Vec*> legs(n);
    for_each_tuple(static_cast<std::uint32_t>(q), n, [&](const IdxTuple& t) {
      bool zero = false;
      for (std::uint32_t j = 0; j < n && !zero; ++j) {
        legs[j] = &rep_delta1[t[j]];
        zero = is_zero(*legs[j]);
      }
      if (zero) return;
      SparseVec tensor;
      tensor_expand_units(legs, d, Rat(1), tensor);
      Vec val = r.presentation.project(tensor);
      if (!is_zero(val)) b.set_entry(t, std::move(val));
    });
  }
  // twist: class of alpha x ... x alpha of the representative
  Matrix alpha_u(q, q);
  {
    std::vector<const Vec*> legs(n);
    for (std::size_t j = 0; j < q; ++j) {
      IdxTuple t = unflatten(r.presentation.rep_cols()[j], d, n);
      for (std::uint32_t i = 0; i < n; ++i) legs[i] = &a->alpha_col(t[i]);
      SparseVec tensor;
      tensor_expand_units(legs, d, Rat(1), tensor);
      alpha_u.set_column(j, r.presentation.project(tensor));
    }
  }
  b.alpha(std::move(alpha_u));
  r.algebra = b.finish(ValidationPolicy::SmallOnly);

  Matrix umat(d, q);
  for (std::size_t j = 0; j < q; ++j) umat.set_column(j, rep_delta1[j]);
  r.u = Morphism{"u", r.algebra, a, std::move(umat)};
  r.kernel = kernel_basis(r.u.matrix);

  // well-definedness: substituting a relation generator into any bracket slot
  // lands in I_L, and the twist maps I_L into itself
  r.well_defined = true;
  for (const Vec& g : r.i_subspace.basis()) {
    Vec dg = mul(m1, g);
    if (!is_zero(dg)) {
      // honest fallback: expand the bracket with g in each slot against all
      // representative tuples and test membership in I_L
      std::vector<const Vec*> legs(n);
      for (std::uint32_t slot = 0; slot < n && r.well_defined; ++slot) {
        for_each_tuple(static_cast<std::uint32_t>(q), n - 1, [&](const IdxTuple& rest) {
          if (!r.well_defined) return;
          for (std::uint32_t j = 0, w = 0; j < n; ++j)
            legs[j] = (j == slot) ? &dg : &rep_delta1[rest[w++]];
          SparseVec tensor;
          tensor_expand_units(legs, d, Rat(1), tensor);
          if (!is_zero(r.presentation.project(tensor))) r.well_defined = false;
        });
      }
    }
    // alpha-stability of the relation subspace
    std::vector<const Vec*> unit_legs(1);
    SparseVec ag;
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (sgn(g[c]) == 0) continue;
      IdxTuple t = unflatten(c, d, n);
      std::vector<const Vec*> legs2(n);
      for (std::uint32_t i = 0; i < n; ++i) legs2[i] = &a->alpha_col(t[i]);
      tensor_expand_units(legs2, d, g[c], ag);
    }
    if (!is_zero(r.presentation.project(ag))) r.well_defined = false;
  }
  return r;
}

bool identity3_check(const UceResult& r) {
  const HomNAlgebra& a = *r.base;
  const std::uint32_t n = a.arity(), d = a.dim();
  require_budget(ipow(d, 2 * n - 1), "identity (3) check");
  bool ok = true;
  std::vector<const Vec*> legs(n);
  for_each_tuple(d, n, [&](const IdxTuple& x) {
    if (!ok) return;
    for_each_tuple(d, n - 1, [&](const IdxTuple& y) {
      if (!ok) return;
      SparseVec diff;
      if (const Vec* v = a.table_find(x)) {
        legs[0] = v;
        for (std::uint32_t j = 0; j < n - 1; ++j) legs[j + 1] = &a.alpha_col(y[j]);
        tensor_expand_units(legs, d, Rat(1), diff);
      }
      IdxTuple look(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        look[0] = x[i];
        std::copy(y.begin(), y.end(), look.begin() + 1);
        const Vec* v = a.table_find(look);
        if (!v) continue;
        for (std::uint32_t j = 0; j < n; ++j) legs[j] = (j == i) ? v : &a.alpha_col(x[j]);
        tensor_expand_units(legs, d, Rat(-1), diff);
      }
      if (!diff.empty() && !is_zero(r.presentation.project(diff))) ok = false;
    });
  });
  return ok;
}

Morphism induced_beta(const UceResult& u, const Extension& e, PreimagePolicy policy) {
  if (e.map.target != u.base)
    throw Error("induced_beta: extension base differs from the uce base");
  if (!e.central) throw Error("induced_beta: extension is not central");
  const HomNAlgebra& k = *e.map.source;
  const HomNAlgebra& l = *u.base;
  // defense in depth: the kernel really is central, so preimage choice is immaterial
  if (!center(k).contains(e.kernel))
    throw Error("induced_beta: kernel escapes the center (choice of preimages would matter)");
  const std::uint32_t n = l.arity(), d = l.dim();
  std::vector<Vec> pre(d);
  for (std::uint32_t c = 0; c < d; ++c) {
    auto s = solve(e.map.matrix, unit_vec(d, c));
    if (!s) throw Error("induced_beta: preimage solve failed (map not surjective?)");
    pre[c] = std::move(*s);
    if (policy == PreimagePolicy::Shifted && e.kernel.dim() > 0)
      add_scaled(pre[c], Rat(1), e.kernel.basis()[0]);
  }
  const std::size_t q = u.presentation.dim();
  Matrix beta(k.dim(), q);
  std::vector<Vec> args(n);
  for (std::size_t j = 0; j < q; ++j) {
    IdxTuple t = unflatten(u.presentation.rep_cols()[j], d, n);
    for (std::uint32_t i = 0; i < n; ++i) args[i] = pre[t[i]];
    beta.set_column(j, bracket_eval(k, std::span<const Vec>(args)));
  }
  Morphism bm{"beta", u.algebra, e.map.source, std::move(beta)};
  if (!(mul(e.map.matrix, bm.matrix) == u.u.matrix))
    throw Error("induced_beta: pi . beta != u (construction failure)");
  if (!check_morphism(bm).ok()) throw Error("induced_beta: beta is not a homomorphism");
  return bm;
}

PullbackResult pullback_extension(const Extension& tau, const Extension& pi) {
  if (tau.map.target != pi.map.target) throw Error("pullback: different bases");
  const AlgebraPtr& a = tau.map.source;
  const AlgebraPtr& k = pi.map.source;
  const std::uint32_t da = a->dim(), dk = k->dim(), dl = tau.map.target->dim();
  // Q = Ker(tau - pi) inside the direct product
  Matrix glue(dl, da + dk);
  for (std::uint32_t c = 0; c < da; ++c)
    for (std::uint32_t r = 0; r < dl; ++r) glue.at(r, c) = tau.map.matrix.at(r, c);
  for (std::uint32_t c = 0; c < dk; ++c)
    for (std::uint32_t r = 0; r < dl; ++r) glue.at(r, da + c) = -pi.map.matrix.at(r, c);
  Subspace qspace = kernel_basis(glue);
  AlgebraPtr prod = direct_product(a, k);
  Subalgebra sub = subalgebra_on(prod, qspace, a->name() + "x_L" + k->name());
  PullbackResult res;
  res.algebra = sub.algebra;
  const std::size_t q = qspace.dim();
  Matrix pa(da, q), pk(dk, q);
  for (std::size_t j = 0; j < q; ++j) {
    const Vec& v = qspace.basis()[j];
    for (std::uint32_t i = 0; i < da; ++i) pa.at(i, j) = v[i];
    for (std::uint32_t i = 0; i < dk; ++i) pk.at(i, j) = v[da + i];
  }
  res.to_first = Morphism{"pr1", res.algebra, a, std::move(pa)};
  res.to_second = Morphism{"pr2", res.algebra, k, std::move(pk)};
  return res;
}

Extension compose_extensions(const Extension& outer, const Extension& inner) {
  if (inner.map.target != outer.map.source)
    throw Error("compose_extensions: inner target differs from outer source");
  Morphism comp{outer.map.name + "." + inner.map.name, inner.map.source, outer.map.target,
                mul(outer.map.matrix, inner.map.matrix)};
  return make_extension(comp);
}

std::optional<Morphism> section_via_uce(const Extension& e) {
  if (!e.central) throw Error("section_via_uce: extension is not central");
  const AlgebraPtr& k = e.map.target;
  if (!is_perfect(*k)) throw Error("section_via_uce: base is not perfect");
  HomologyGroup h = hl1(*k);
  if (h.dim != 0) return std::nullopt;
  UceResult u = uce(k);
  if (u.algebra->dim() != k->dim()) return std::nullopt;
  Morphism beta = induced_beta(u, e);
  Matrix uinv = inverse(u.u.matrix);
  Morphism sigma{"sigma", k, e.map.source, mul(beta.matrix, uinv)};
  if (!(mul(e.map.matrix, sigma.matrix) == Matrix::identity(k->dim())))
    throw Error("section_via_uce: rho . sigma != id (construction failure)");
  return sigma;
}

bool condition2_check(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  require_budget(ipow(d, n), "condition (2) check");
  bool ok = true;
  std::vector<Vec> args(n);
  for_each_tuple(d, n - 2, [&](const IdxTuple& tail) {
    if (!ok) return;
    for (std::uint32_t x = 0; x < d && ok; ++x) {
      for (std::uint32_t y = x; y < d && ok; ++y) {
        for (std::uint32_t j = 0; j < n - 2; ++j) args[j + 2] = a.alpha_col(tail[j]);
        args[0] = a.alpha_col(x);
        args[1] = a.alpha_col(y);
        Vec v = bracket_eval(a, std::span<const Vec>(args));
        args[0] = a.alpha_col(y);
        args[1] = a.alpha_col(x);
        Vec w = bracket_eval(a, std::span<const Vec>(args));
        for (std::uint32_t c = 0; c < d; ++c) v[c] += w[c];
        if (!is_zero(v)) ok = false;
      }
    }
  });
  return ok;
}

AlphaImageResult alpha_image(const AlgebraPtr& a) {
  require_valid(*a, "alpha_image");
  AlphaImageResult r;
  r.image = image_basis(a->alpha());
  r.sub = subalgebra_on(a, r.image, "alpha(" + a->name() + ")");
  Subspace zsub = center(*r.sub.algebra);
  r.center_ambient = image_under(r.sub.inclusion, zsub);
  return r;
}

UnicentralityReport unicentrality_check(const Extension& e, bool raw) {
  const AlgebraPtr& k = e.map.source;
  const AlgebraPtr& l = e.map.target;
  UnicentralityReport rep;
  if (raw) {
    rep.lhs = image_under(e.map.matrix, center(*k));
    rep.rhs = center(*l);
  } else {
    rep.lhs = image_under(e.map.matrix, alpha_image(k).center_ambient);
    rep.rhs = alpha_image(l).center_ambient;
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

bool centrally_closed_check(const AlgebraPtr& a) {
  if (!is_perfect(*a)) throw Error("centrally_closed_check: algebra is not perfect");
  HomologyGroup h = hl1(*a);
  if (h.dim != 0) return false;
  UceResult u = uce(a);
  return u.algebra->dim() == a->dim() && rank(u.u.matrix) == a->dim();
}

Lemma54Report lemma54_checks(const Extension& e) {
  const AlgebraPtr& k = e.map.source;
  const AlgebraPtr& l = e.map.target;
  if (!is_perfect(*l)) throw Error("lemma54_checks: base is not perfect");
  if (!e.central) throw Error("lemma54_checks: extension is not central");
  Lemma54Report rep;
  rep.decomposition_holds =
      sum(commutator_full(*k), e.kernel).dim() == k->dim();
  // (b) on the base: if alpha(l) in Z(alpha(L)) then every bracket through l
  // lands in Ker(alpha)
  const std::uint32_t n = l->arity(), d = l->dim();
  Subspace zalpha = alpha_image(l).center_ambient;
  Subspace ker_alpha = kernel_basis(l->alpha());
  rep.kernel_alpha_holds = true;
  std::vector<Vec> args(n);
  for (std::uint32_t c = 0; c < d && rep.kernel_alpha_holds; ++c) {
    if (!zalpha.contains(l->alpha_col(c))) continue;
    Vec ec = unit_vec(d, c);
    for (std::uint32_t slot = 0; slot < n && rep.kernel_alpha_holds; ++slot) {
      for_each_tuple(d, n - 1, [&](const IdxTuple& rest) {
        if (!rep.kernel_alpha_holds) return;
        for (std::uint32_t j = 0, w = 0; j < n; ++j)
          args[j] = (j == slot) ? ec : unit_vec(d, rest[w++]);
        if (!ker_alpha.contains(bracket_eval(*l, std::span<const Vec>(args))))
          rep.kernel_alpha_holds = false;
      });
    }
  }
  return rep;
}

Thm58Report thm58_isomorphism_check(const AlgebraPtr& a) {
  require_valid(*a, "thm58");
  Thm58Report rep;
  rep.perfect = is_perfect(*a);
  rep.alpha_injective = kernel_basis(a->alpha()).dim() == 0;
  rep.condition2_base = condition2_check(*a);
  UceResult u = uce(a);
  rep.condition2_uce = condition2_check(*u.algebra);

  AlphaImageResult s1 = alpha_image(u.algebra);
  AlphaImageResult s2 = alpha_image(a);
  Subspace z1 = center(*s1.sub.algebra);
  Subspace z2 = center(*s2.sub.algebra);
  if (!is_ideal(*s1.sub.algebra, z1) || !is_ideal(*s2.sub.algebra, z2)) {
    rep.map_well_defined = false;
    return rep;
  }
  QuotientResult q1 = quotient_algebra(s1.sub.algebra, z1);
  QuotientResult q2 = quotient_algebra(s2.sub.algebra, z2);
  rep.dim_uce_quotient = q1.algebra->dim();
  rep.dim_base_quotient = q2.algebra->dim();

  // induced map: lift Q1 -> alpha(uce), include, push through u, express in
  // alpha(L) coordinates, project to Q2
  const std::size_t r1 = s1.sub.algebra->dim();
  Matrix h0(s2.sub.algebra->dim(), r1);
  for (std::size_t j = 0; j < r1; ++j) {
    Vec amb = mul(u.u.matrix, mul(s1.sub.inclusion, unit_vec(r1, j)));
    auto c = s2.image.coords(amb);
    if (!c) {
      rep.map_well_defined = false;
      return rep;
    }
    h0.set_column(j, *c);
  }
  // Z1 must land in Z2 for the quotient map to exist
  for (const Vec& z : z1.basis()) {
    if (!z2.contains(mul(h0, z))) {
      rep.map_well_defined = false;
      return rep;
    }
  }
  rep.map_well_defined = true;
  Matrix q2proj = q2.presentation.projection_matrix();
  Matrix hq(q2.algebra->dim(), q1.algebra->dim());
  for (std::size_t j = 0; j < q1.algebra->dim(); ++j)
    hq.set_column(j, mul(q2proj, mul(h0, q1.presentation.lift(
                                                 unit_vec(q1.algebra->dim(), j)))));
  Morphism hm{"thm58", q1.algebra, q2.algebra, std::move(hq)};
  bool bij = q1.algebra->dim() == q2.algebra->dim() && rank(hm.matrix) == q1.algebra->dim();
  rep.holds = bij && check_morphism(hm).ok();
  return rep;
}

UniversalityReport universality_probe(const Extension& candidate,
                                      const std::vector<Extension>& others, ExtClass mode) {
  if (!candidate.central) throw Error("universality_probe: candidate is not central");
  UniversalityReport rep;
  const AlgebraPtr& k = candidate.map.source;
  const AlgebraPtr& l = candidate.map.target;
  rep.candidate_perfect = is_perfect(*k);
  rep.hl1_dim = hl1(*k).dim;
  rep.claims_universal = rep.candidate_perfect && rep.hl1_dim == 0;

  std::optional<UceResult> u;
  std::optional<Matrix> beta_cand_inv;
  if (is_perfect(*l)) {
    u = uce(l);
    Morphism bc = induced_beta(*u, candidate);
    if (u->algebra->dim() == k->dim() && rank(bc.matrix) == k->dim())
      beta_cand_inv = inverse(bc.matrix);
  }

  for (const Extension& other : others) {
    UniversalityTarget t;
    t.name = other.map.name;
    bool mode_ok = (mode == ExtClass::Central) ? other.central : other.alpha_central;
    if (!mode_ok) {
      t.detail = "target does not match the requested class";
      rep.targets.push_back(std::move(t));
      continue;
    }
    if (!u || !beta_cand_inv) {
      t.attempted = true;
      t.detail = "uce comparison map is not invertible; cannot factor through it";
      rep.targets.push_back(std::move(t));
      continue;
    }
    t.attempted = true;
    try {
      if (!other.central)
        throw Error("target is only alpha-central; the preimage construction needs centrality");
      Morphism b1 = induced_beta(*u, other, PreimagePolicy::Canonical);
      Morphism b2 = induced_beta(*u, other, PreimagePolicy::Shifted);
      Morphism h{"h", k, other.map.source, mul(b1.matrix, *beta_cand_inv)};
      if (!(mul(other.map.matrix, h.matrix) == candidate.map.matrix))
        throw Error("composition mismatch after factoring");
      if (!check_morphism(h).ok()) throw Error("factored map is not a homomorphism");
      t.exists = true;
      t.unique = rep.candidate_perfect && b1.matrix == b2.matrix;
      if (!t.unique) t.detail = "uniqueness not established";
    } catch (const Error& err) {
      t.exists = false;
      t.detail = err.what();
    }
    rep.targets.push_back(std::move(t));
  }
  return rep;
}

Extension trivial_central_extension(const AlgebraPtr& k, std::uint32_t extra_dim) {
  AlgebraBuilder ab("ab" + std::to_string(extra_dim), k->arity(), extra_dim);
  ab.alpha(Matrix(extra_dim, extra_dim));
  AlgebraPtr abelian = ab.finish(ValidationPolicy::SmallOnly);
  AlgebraPtr prod = direct_product(k, abelian);
  Matrix proj(k->dim(), prod->dim());
  for (std::uint32_t i = 0; i < k->dim(); ++i) proj.at(i, i) = 1;
  return make_extension(Morphism{"pr", prod, k, std::move(proj)});
}

}  // namespace homnalg
