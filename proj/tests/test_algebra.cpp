#include <doctest.h>
#include <set>

#include "homnalg/hna.hpp"
#include "test_support.hpp"

using namespace homnalg;
using testsupport::Rng;

namespace {

Vec bv(std::uint32_t d, std::uint32_t i, int c = 1) {
  Vec v(d);
  v[i] = c;
  return v;
}

// a random bracket table over a fixed support size
std::vector<std::pair<IdxTuple, Vec>> random_table(Rng& rng, std::uint32_t n, std::uint32_t d,
                                                   std::size_t entries) {
  std::vector<std::pair<IdxTuple, Vec>> out;
  std::set<IdxTuple> seen;
  while (out.size() < entries) {
    IdxTuple t(n);
    for (auto& x : t) x = static_cast<std::uint32_t>(rng.next() % d);
    if (!seen.insert(t).second) continue;
    out.emplace_back(t, rng.vec(d));
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates the paper fixtures") {
  AlgebraPtr K = catalog_algebra("ex37.K");
  CHECK(K->is_valid());
  CHECK(K->validation().exhaustive);
  AlgebraPtr Lt = catalog_algebra("sec5.L");
  CHECK(Lt->is_valid());
  CHECK(is_hom_lie(*Lt));
}

TEST_CASE("any bracket table with alpha = 0 satisfies the identity") {
  Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    std::uint32_t d = 2 + rng.next() % 3;
    auto entries = random_table(rng, 3, d, 4);
    AlgebraPtr a = new_algebra("rand", 3, d, {}, entries, Matrix(d, d));
    CHECK(a->validation().fundamental);
    CHECK(a->validation().multiplicative);
  }
}

TEST_CASE("skew completion conflicts are reported") {
  std::vector<std::pair<IdxTuple, Vec>> bad{{{0, 1, 2}, bv(3, 0)}, {{1, 0, 2}, bv(3, 0)}};
  CHECK_THROWS_AS(new_algebra("bad", 3, 3, {}, bad, Matrix(3, 3), {.generate_skew = true}),
                  Error);
  // a repeated-slot generator must be zero under skew completion
  std::vector<std::pair<IdxTuple, Vec>> rep{{{0, 0, 1}, bv(3, 2)}};
  CHECK_THROWS_AS(new_algebra("bad2", 3, 3, {}, rep, Matrix(3, 3), {.generate_skew = true}),
                  Error);
}

TEST_CASE("index range errors") {
  CHECK_THROWS_AS(new_algebra("oob", 3, 2, {}, {{{0, 0, 5}, bv(2, 0)}}, Matrix(2, 2)), Error);
  CHECK_THROWS_AS(
      new_algebra("dup", 3, 2, {}, {{{0, 0, 0}, bv(2, 0)}, {{0, 0, 0}, bv(2, 1)}}, Matrix(2, 2)),
      Error);
}

TEST_CASE("negating one constant of the twisted fixture breaks the identity") {
  AlgebraPtr K = catalog_algebra("sec5.K");
  IdxTuple target{0, 1, 2};  // {a1,a2,a3}
  AlgebraBuilder b("mut", 3, 4);
  for (const auto& [t, v] : K->table()) {
    Vec w = v;
    if (t == target)
      for (Rat& x : w) x = -x;
    b.set_entry(t, std::move(w));
  }
  b.alpha(Matrix(K->alpha()));
  AlgebraPtr mut = b.finish(ValidationPolicy::Eager);
  auto viols = validate_fundamental_identity(*mut);
  CHECK(!viols.empty());
  // violation list is sorted lexicographically
  for (std::size_t i = 1; i < viols.size(); ++i) CHECK(viols[i - 1].tuple < viols[i].tuple);
}

TEST_CASE("bracket evaluation is the multilinear extension of the table") {
  AlgebraPtr K = catalog_algebra("ex37.K");
  CHECK(bracket_eval(*K, {bv(3, 2), bv(3, 2), bv(3, 2)}) == bv(3, 1));  // [a3,a3,a3] = a2
  CHECK(is_zero(bracket_eval(*K, {zero_vec(3), bv(3, 1), bv(3, 1)})));
  // [a2 + a3, a2, a2] = a1 + a3
  Vec arg = bv(3, 1);
  arg[2] = 1;
  Vec expect = bv(3, 0);
  expect[2] = 1;
  CHECK(bracket_eval(*K, {arg, bv(3, 1), bv(3, 1)}) == expect);
}

TEST_CASE("multilinearity in every slot on random vectors") {
  Rng rng(55);
  AlgebraPtr Lt = catalog_algebra("sec5.L");
  const std::uint32_t d = Lt->dim(), n = Lt->arity();
  for (std::uint32_t slot = 0; slot < n; ++slot) {
    std::vector<Vec> args(n), args_u(n), args_v(n);
    for (std::uint32_t j = 0; j < n; ++j) args[j] = rng.vec(d);
    Vec u = rng.vec(d), v = rng.vec(d);
    Rat lambda = rng.rat();
    args_u = args;
    args_v = args;
    args_u[slot] = u;
    args_v[slot] = v;
    Vec combined = u;
    add_scaled(combined, lambda, v);
    args[slot] = combined;
    Vec lhs = bracket_eval(*Lt, std::span<const Vec>(args));
    Vec rhs = bracket_eval(*Lt, std::span<const Vec>(args_u));
    add_scaled(rhs, lambda, bracket_eval(*Lt, std::span<const Vec>(args_v)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("adjoint matrices") {
  AlgebraPtr K = catalog_algebra("ex37.K");
  std::vector<Vec> ys{bv(3, 1), bv(3, 1)};
  Matrix m = ad(*K, ys);  // x -> [x, a2, a2]
  CHECK(m.column(1) == bv(3, 0));  // a2 -> a1
  CHECK(m.column(2) == bv(3, 2));  // a3 -> a3
  CHECK(is_zero(m.column(0)));     // a1 -> 0

  std::vector<Vec> zs{zero_vec(3), zero_vec(3)};
  CHECK(ad(*K, zs).is_zero());

  AlgebraPtr ab = catalog_algebra("syn.abelian");
  std::vector<Vec> ys2{bv(2, 0), bv(2, 1)};
  CHECK(ad(*ab, ys2).is_zero());
}

TEST_CASE("centers of the named fixtures") {
  CHECK(center(*catalog_algebra("ex37.K")) == Subspace::span(3, {bv(3, 0)}));
  CHECK(center(*catalog_algebra("rem32.K")).dim() == 0);
  CHECK(center(*catalog_algebra("syn.abelian")) == Subspace::full(2));
}

TEST_CASE("commutator subspaces") {
  AlgebraPtr K = catalog_algebra("ex37.K");
  std::vector<Subspace> full(3, Subspace::full(3));
  CHECK(commutator_subspace(*K, full) == Subspace::full(3));
  CHECK(is_perfect(*K));

  AlgebraPtr ab = catalog_algebra("syn.abelian");
  std::vector<Subspace> full2(3, Subspace::full(2));
  CHECK(commutator_subspace(*ab, full2).dim() == 0);
  CHECK(!is_perfect(*ab));

  // one slot restricted to span{e2}: permutations place it anywhere
  AlgebraPtr L = catalog_algebra("ex52.L");
  std::vector<Subspace> slots{Subspace::span(3, {bv(3, 1)}), Subspace::full(3),
                              Subspace::full(3)};
  CHECK(commutator_subspace(*L, slots) == Subspace::span(3, {bv(3, 1), bv(3, 2)}));
}

TEST_CASE("annihilator span via polarization") {
  // skew table: vanishing on repeated adjacent slots
  CHECK(ann_subspace(*catalog_algebra("sec5.L")).dim() == 0);
  QuotientResult lq = lie_quotient(catalog_algebra("sec5.L"));
  CHECK(lq.algebra->dim() == 4);
  CHECK(lq.algebra->table() == catalog_algebra("sec5.L")->table());

  // diagonal-heavy table: the polarization span is everything
  CHECK(ann_subspace(*catalog_algebra("ex37.K")) == Subspace::full(3));
  QuotientResult lq2 = lie_quotient(catalog_algebra("ex37.K"));
  CHECK(lq2.algebra->dim() == 0);

  CHECK(ann_subspace(*catalog_algebra("syn.abelian")).dim() == 0);
}

TEST_CASE("annihilator span matches a sampled quadratic oracle") {
  // independent oracle: substitute random vectors into adjacent equal slots
  Rng rng(77);
  for (const char* name : {"ex37.K", "ex52.L", "sec5.L", "syn.leib3id"}) {
    AlgebraPtr a = catalog_algebra(name);
    const std::uint32_t d = a->dim(), n = a->arity();
    Subspace ann = ann_subspace(*a);
    SpanBuilder oracle(d);
    for (int trial = 0; trial < 60; ++trial) {
      std::uint32_t pos = static_cast<std::uint32_t>(rng.next() % (n - 1));
      std::vector<Vec> args(n);
      Vec v = rng.vec(d);
      for (std::uint32_t j = 0; j < n; ++j) args[j] = rng.vec(d);
      args[pos] = v;
      args[pos + 1] = v;
      Vec g = bracket_eval(*a, std::span<const Vec>(args));
      CHECK(ann.contains(g));  // the span dominates every substitution
      oracle.add(std::move(g));
    }
    CHECK(ann == oracle.finish());  // and the sample already generates it
  }
}

TEST_CASE("ideal detection") {
  AlgebraPtr L = catalog_algebra("ex52.L");
  CHECK(is_ideal(*L, Subspace::span(3, {bv(3, 1), bv(3, 2)})));
  CHECK(is_ideal(*L, Subspace::full(3)));
  CHECK(!is_ideal(*L, Subspace::span(3, {bv(3, 0)})));  // [e1,e1,e2] = e2 escapes
}

TEST_CASE("quotient algebras") {
  AlgebraPtr L = catalog_algebra("ex52.L");
  QuotientResult qfull = quotient_algebra(L, Subspace::full(3));
  CHECK(qfull.algebra->dim() == 0);

  QuotientResult qzero = quotient_algebra(L, Subspace::zero(3));
  CHECK(qzero.algebra->dim() == 3);
  CHECK(qzero.algebra->table() == L->table());
  CHECK(qzero.algebra->alpha() == L->alpha());

  QuotientResult q = quotient_algebra(L, Subspace::span(3, {bv(3, 1), bv(3, 2)}));
  CHECK(q.algebra->dim() == 1);
  const Vec* v = q.algebra->table_find({0, 0, 0});
  REQUIRE(v != nullptr);
  CHECK(*v == bv(1, 0));
  CHECK(q.algebra->alpha().is_zero());
  // the projection is a homomorphism
  CHECK(check_morphism(q.projection).ok());
  CHECK_THROWS_AS(quotient_algebra(L, Subspace::span(3, {bv(3, 0)})), Error);
}

TEST_CASE("derived binary algebra") {
  // abelian input gives the abelian algebra on the tensor power
  AlgebraPtr ab = catalog_algebra("syn.abelian");
  AlgebraPtr dab = derived_hom_leibniz(ab);
  CHECK(dab->arity() == 2);
  CHECK(dab->dim() == 4);
  CHECK(dab->table().empty());

  // alpha = 0 with n - 1 >= 2 tensor legs kills every summand
  AlgebraPtr K = catalog_algebra("ex37.K");
  AlgebraPtr dk = derived_hom_leibniz(K);
  CHECK(dk->dim() == 9);
  CHECK(dk->table().empty());
  CHECK(dk->is_valid());

  // n = 2 reproduces the algebra itself
  AlgebraPtr n2 = catalog_algebra("syn.n2");
  AlgebraPtr dn2 = derived_hom_leibniz(n2);
  CHECK(dn2->dim() == n2->dim());
  CHECK(dn2->table() == n2->table());
  CHECK(dn2->alpha() == n2->alpha());

  // twisted input: nontrivial table, still a valid binary algebra
  AlgebraPtr dl = derived_hom_leibniz(catalog_algebra("sec5.L"));
  CHECK(dl->dim() == 16);
  CHECK(dl->is_valid());
  CHECK(dl->validation().exhaustive);
}

TEST_CASE("twisting by a self-morphism") {
  AlgebraPtr L0 = catalog_algebra("sec5.L0");
  AlgebraPtr same = yau_twist(L0, Matrix::identity(4));
  CHECK(same->table() == L0->table());
  CHECK(same->alpha().is_identity());

  AlgebraPtr dead = yau_twist(L0, Matrix(4, 4));
  CHECK(dead->table().empty());
  CHECK(dead->alpha().is_zero());

  // the twisted bracket table: g applied to every structure constant
  Matrix g(4, 4);
  g.at(0, 0) = 1;
  g.at(1, 1) = -1;
  g.at(2, 2) = 1;
  g.at(3, 3) = -1;
  AlgebraPtr Lt = yau_twist(L0, g);
  CHECK(Lt->table() == catalog_algebra("sec5.L")->table());
  CHECK(Lt->alpha() == g);

  // not a self-morphism: rejected
  Matrix bad(4, 4);
  bad.at(0, 1) = 1;
  CHECK_THROWS_AS(yau_twist(L0, bad), Error);
  // twisting needs the identity twist on the input
  CHECK_THROWS_AS(yau_twist(catalog_algebra("sec5.L"), g), Error);
}

TEST_CASE("morphism checks") {
  Extension f = catalog_extension("ex52.f");
  CHECK(check_morphism(f.map).ok());

  AlgebraPtr K = f.map.source;
  Morphism ident{"id", K, K, Matrix::identity(4)};
  CHECK(check_morphism(ident).ok());

  Morphism broken = f.map;
  broken.matrix.at(0, 3) = 1;  // a4 -> e1 instead of 0
  MorphismCheck chk = check_morphism(broken);
  CHECK(!chk.ok());
  CHECK(!chk.bracket_ok);
  CHECK(!chk.violations.empty());
}

TEST_CASE("skew-symmetry recognition") {
  CHECK(is_hom_lie(*catalog_algebra("sec5.L")));
  CHECK(!is_hom_lie(*catalog_algebra("ex37.K")));  // [a2,a2,a2] = a1 violates alternation
  CHECK(is_hom_lie(*catalog_algebra("syn.abelian")));
}

TEST_CASE("surjective images of perfect algebras are perfect") {
  for (const std::string& name : testsupport::extension_fixture_names()) {
    Extension e = catalog_extension(name);
    if (is_perfect(*e.map.source)) CHECK(is_perfect(*e.map.target));
  }
}

TEST_CASE("the center is twist-invariant when the twist is surjective") {
  for (const std::string& name : testsupport::algebra_fixture_names()) {
    AlgebraPtr a = catalog_algebra(name);
    if (rank(a->alpha()) != a->dim()) continue;
    Subspace z = center(*a);
    CHECK(z.contains(image_under(a->alpha(), z)));
  }
}

TEST_CASE("arity four stays within the desk scale") {
  // zero twist, one quartic bracket
  AlgebraPtr a = new_algebra("Q4", 4, 2, {"a", "b"}, {{{0, 0, 0, 0}, bv(2, 1)}}, Matrix(2, 2));
  CHECK(a->is_valid());
  CHECK(!is_perfect(*a));
  CHECK(center(*a) == Subspace::span(2, {bv(2, 1)}));
  CHECK(hl0(*a).dim == 1);
  CHECK(hl1(*a).dim == 15);  // ker delta1 inside the 16-dim quartic power, zero twist
  AlgebraPtr d = derived_hom_leibniz(a);
  CHECK(d->dim() == 8);
  // skew generation in arity four
  AlgebraPtr skew = new_algebra("S4", 4, 4, {"x1", "x2", "x3", "x4"},
                                {{{0, 1, 2, 3}, bv(4, 0)}}, Matrix(4, 4),
                                {.generate_skew = true});
  CHECK(skew->table().size() == 24);
  CHECK(is_hom_lie(*skew));
}

TEST_CASE("mismatched ambient dimensions are rejected") {
  CHECK_THROWS_AS(sum(Subspace::full(2), Subspace::full(3)), Error);
  CHECK_THROWS_AS(intersect(Subspace::full(2), Subspace::full(3)), Error);
  AlgebraPtr L = catalog_algebra("ex52.L");
  CHECK_THROWS_AS(commutator_subspace(*L, std::vector<Subspace>(3, Subspace::full(2))), Error);
  CHECK_THROWS_AS(bracket_eval(*L, {zero_vec(2), zero_vec(3), zero_vec(3)}), Error);
}

TEST_CASE("direct products multiply componentwise") {
  AlgebraPtr p = direct_product(catalog_algebra("ex37.L"), catalog_algebra("rem32.L"));
  CHECK(p->dim() == 4);
  CHECK(p->is_valid());
  CHECK(center(*p).dim() == center(*catalog_algebra("ex37.L")).dim() +
                                center(*catalog_algebra("rem32.L")).dim());
}
