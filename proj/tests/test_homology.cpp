#include <doctest.h>

#include "homnalg/homology.hpp"
#include "test_support.hpp"

using namespace homnalg;
using testsupport::Rng;

namespace {

Vec bv(std::uint32_t d, std::uint32_t i, int c = 1) {
  Vec v(d);
  v[i] = c;
  return v;
}

// untwisted degree-2 differential, written without any twist application;
// used to check that the identity twist reproduces it
Matrix untwisted_delta2(const HomNAlgebra& a) {
  const std::uint32_t n = a.arity(), d = a.dim();
  const std::size_t rows = 1;
  (void)rows;
  std::size_t nrows = 1, ncols = 1;
  for (std::uint32_t i = 0; i < n; ++i) nrows *= d;
  for (std::uint32_t i = 0; i < 2 * n - 1; ++i) ncols *= d;
  Matrix m(nrows, ncols);
  for_each_tuple(d, 2 * n - 1, [&](const IdxTuple& full) {
    IdxTuple x(full.begin(), full.begin() + n);
    IdxTuple y(full.begin() + n, full.end());
    std::map<std::size_t, Rat> col;
    if (const Vec* v = a.table_find(x)) {
      // [x...] x y_1 x ... x y_{n-1}
      for (std::uint32_t c = 0; c < d; ++c) {
        if (sgn((*v)[c]) == 0) continue;
        IdxTuple out{c};
        out.insert(out.end(), y.begin(), y.end());
        col[flatten(out, d)] += (*v)[c];
      }
    }
    IdxTuple look(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      look[0] = x[i];
      std::copy(y.begin(), y.end(), look.begin() + 1);
      const Vec* v = a.table_find(look);
      if (!v) continue;
      for (std::uint32_t c = 0; c < d; ++c) {
        if (sgn((*v)[c]) == 0) continue;
        IdxTuple out(x);
        out[i] = c;
        col[flatten(out, d)] -= (*v)[c];
      }
    }
    for (const auto& [r, val] : col)
      if (sgn(val) != 0) m.at(r, flatten(full, d)) = val;
  });
  return m;
}

}  // namespace

TEST_CASE("co-representation actions") {
  Rng rng(23);
  AlgebraPtr K = catalog_algebra("ex37.K");
  // left(a3, a2 x a2) = [a3,a2,a2] = a3
  Vec t = bv(9, 4);  // a2 x a2 flattened: 1*3+1
  CHECK(corep_action_left(*K, bv(3, 2), t) == bv(3, 2));
  // left + right of the same arguments cancel
  for (int trial = 0; trial < 10; ++trial) {
    Vec l = rng.vec(3), tt = rng.vec(9);
    Vec sum = corep_action_left(*K, l, tt);
    Vec r = corep_action_right(*K, tt, l);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r[i];
    CHECK(is_zero(sum));
  }
  AlgebraPtr ab = catalog_algebra("syn.abelian");
  CHECK(is_zero(corep_action_left(*ab, rng.vec(2), rng.vec(4))));
}

TEST_CASE("first differential columns come from the table") {
  AlgebraPtr K = catalog_algebra("ex37.K");
  Matrix d1 = delta1(*K);
  // column of a3 x a3 x a3 is a2
  CHECK(d1.column(flatten({2, 2, 2}, 3)) == bv(3, 1));
  LeibnizComplex c(K);
  CHECK(c.matrix(1) == d1);
}

TEST_CASE("zero twist kills the second differential") {
  for (const char* name : {"ex37.K", "ex52.L", "rem32.K"}) {
    AlgebraPtr a = catalog_algebra(name);
    CHECK(delta2(*a).is_zero());
    LeibnizComplex c(a);
    CHECK(c.matrix(2).is_zero());
  }
}

TEST_CASE("abelian algebras have zero differentials in every degree") {
  AlgebraPtr ab = catalog_algebra("syn.abelian");
  LeibnizComplex c(ab);
  for (std::uint32_t k = 1; k <= 3; ++k) CHECK(c.matrix(k).is_zero());
}

TEST_CASE("delta1 . delta2 vanishes on every catalog algebra") {
  for (const std::string& name : testsupport::algebra_fixture_names()) {
    AlgebraPtr a = catalog_algebra(name);
    CHECK(mul(delta1(*a), delta2(*a)).is_zero());
  }
}

TEST_CASE("the low differential of the generic complex matches the direct formula") {
  for (const std::string& name : testsupport::algebra_fixture_names()) {
    AlgebraPtr a = catalog_algebra(name);
    LeibnizComplex c(a);
    CHECK(c.matrix(1) == delta1(*a));
    CHECK(c.matrix(2) == delta2(*a));
  }
}

TEST_CASE("complex property in degrees one and two") {
  for (const std::string& name : testsupport::algebra_fixture_names()) {
    AlgebraPtr a = catalog_algebra(name);
    LeibnizComplex c(a);
    CHECK(mul(c.matrix(1), c.matrix(2)).is_zero());
    // degree two checked column by column (the dense degree-3 matrix would be
    // large for the 4-dim fixtures)
    for (std::size_t col = 0; col < c.module_dim(3); ++col) {
      SparseVec img = c.apply_basis(3, col);
      CHECK(c.apply_chain(2, img).empty());
    }
  }
}

TEST_CASE("hand-expanded twisted column of the second differential") {
  // column of e2 x e3 x e4 x e1 x e2 for the twisted 4-dim fixture:
  //   [e2,e3,e4] x a(e1) x a(e2)       = -(e1 x e1 x e2)
  // - a(e2) x [e3,e1,e2] x a(e4)       = +(e2 x e4 x e4)
  // - a(e2) x a(e3) x [e4,e1,e2]       = +(e2 x e3 x e3)
  // (the slot-1 term [e2,e1,e2] vanishes on the repeated entry)
  AlgebraPtr Lt = catalog_algebra("sec5.L");
  Matrix d2 = delta2(*Lt);
  Vec col = d2.column(flatten({1, 2, 3, 0, 1}, 4));
  Vec expect(64);
  expect[flatten({0, 0, 1}, 4)] = -1;
  expect[flatten({1, 3, 3}, 4)] = 1;
  expect[flatten({1, 2, 2}, 4)] = 1;
  CHECK(col == expect);
}

TEST_CASE("the streamed column space agrees with the dense route") {
  for (const char* name : {"sec5.L", "sec5.L0", "ex52.L", "syn.leib3id", "syn.n2"}) {
    CAPTURE(name);
    AlgebraPtr a = catalog_algebra(name);
    CHECK(delta2_image(*a) == image_basis(delta2(*a)));
  }
}

TEST_CASE("degree-zero homology is the abelianization") {
  CHECK(hl0(*catalog_algebra("ex37.K")).dim == 0);
  CHECK(hl0(*catalog_algebra("ex37.F")).dim == 0);
  CHECK(hl0(*catalog_algebra("syn.abelian")).dim == 2);
  // n = 2 degeneration: the cokernel of the bracket map
  CHECK(hl0(*catalog_algebra("syn.n2")).dim == 1);
}

TEST_CASE("degree-one homology dimensions") {
  CHECK(hl1(*catalog_algebra("ex37.K")).dim == 24);
  CHECK(hl1(*catalog_algebra("ex52.L")).dim == 24);
  CHECK(hl1(*catalog_algebra("syn.abelian")).dim == 8);
  AlgebraPtr K = catalog_algebra("ex37.K");
  HomologyGroup h = hl1(*K);
  CHECK(h.cycles.dim() == 24);
  CHECK(h.space.relations().dim() == 0);
}

TEST_CASE("generic-complex homology agrees with the canonical paths") {
  for (const std::string& name : testsupport::algebra_fixture_names()) {
    AlgebraPtr a = catalog_algebra(name);
    CHECK(hl_general(a, 0).dim == hl0(*a).dim);
    CHECK(hl_general(a, 1).dim == hl1(*a).dim);
  }
  CHECK(hl_general(catalog_algebra("syn.abelian"), 2).dim == 32);  // d^(2n-1)
}

TEST_CASE("identity twist reproduces the untwisted differential") {
  AlgebraPtr leib = catalog_algebra("syn.leib3id");
  CHECK(delta2(*leib) == untwisted_delta2(*leib));
  AlgebraPtr L0 = catalog_algebra("sec5.L0");
  CHECK(delta2(*L0) == untwisted_delta2(*L0));
}

TEST_CASE("the dense degree-3 matrix is refused above the cap") {
  AlgebraPtr Lt = catalog_algebra("sec5.L");
  LeibnizComplex c(Lt);
  CHECK(c.module_dim(3) == 16384);
  CHECK_THROWS_AS(c.matrix(3), ResourceLimitError);
}

TEST_CASE("sampled identity check on the uce of the twisted fixture") {
  // validation of dimension > small-scan algebras is deferred; sample it here
  UceResult u = uce(catalog_algebra("ex37.K"));
  CHECK(u.algebra->dim() == 27);
  CHECK(!u.algebra->validation().exhaustive);
  Rng rng(31);
  const std::uint32_t d = u.algebra->dim(), n = u.algebra->arity();
  for (int trial = 0; trial < 300; ++trial) {
    IdxTuple x(n), y(n - 1);
    for (auto& c : x) c = static_cast<std::uint32_t>(rng.next() % d);
    for (auto& c : y) c = static_cast<std::uint32_t>(rng.next() % d);
    // LHS
    const Vec* inner = u.algebra->table_find(x);
    std::vector<Vec> args(n);
    args[0] = inner ? *inner : zero_vec(d);
    for (std::uint32_t j = 0; j < n - 1; ++j) args[j + 1] = u.algebra->alpha_col(y[j]);
    Vec diff = bracket_eval(*u.algebra, std::span<const Vec>(args));
    // RHS
    for (std::uint32_t i = 0; i < n; ++i) {
      IdxTuple look(n);
      look[0] = x[i];
      std::copy(y.begin(), y.end(), look.begin() + 1);
      const Vec* vi = u.algebra->table_find(look);
      if (!vi) continue;
      for (std::uint32_t j = 0; j < n; ++j)
        args[j] = (j == i) ? *vi : u.algebra->alpha_col(x[j]);
      Vec term = bracket_eval(*u.algebra, std::span<const Vec>(args));
      for (std::uint32_t c = 0; c < d; ++c) diff[c] -= term[c];
    }
    CHECK(is_zero(diff));
  }
}
