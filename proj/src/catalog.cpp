#include "homnalg/catalog.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace homnalg {

namespace {

Matrix diag(const std::vector<int>& ds) {
  Matrix m(ds.size(), ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) m.at(i, i) = ds[i];
  return m;
}

Vec basis_vec(std::uint32_t d, std::uint32_t i, int coef = 1) {
  Vec v(d);
  v[i] = coef;
  return v;
}

Subspace span_of(std::uint32_t d, const std::vector<std::uint32_t>& idxs) {
  std::vector<Vec> gens;
  for (std::uint32_t i : idxs) gens.push_back(basis_vec(d, i));
  return Subspace::span(d, gens);
}

FactResult fact(const std::string& desc, bool ok, const std::string& detail = "") {
  return {desc, ok, detail};
}

std::string subspace_str(const Subspace& s) {
  std::ostringstream os;
  os << "dim " << s.dim();
  return os.str();
}

struct Registry;
AlgebraPtr catalog_ref(const Registry& reg, const std::string& name);

struct Registry {
  std::vector<std::string> order;
  std::map<std::string, Fixture> fixtures;

  void add_algebra(const std::string& name, AlgebraPtr a, const std::string& prov,
                   std::vector<std::function<FactResult()>> facts) {
    Fixture f;
    f.name = name;
    f.provenance = prov;
    f.algebra = std::move(a);
    f.facts = std::move(facts);
    order.push_back(name);
    fixtures.emplace(name, std::move(f));
  }
  void add_extension(const std::string& name, Extension e, const std::string& prov,
                     std::vector<std::function<FactResult()>> facts) {
    Fixture f;
    f.name = name;
    f.provenance = prov;
    f.morphism = e.map;
    f.extension = std::move(e);
    f.facts = std::move(facts);
    order.push_back(name);
    fixtures.emplace(name, std::move(f));
  }
  void add_morphism(const std::string& name, Morphism m, const std::string& prov,
                    std::vector<std::function<FactResult()>> facts) {
    Fixture f;
    f.name = name;
    f.provenance = prov;
    f.morphism = std::move(m);
    f.facts = std::move(facts);
    order.push_back(name);
    fixtures.emplace(name, std::move(f));
  }
};

AlgebraPtr catalog_ref(const Registry& reg, const std::string& name) {
  return reg.fixtures.at(name).algebra;
}

Registry build_registry() {
  Registry reg;
  using Entries = std::vector<std::pair<IdxTuple, Vec>>;

  // ---- rem32: the alpha-central / central separation pair ----
  {
    AlgebraPtr L = new_algebra("L", 3, 2, {"a1", "a2"},
                               Entries{{{0, 0, 0}, basis_vec(2, 0)}, {{1, 1, 1}, basis_vec(2, 1)}},
                               Matrix(2, 2));
    AlgebraPtr K = new_algebra("K", 3, 3, {"b1", "b2", "b3"},
                               Entries{{{0, 0, 0}, basis_vec(3, 0)},
                                       {{1, 1, 1}, basis_vec(3, 1)},
                                       {{2, 2, 2}, basis_vec(3, 2)}},
                               Matrix(3, 3));
    Matrix pm(2, 3);
    pm.at(0, 1) = 1;  // b2 -> a1
    pm.at(1, 2) = 1;  // b3 -> a2
    Extension pi = make_extension(Morphism{"pi", K, L, pm});
    reg.add_algebra("rem32.L", L, "two-dimensional idempotent-diagonal bracket, zero twist",
                    {[L] { return fact("valid", L->is_valid()); },
                     [L] { return fact("center is zero", center(*L).dim() == 0); }});
    reg.add_algebra("rem32.K", K, "three-dimensional idempotent-diagonal bracket, zero twist",
                    {[K] { return fact("valid", K->is_valid()); },
                     [K] { return fact("center is zero", center(*K).dim() == 0); },
                     [K] { return fact("perfect", is_perfect(*K)); }});
    reg.add_extension("rem32.pi", pi,
                      "surjection separating alpha-central from central",
                      {[pi] { return fact("alpha-central", pi.alpha_central); },
                       [pi] { return fact("not central", !pi.central); },
                       [pi] {
                         return fact("kernel is span{b1}",
                                     pi.kernel == span_of(3, {0}), subspace_str(pi.kernel));
                       }});
  }

  // ---- ex37: the failure of the composition-of-central-extensions property ----
  {
    AlgebraPtr L = new_algebra("L", 3, 2, {"b1", "b2"},
                               Entries{{{1, 0, 0}, basis_vec(2, 1)}, {{1, 1, 1}, basis_vec(2, 0)}},
                               Matrix(2, 2));
    AlgebraPtr K = new_algebra("K", 3, 3, {"a1", "a2", "a3"},
                               Entries{{{1, 1, 1}, basis_vec(3, 0)},
                                       {{2, 1, 1}, basis_vec(3, 2)},
                                       {{2, 2, 2}, basis_vec(3, 1)}},
                               Matrix(3, 3));
    AlgebraPtr F = new_algebra("F", 3, 4, {"e1", "e2", "e3", "e4"},
                               Entries{{{2, 1, 1}, basis_vec(4, 0)},
                                       {{2, 2, 2}, basis_vec(4, 1)},
                                       {{3, 2, 2}, basis_vec(4, 3)},
                                       {{3, 3, 3}, basis_vec(4, 2)}},
                               Matrix(4, 4));
    Matrix pm(2, 3);
    pm.at(0, 1) = 1;  // a2 -> b1
    pm.at(1, 2) = 1;  // a3 -> b2
    Extension pi = make_extension(Morphism{"pi", K, L, pm});
    Matrix rm(3, 4);
    rm.at(0, 1) = 1;  // e2 -> a1
    rm.at(1, 2) = 1;  // e3 -> a2
    rm.at(2, 3) = 1;  // e4 -> a3
    Extension rho = make_extension(Morphism{"rho", F, K, rm});
    Extension pi_rho = compose_extensions(pi, rho);
    pi_rho.map.name = "pi_rho";

    reg.add_algebra("ex37.L", L, "two-dimensional perfect base of the composition pair",
                    {[L] { return fact("valid", L->is_valid()); },
                     [L] { return fact("perfect", is_perfect(*L)); }});
    reg.add_algebra(
        "ex37.K", K, "three-dimensional perfect middle algebra of the composition pair",
        {[K] { return fact("valid", K->is_valid()); },
         [K] { return fact("perfect", is_perfect(*K)); },
         [K] {
           return fact("center is span{a1}", center(*K) == span_of(3, {0}),
                       subspace_str(center(*K)));
         },
         [K] { return fact("hl1 has dimension 24", hl1(*K).dim == 24); }});
    reg.add_algebra("ex37.F", F, "four-dimensional top algebra of the composition pair",
                    {[F] { return fact("valid", F->is_valid()); },
                     [F] { return fact("perfect", is_perfect(*F)); },
                     [F] {
                       return fact("center is span{e1}", center(*F) == span_of(4, {0}),
                                   subspace_str(center(*F)));
                     }});
    reg.add_extension("ex37.pi", pi, "central extension of the base",
                      {[pi] { return fact("central", pi.central); },
                       [pi] {
                         return fact("kernel is span{a1}", pi.kernel == span_of(3, {0}));
                       }});
    reg.add_extension("ex37.rho", rho, "central extension of the middle algebra",
                      {[rho] { return fact("central", rho.central); },
                       [rho] {
                         return fact("kernel equals the center of the source",
                                     rho.kernel == span_of(4, {0}));
                       }});
    reg.add_extension(
        "ex37.pi_rho", pi_rho, "composite extension: alpha-central but not central",
        {[pi_rho] { return fact("alpha-central", pi_rho.alpha_central); },
         [pi_rho] { return fact("not central", !pi_rho.central); },
         [pi_rho] {
           return fact("kernel is span{e1,e2}", pi_rho.kernel == span_of(4, {0, 1}),
                       subspace_str(pi_rho.kernel));
         }});
  }

  // ---- ex52: central extension that does not map center onto center ----
  {
    AlgebraPtr L = new_algebra("L", 3, 3, {"e1", "e2", "e3"},
                               Entries{{{0, 0, 0}, basis_vec(3, 0)},
                                       {{0, 0, 1}, basis_vec(3, 1)},
                                       {{0, 1, 0}, basis_vec(3, 2)}},
                               Matrix(3, 3));
    AlgebraPtr K = new_algebra("K", 3, 4, {"a1", "a2", "a3", "a4"},
                               Entries{{{2, 2, 2}, basis_vec(4, 2)},
                                       {{2, 2, 0}, basis_vec(4, 0)},
                                       {{2, 0, 2}, basis_vec(4, 1)},
                                       {{2, 2, 1}, basis_vec(4, 3)}},
                               Matrix(4, 4));
    Matrix fm(3, 4);
    fm.at(1, 0) = 1;  // a1 -> e2
    fm.at(2, 1) = 1;  // a2 -> e3
    fm.at(0, 2) = 1;  // a3 -> e1
    Extension f = make_extension(Morphism{"f", K, L, fm});
    reg.add_algebra("ex52.L", L, "three-dimensional perfect base with one-dimensional center",
                    {[L] { return fact("valid", L->is_valid()); },
                     [L] { return fact("perfect", is_perfect(*L)); },
                     [L] {
                       return fact("center is span{e3}", center(*L) == span_of(3, {2}),
                                   subspace_str(center(*L)));
                     },
                     [L] { return fact("hl1 has dimension 24", hl1(*L).dim == 24); }});
    reg.add_algebra("ex52.K", K, "four-dimensional central cover of the base",
                    {[K] { return fact("valid", K->is_valid()); },
                     [K] {
                       return fact("center is span{a4}", center(*K) == span_of(4, {3}),
                                   subspace_str(center(*K)));
                     }});
    reg.add_extension(
        "ex52.f", f, "central extension whose center image is a proper subspace of the center",
        {[f] { return fact("central", f.central); },
         [f] { return fact("kernel is span{a4}", f.kernel == span_of(4, {3})); },
         [f] {
           UnicentralityReport r = unicentrality_check(f, /*raw=*/true);
           bool strict = r.rhs.contains(r.lhs) && r.lhs.dim() < r.rhs.dim();
           return fact("raw center image strictly below the base center", !r.holds && strict,
                       "lhs dim " + std::to_string(r.lhs.dim()) + ", rhs dim " +
                           std::to_string(r.rhs.dim()));
         },
         [f] {
           UnicentralityReport r = unicentrality_check(f, /*raw=*/true);
           return fact("f(Z(K)) = 0 and Z(L) = span{e3}",
                       r.lhs.dim() == 0 && r.rhs == span_of(3, {2}));
         }});
  }

  // ---- sec5: the twisted pair realized over Q ----
  {
    Entries lie4{{{1, 2, 3}, basis_vec(4, 0)},
                 {{0, 2, 3}, basis_vec(4, 1)},
                 {{0, 1, 3}, basis_vec(4, 2)},
                 {{0, 1, 2}, basis_vec(4, 3)}};
    AlgebraPtr L0 = new_algebra("L0", 3, 4, {"e1", "e2", "e3", "e4"}, lie4, Matrix::identity(4),
                                {.generate_skew = true});
    Entries lie4a{{{1, 2, 3}, basis_vec(4, 0)},
                  {{0, 2, 3}, basis_vec(4, 1)},
                  {{0, 1, 3}, basis_vec(4, 2)},
                  {{0, 1, 2}, basis_vec(4, 3)}};
    AlgebraPtr K0 = new_algebra("K0", 3, 4, {"a1", "a2", "a3", "a4"}, lie4a, Matrix::identity(4),
                                {.generate_skew = true});
    Matrix gL = diag({1, -1, 1, -1});
    Matrix gK = diag({-1, 1, -1, 1});
    AlgebraPtr Lt = yau_twist(L0, gL);
    AlgebraPtr Kt = yau_twist(K0, gK);
    Matrix fm(4, 4);
    fm.at(1, 0) = 1;   // a1 -> e2
    fm.at(0, 1) = 1;   // a2 -> e1
    fm.at(3, 2) = 1;   // a3 -> e4
    fm.at(2, 3) = -1;  // a4 -> -e3
    Extension f = make_extension(Morphism{"f", Kt, Lt, fm});

    Morphism gLm{"gL", L0, L0, gL};
    Morphism gKm{"gK", K0, K0, gK};

    const std::string overq =
        "realized over Q: all structure constants and twist entries lie in {0, +1, -1}";
    reg.add_algebra("sec5.L0", L0, "untwisted skew four-dimensional base; " + overq,
                    {[L0] { return fact("valid", L0->is_valid()); },
                     [L0] { return fact("skew", is_hom_lie(*L0)); },
                     [L0] { return fact("perfect", is_perfect(*L0)); }});
    reg.add_algebra("sec5.K0", K0, "untwisted skew four-dimensional cover; " + overq,
                    {[K0] { return fact("valid", K0->is_valid()); }});
    reg.add_morphism("sec5.gL", gLm, "alternating-sign self-morphism used as the twist",
                     {[gLm] { return fact("self-morphism", check_morphism(gLm).ok()); }});
    reg.add_morphism("sec5.gK", gKm, "opposite alternating-sign self-morphism",
                     {[gKm] { return fact("self-morphism", check_morphism(gKm).ok()); }});
    reg.add_algebra("sec5.L", Lt, "twist of the base by the alternating-sign involution; " + overq,
                    {[Lt] { return fact("valid and multiplicative", Lt->is_valid()); },
                     [Lt] { return fact("skew", is_hom_lie(*Lt)); },
                     [Lt] { return fact("perfect", is_perfect(*Lt)); },
                     [Lt] {
                       return fact("twist injective", kernel_basis(Lt->alpha()).dim() == 0);
                     },
                     [Lt] { return fact("center is zero", center(*Lt).dim() == 0); }});
    reg.add_algebra("sec5.K", Kt, "twist of the cover by the opposite involution; " + overq,
                    {[Kt] { return fact("valid and multiplicative", Kt->is_valid()); },
                     [Kt] { return fact("center is zero", center(*Kt).dim() == 0); },
                     [Kt] {
                       return fact("twisted alternation condition", condition2_check(*Kt));
                     }});
    reg.add_extension(
        "sec5.f", f, "central extension with trivial kernel between the twisted pair",
        {[f] { return fact("central", f.central); },
         [f] { return fact("kernel is zero", f.kernel.dim() == 0); },
         [f] {
           UnicentralityReport r = unicentrality_check(f);
           return fact("center image equals the base center", r.holds);
         }});
  }

  // ---- synthetic degenerate fixtures ----
  {
    Matrix nil(2, 2);
    nil.at(0, 1) = 1;  // a2 -> a1
    AlgebraPtr ab = new_algebra("Ab", 3, 2, {"a1", "a2"}, Entries{}, nil);
    reg.add_algebra("syn.abelian", ab, "zero bracket with a nilpotent twist",
                    {[ab] { return fact("valid", ab->is_valid()); },
                     [ab] { return fact("hl0 has dimension d", hl0(*ab).dim == 2); },
                     [ab] { return fact("hl1 has dimension d^n", hl1(*ab).dim == 8); }});

    AlgebraPtr leib = new_algebra("Leib3", 3, 2, {"a", "b"},
                                  Entries{{{0, 0, 0}, basis_vec(2, 1)},
                                          {{0, 0, 1}, basis_vec(2, 1)},
                                          {{0, 1, 0}, basis_vec(2, 1, -1)}},
                                  Matrix::identity(2));
    reg.add_algebra("syn.leib3id", leib,
                    "identity-twist ternary bracket with a nonzero square bracket",
                    {[leib] { return fact("valid", leib->is_valid()); },
                     [leib] { return fact("not skew", !is_hom_lie(*leib)); },
                     [leib] {
                       return fact("twisted alternation condition fails",
                                   !condition2_check(*leib));
                     }});

    AlgebraPtr n2 = new_algebra("Bin", 2, 2, {"a", "b"},
                                Entries{{{0, 0}, basis_vec(2, 1)}}, Matrix(2, 2));
    reg.add_algebra("syn.n2", n2, "binary bracket with zero twist",
                    {[n2] { return fact("valid", n2->is_valid()); },
                     [n2] { return fact("hl0 = abelianization", hl0(*n2).dim == 1); }});

    AlgebraPtr zero = new_algebra("Zero", 3, 0, {}, Entries{}, Matrix(0, 0));
    reg.add_algebra("syn.zero", zero, "zero-dimensional algebra",
                    {[zero] { return fact("valid", zero->is_valid()); },
                     [zero] { return fact("perfect (vacuously)", is_perfect(*zero)); }});

    // abelianization x base with the projection: the product extension that
    // witnesses non-uniqueness of factorings through non-perfect covers
    AlgebraPtr leib = reg.fixtures.at("syn.leib3id").algebra;
    QuotientResult ab_q = quotient_algebra(leib, commutator_full(*leib));
    AlgebraPtr prod = direct_product(ab_q.algebra, catalog_ref(reg, "ex37.L"));
    Matrix pr(2, prod->dim());
    pr.at(0, 1) = 1;
    pr.at(1, 2) = 1;
    Extension pre = make_extension(Morphism{"pr", prod, catalog_ref(reg, "ex37.L"), pr});
    reg.add_extension("lem35.prod", pre,
                      "product of an abelianization with the base, projecting away the "
                      "abelian factor",
                      {[pre] { return fact("central", pre.central); },
                       [pre] {
                         return fact("kernel is the abelian factor", pre.kernel.dim() == 1);
                       }});
  }
  return reg;
}

const Registry& registry() {
  static const Registry reg = build_registry();
  return reg;
}

}  // namespace

const Fixture& get_fixture(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.fixtures.find(name);
  if (it == reg.fixtures.end()) throw Error("unknown fixture '" + name + "'");
  return it->second;
}

std::vector<std::string> list_fixtures() {
  return registry().order;
}

std::vector<FactResult> run_expected_facts(const std::string& name) {
  std::vector<FactResult> out;
  auto run_one = [&](const Fixture& f) {
    for (const auto& fn : f.facts) {
      FactResult r = fn();
      r.description = f.name + ": " + r.description;
      out.push_back(std::move(r));
    }
  };
  if (name == "all") {
    for (const std::string& n : registry().order) run_one(get_fixture(n));
  } else {
    run_one(get_fixture(name));
  }
  return out;
}

AlgebraPtr catalog_algebra(const std::string& name) {
  const Fixture& f = get_fixture(name);
  if (!f.algebra) throw Error("fixture '" + name + "' is not an algebra");
  return f.algebra;
}

Extension catalog_extension(const std::string& name) {
  const Fixture& f = get_fixture(name);
  if (!f.extension) throw Error("fixture '" + name + "' is not an extension");
  return *f.extension;
}

}  // namespace homnalg
