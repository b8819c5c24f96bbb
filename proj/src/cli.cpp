#include "homnalg/cli.hpp"

#include <json.hpp>

#include <iostream>
#include <optional>
#include <algorithm>
#include <set>
#include <sstream>

#include "homnalg/catalog.hpp"
#include "homnalg/hna.hpp"
#include "homnalg/tensorprod.hpp"

namespace homnalg {

namespace {

using nlohmann::json;

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3;

struct Cli {
  std::string command;
  std::string file;
  std::map<std::string, std::string> opts;   // --name value
  std::vector<std::string> flags;            // --name (no value)
  bool json_mode = false;

  bool has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
  std::optional<std::string> opt(const std::string& k) const {
    auto it = opts.find(k);
    if (it == opts.end()) return std::nullopt;
    return it->second;
  }
};

const char* kUsageText = R"(usage: homnalg <command> [options] [file.hna]

commands operating on a .hna file:
  check FILE                       validate every algebra and morphism
  center --algebra A FILE          center Z(A)
  commutator --algebra A [--sub GENS]... FILE
                                   commutator subspace (default: all slots full)
  perfect --algebra A FILE         is A perfect?
  ann --algebra A FILE             adjacent-slot annihilator span
  lie-quotient --algebra A FILE    quotient by the annihilator span
  quotient --algebra A --sub GENS FILE
                                   quotient by an n-sided Hom-ideal
  dnl --algebra A FILE             induced binary algebra on the tensor power
  twist --algebra A --by G FILE    bracket g([...]) with twist g
  hl0|hl1 --algebra A FILE         homology with trivial coefficients
  hl --algebra A --degree K FILE   generic-complex homology
  uce --algebra A FILE             universal central extension data
  classify --morphism F FILE       central / alpha-central / neither
  beta --morphism F FILE           induced map from the uce of the base
  pullback --tau F --pi G FILE     pull-back of two extensions onto one base
  compose --outer F --inner G FILE composite extension, classified fresh
  section --morphism F FILE        section through the uce, when hl1 vanishes
  cond2 --algebra A FILE           twisted alternation condition
  unicentral --morphism F [--raw] FILE
                                   center image versus base center
  closed --algebra A FILE          centrally closed?
  thm58 --algebra A FILE           twisted-quotient comparison with the uce
  tensor --algebra A [--sub GENS] FILE
                                   non-abelian tensor product dimensions
  psi --algebra A [--sub GENS] FILE
                                   bracket map out of the tensor product
  phi --algebra A FILE             comparison of the tensor product with the uce
  prop46 --algebra A --sub GENS FILE
                                   six-term kernel/cokernel sequence report
catalog:
  catalog [--list] [--run NAME|all] [--print-hna PREFIX]

GENS is a semicolon-separated list of linear combinations of basis labels,
e.g. --sub "e2; e3" or --sub "e1 + 2*e2".
options: --json (machine-readable report), HOMNALG_MAX_OPS (resource cap)
exit codes: 0 ok, 1 checked property failed, 2 parse/usage error, 3 resource cap
)";

[[noreturn]] void usage_error(const std::string& msg) {
  throw Error("usage: " + msg);
}

Cli parse_args(const std::vector<std::string>& args) {
  Cli c;
  if (args.empty()) usage_error("missing command (try 'homnalg help')");
  c.command = args[0];
  static const std::set<std::string> value_opts = {"--algebra", "--morphism", "--by",  "--tau",
                                                   "--pi",      "--outer",    "--inner", "--degree",
                                                   "--run",     "--print-hna", "--sub"};
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      c.json_mode = true;
    } else if (a.rfind("--", 0) == 0) {
      if (value_opts.count(a)) {
        if (i + 1 >= args.size()) usage_error("option " + a + " needs a value");
        if (a == "--sub") {
          // repeatable: join with '|'
          c.opts[a] += (c.opts.count(a) && !c.opts[a].empty() ? "|" : "") + args[++i];
        } else {
          c.opts[a] = args[++i];
        }
      } else {
        c.flags.push_back(a);
      }
    } else {
      if (!c.file.empty()) usage_error("more than one input file");
      c.file = a;
    }
  }
  return c;
}

AlgebraPtr want_algebra(const Cli& cli, const Document& doc) {
  auto name = cli.opt("--algebra");
  if (!name) usage_error("--algebra NAME is required");
  AlgebraPtr a = doc.find_algebra(*name);
  if (!a) usage_error("unknown algebra '" + *name + "'");
  if (!a->is_valid())
    usage_error("algebra '" + *name + "' failed validation (run 'check' for details)");
  return a;
}

Morphism want_morphism(const Cli& cli, const Document& doc, const std::string& key) {
  auto name = cli.opt(key);
  if (!name) usage_error(key + " NAME is required");
  const Morphism* m = doc.find_morphism(*name);
  if (!m) usage_error("unknown morphism '" + *name + "'");
  return *m;
}

Vec parse_lincomb_arg(const std::string& text, const AlgebraPtr& a) {
  // reuse the .hna lincomb grammar by parsing a synthetic bracket-free snippet
  std::string doc = print_algebra_hna("T", *a);
  // append a morphism whose single map line carries the lincomb
  doc += "\nmorphism probe : T -> T {\n";
  for (std::uint32_t c = 0; c < a->dim(); ++c) {
    doc += "  map " + a->labels()[c] + " = " + (c == 0 ? text : std::string("0")) + " ;\n";
  }
  doc += "}\n";
  Document d = parse_hna(doc, "<arg>");
  return d.morphisms.at(0).matrix.column(0);
}

Subspace parse_sub_arg(const std::string& text, const AlgebraPtr& a) {
  std::vector<Vec> gens;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    // trim
    std::size_t b = piece.find_first_not_of(" \t");
    std::size_t e = piece.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    gens.push_back(parse_lincomb_arg(piece.substr(b, e - b + 1), a));
  }
  return Subspace::span(a->dim(), gens);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, sep)) out.push_back(piece);
  return out;
}

json subspace_json(const Subspace& s, const std::vector<std::string>& labels) {
  json j;
  j["dim"] = s.dim();
  json basis = json::array();
  for (const Vec& v : s.basis()) basis.push_back(lincomb_str(v, labels));
  j["basis"] = basis;
  return j;
}

void print_subspace(std::ostream& out, const Subspace& s,
                    const std::vector<std::string>& labels, const std::string& title) {
  out << title << ": dim " << s.dim() << "\n";
  for (const Vec& v : s.basis()) out << "  " << lincomb_str(v, labels) << "\n";
}

struct Report {
  json j;
  std::ostringstream text;
  int code = kOk;
};

Extension to_extension(const Morphism& m) {
  if (!m.source->is_valid() || !m.target->is_valid())
    usage_error("morphism endpoints failed validation");
  return make_extension(m);
}

int finish(const Cli& cli, Report& rep, std::ostream& out) {
  if (cli.json_mode) {
    rep.j["command"] = cli.command;
    json inputs;
    if (!cli.file.empty()) inputs["file"] = cli.file;
    for (const auto& [k, v] : cli.opts) inputs[k.substr(2)] = v;
    rep.j["inputs"] = inputs;
    if (!rep.j.contains("advisories")) rep.j["advisories"] = json::array();
    out << rep.j.dump(2) << "\n";
  } else {
    out << rep.text.str();
  }
  return rep.code;
}

int dispatch(const Cli& cli, std::ostream& out) {
  Report rep;
  rep.j["results"] = json::object();
  json& res = rep.j["results"];

  if (cli.command == "help" || cli.command == "--help") {
    out << kUsageText;
    return kOk;
  }

  static const std::set<std::string> known = {
      "check",   "center",  "commutator", "perfect", "ann",    "lie-quotient", "quotient",
      "dnl",     "twist",   "hl0",        "hl1",     "hl",     "uce",          "classify",
      "beta",    "pullback", "compose",   "section", "cond2",  "unicentral",   "closed",
      "thm58",   "tensor",  "psi",        "phi",     "prop46", "catalog"};
  if (!known.count(cli.command))
    usage_error("unknown command '" + cli.command + "' (try 'homnalg help')");

  if (cli.command == "catalog") {
    if (auto p = cli.opt("--print-hna")) {
      Document doc;
      for (const std::string& name : list_fixtures()) {
        if (name.rfind(*p, 0) != 0) continue;
        const Fixture& f = get_fixture(name);
        std::string short_name = name.substr(name.find('.') + 1);
        // dimension-zero algebras have no representation in the file format
        if (f.algebra && f.algebra->dim() > 0) doc.algebras.emplace_back(short_name, f.algebra);
        if (f.morphism) {
          Morphism m = *f.morphism;
          m.name = short_name;
          doc.morphisms.push_back(std::move(m));
        }
      }
      if (doc.algebras.empty() && doc.morphisms.empty())
        usage_error("no fixtures match prefix '" + *p + "'");
      out << print_hna(doc);
      return kOk;
    }
    if (auto r = cli.opt("--run")) {
      auto results = run_expected_facts(*r);
      bool all_ok = true;
      json facts = json::array();
      for (const auto& fr : results) {
        all_ok = all_ok && fr.passed;
        rep.text << (fr.passed ? "pass" : "FAIL") << "  " << fr.description
                 << (fr.detail.empty() ? "" : "  (" + fr.detail + ")") << "\n";
        facts.push_back({{"fact", fr.description}, {"passed", fr.passed}, {"detail", fr.detail}});
      }
      res["facts"] = facts;
      res["all_passed"] = all_ok;
      rep.text << (all_ok ? "all facts hold" : "some facts FAILED") << "\n";
      rep.code = all_ok ? kOk : kCheckFailed;
      return finish(cli, rep, out);
    }
    // --list (default)
    json names = json::array();
    for (const std::string& name : list_fixtures()) {
      const Fixture& f = get_fixture(name);
      rep.text << name << "  (" << f.provenance << ")\n";
      names.push_back(name);
    }
    res["fixtures"] = names;
    return finish(cli, rep, out);
  }

  if (cli.file.empty()) usage_error("missing input file");
  Document doc = parse_hna_file(cli.file);

  if (cli.command == "check") {
    bool all_ok = true;
    json algs = json::array();
    for (const auto& [name, a] : doc.algebras) {
      json ja;
      ja["name"] = name;
      ja["fundamental_identity"] = a->validation().fundamental;
      ja["multiplicative"] = a->validation().multiplicative;
      rep.text << "algebra " << name << ": "
               << (a->is_valid() ? "valid" : "INVALID") << "\n";
      if (!a->validation().fundamental) {
        auto viols = validate_fundamental_identity(*a);
        rep.text << "  fundamental identity fails on " << viols.size() << " basis tuple(s)\n";
        std::size_t shown = 0;
        json jv = json::array();
        for (const auto& v : viols) {
          std::string tup;
          for (std::uint32_t i : v.tuple) tup += (tup.empty() ? "" : ",") + a->labels()[i];
          jv.push_back(tup);
          if (shown++ < 5) rep.text << "    at (" << tup << ")\n";
        }
        ja["violations"] = jv;
      }
      if (!a->validation().multiplicative) rep.text << "  twist does not preserve the bracket\n";
      all_ok = all_ok && a->is_valid();
      algs.push_back(ja);
    }
    json mors = json::array();
    for (const auto& [name, chk] : doc.morphism_checks) {
      rep.text << "morphism " << name << ": " << (chk.ok() ? "valid" : "INVALID") << "\n";
      mors.push_back({{"name", name}, {"valid", chk.ok()}});
      all_ok = all_ok && chk.ok();
    }
    res["algebras"] = algs;
    res["morphisms"] = mors;
    res["all_valid"] = all_ok;
    rep.code = all_ok ? kOk : kCheckFailed;
    return finish(cli, rep, out);
  }

  if (cli.command == "center") {
    AlgebraPtr a = want_algebra(cli, doc);
    Subspace z = center(*a);
    print_subspace(rep.text, z, a->labels(), "Z(" + a->name() + ")");
    res["center"] = subspace_json(z, a->labels());
    return finish(cli, rep, out);
  }

  if (cli.command == "commutator") {
    AlgebraPtr a = want_algebra(cli, doc);
    std::vector<Subspace> slots(a->arity(), Subspace::full(a->dim()));
    if (auto s = cli.opt("--sub")) {
      auto pieces = split(*s, '|');
      if (pieces.size() > a->arity()) usage_error("more --sub arguments than slots");
      for (std::size_t i = 0; i < pieces.size(); ++i) slots[i] = parse_sub_arg(pieces[i], a);
    }
    Subspace c = commutator_subspace(*a, slots);
    print_subspace(rep.text, c, a->labels(), "commutator");
    res["commutator"] = subspace_json(c, a->labels());
    return finish(cli, rep, out);
  }

  if (cli.command == "perfect") {
    AlgebraPtr a = want_algebra(cli, doc);
    bool p = is_perfect(*a);
    rep.text << a->name() << (p ? " is perfect\n" : " is not perfect\n");
    res["perfect"] = p;
    return finish(cli, rep, out);
  }

  if (cli.command == "ann") {
    AlgebraPtr a = want_algebra(cli, doc);
    Subspace s = ann_subspace(*a);
    print_subspace(rep.text, s, a->labels(), "annihilator span");
    res["ann"] = subspace_json(s, a->labels());
    return finish(cli, rep, out);
  }

  if (cli.command == "lie-quotient" || cli.command == "quotient") {
    AlgebraPtr a = want_algebra(cli, doc);
    QuotientResult q = cli.command == "lie-quotient"
                           ? lie_quotient(a)
                           : quotient_algebra(a, [&] {
                               auto s = cli.opt("--sub");
                               if (!s) usage_error("--sub GENS is required");
                               return parse_sub_arg(*s, a);
                             }());
    rep.text << print_algebra_hna(hna_identifier(q.algebra->name()), *q.algebra);
    res["quotient"] = print_algebra_hna(hna_identifier(q.algebra->name()), *q.algebra);
    res["dim"] = q.algebra->dim();
    return finish(cli, rep, out);
  }

  if (cli.command == "dnl") {
    AlgebraPtr a = want_algebra(cli, doc);
    AlgebraPtr d = derived_hom_leibniz(a);
    rep.text << print_algebra_hna(hna_identifier(d->name()), *d);
    res["dnl"] = print_algebra_hna(hna_identifier(d->name()), *d);
    res["dim"] = d->dim();
    return finish(cli, rep, out);
  }

  if (cli.command == "twist") {
    AlgebraPtr a = want_algebra(cli, doc);
    Morphism g = want_morphism(cli, doc, "--by");
    if (g.source != a || g.target != a) usage_error("--by must name a self-morphism of --algebra");
    AlgebraPtr t = yau_twist(a, g.matrix);
    rep.text << print_algebra_hna(hna_identifier(t->name()), *t);
    res["twisted"] = print_algebra_hna(hna_identifier(t->name()), *t);
    return finish(cli, rep, out);
  }

  if (cli.command == "hl0" || cli.command == "hl1" || cli.command == "hl") {
    AlgebraPtr a = want_algebra(cli, doc);
    std::uint32_t k = 0;
    HomologyGroup h;
    if (cli.command == "hl0") {
      h = hl0(*a);
    } else if (cli.command == "hl1") {
      h = hl1(*a);
      k = 1;
    } else {
      auto dg = cli.opt("--degree");
      if (!dg) usage_error("--degree K is required");
      k = static_cast<std::uint32_t>(std::stoul(*dg));
      if (k > 2) usage_error("--degree is capped at 2");
      h = hl_general(a, k);
    }
    rep.text << "HL_" << (cli.command == "hl" ? k : (cli.command == "hl1" ? 1u : 0u)) << "("
             << a->name() << ") has dimension " << h.dim << "\n";
    res["degree"] = cli.command == "hl" ? k : (cli.command == "hl1" ? 1u : 0u);
    res["dim"] = h.dim;
    res["cycle_dim"] = h.cycles.dim();
    return finish(cli, rep, out);
  }

  if (cli.command == "uce") {
    AlgebraPtr a = want_algebra(cli, doc);
    UceResult u = uce(a);
    rep.text << "uce(" << a->name() << "): dim " << u.algebra->dim() << ", kernel dim "
             << u.kernel.dim() << ", u " << (is_surjective(u.u) ? "surjective" : "not surjective")
             << ", bracket well-defined: " << (u.well_defined ? "yes" : "NO") << "\n";
    res["dim"] = u.algebra->dim();
    res["kernel_dim"] = u.kernel.dim();
    res["u_surjective"] = is_surjective(u.u);
    res["well_defined"] = u.well_defined;
    res["identity3"] = identity3_check(u);
    return finish(cli, rep, out);
  }

  if (cli.command == "classify") {
    Extension e = to_extension(want_morphism(cli, doc, "--morphism"));
    rep.text << e.map.name << ": central: " << (e.central ? "yes" : "no")
             << ", alpha-central: " << (e.alpha_central ? "yes" : "no") << "\n";
    res["central"] = e.central;
    res["alpha_central"] = e.alpha_central;
    res["classification"] = ext_class_name(classify_extension(e));
    res["kernel"] = subspace_json(e.kernel, e.map.source->labels());
    return finish(cli, rep, out);
  }

  if (cli.command == "beta") {
    Extension e = to_extension(want_morphism(cli, doc, "--morphism"));
    UceResult u = uce(e.map.target);
    Morphism b = induced_beta(u, e);
    rep.text << "beta: uce(" << e.map.target->name() << ") -> " << e.map.source->name()
             << " constructed; pi . beta = u holds\n";
    res["uce_dim"] = u.algebra->dim();
    res["composition_holds"] = true;
    return finish(cli, rep, out);
  }

  if (cli.command == "pullback") {
    Extension tau = to_extension(want_morphism(cli, doc, "--tau"));
    Extension pi = to_extension(want_morphism(cli, doc, "--pi"));
    PullbackResult p = pullback_extension(tau, pi);
    Extension proj = make_extension(p.to_second);
    rep.text << "pullback dim " << p.algebra->dim() << "; projection onto "
             << pi.map.source->name() << " is " << ext_class_name(classify_extension(proj))
             << " with kernel dim " << proj.kernel.dim() << "\n";
    res["dim"] = p.algebra->dim();
    res["projection_class"] = ext_class_name(classify_extension(proj));
    res["projection_kernel_dim"] = proj.kernel.dim();
    return finish(cli, rep, out);
  }

  if (cli.command == "compose") {
    Extension outer = to_extension(want_morphism(cli, doc, "--outer"));
    Extension inner = to_extension(want_morphism(cli, doc, "--inner"));
    Extension comp = compose_extensions(outer, inner);
    rep.text << "composite: central: " << (comp.central ? "yes" : "no")
             << ", alpha-central: " << (comp.alpha_central ? "yes" : "no") << ", kernel dim "
             << comp.kernel.dim() << "\n";
    res["central"] = comp.central;
    res["alpha_central"] = comp.alpha_central;
    res["kernel_dim"] = comp.kernel.dim();
    return finish(cli, rep, out);
  }

  if (cli.command == "section") {
    Extension e = to_extension(want_morphism(cli, doc, "--morphism"));
    auto s = section_via_uce(e);
    if (s) {
      rep.text << "section exists; rho . sigma = id verified\n";
      res["section"] = true;
    } else {
      rep.text << "no section through the uce (hl1 of the base does not vanish)\n";
      res["section"] = false;
    }
    return finish(cli, rep, out);
  }

  if (cli.command == "cond2") {
    AlgebraPtr a = want_algebra(cli, doc);
    bool ok = condition2_check(*a);
    rep.text << "twisted alternation condition: " << (ok ? "holds" : "fails") << "\n";
    res["condition2"] = ok;
    rep.code = ok ? kOk : kCheckFailed;
    return finish(cli, rep, out);
  }

  if (cli.command == "unicentral") {
    Extension e = to_extension(want_morphism(cli, doc, "--morphism"));
    bool raw = cli.has_flag("--raw");
    UnicentralityReport r = unicentrality_check(e, raw);
    rep.text << (raw ? "raw " : "") << "center comparison: " << (r.holds ? "holds" : "fails")
             << " (image dim " << r.lhs.dim() << ", base center dim " << r.rhs.dim() << ")\n";
    res["holds"] = r.holds;
    res["lhs"] = subspace_json(r.lhs, e.map.target->labels());
    res["rhs"] = subspace_json(r.rhs, e.map.target->labels());
    rep.code = r.holds ? kOk : kCheckFailed;
    return finish(cli, rep, out);
  }

  if (cli.command == "closed") {
    AlgebraPtr a = want_algebra(cli, doc);
    bool ok = centrally_closed_check(a);
    rep.text << a->name() << (ok ? " is centrally closed\n" : " is not centrally closed\n");
    res["centrally_closed"] = ok;
    rep.code = ok ? kOk : kCheckFailed;
    return finish(cli, rep, out);
  }

  if (cli.command == "thm58") {
    AlgebraPtr a = want_algebra(cli, doc);
    Thm58Report r = thm58_isomorphism_check(a);
    rep.text << "advisories: perfect=" << r.perfect << " alpha_injective=" << r.alpha_injective
             << " condition2=" << r.condition2_base << " condition2_uce=" << r.condition2_uce
             << "\n"
             << "induced map " << (r.map_well_defined ? "well-defined" : "ill-defined")
             << "; quotient dims " << r.dim_uce_quotient << " vs " << r.dim_base_quotient
             << "; isomorphism: " << (r.holds ? "yes" : "no") << "\n";
    res["holds"] = r.holds;
    res["map_well_defined"] = r.map_well_defined;
    res["dims"] = {r.dim_uce_quotient, r.dim_base_quotient};
    json adv = json::array();
    if (!r.perfect) adv.push_back("hypothesis failure: algebra is not perfect");
    if (!r.alpha_injective) adv.push_back("hypothesis failure: twist is not injective");
    if (!r.condition2_base) adv.push_back("hypothesis failure: twisted alternation fails");
    if (!r.condition2_uce) adv.push_back("hypothesis failure: twisted alternation fails on the uce");
    rep.j["advisories"] = adv;
    rep.code = r.holds ? kOk : kCheckFailed;
    return finish(cli, rep, out);
  }

  if (cli.command == "tensor" || cli.command == "psi" || cli.command == "phi" ||
      cli.command == "prop46") {
    AlgebraPtr a = want_algebra(cli, doc);
    std::vector<Subspace> ideals(a->arity(), Subspace::full(a->dim()));
    if (auto s = cli.opt("--sub")) ideals[0] = parse_sub_arg(split(*s, '|')[0], a);

    if (cli.command == "prop46") {
      if (!cli.opt("--sub")) usage_error("--sub GENS is required");
      Prop46Report r = prop46_sequence(a, ideals[0]);
      rep.text << "dims: ker(psi|)=" << r.dim_ker_psi_restricted << " hl1=" << r.dim_hl1
               << " hl1(quotient)=" << r.dim_hl1_quotient << " coker=" << r.dim_coker << "\n"
               << "exact at hl1: " << r.exact_at_first_middle
               << ", exact at hl1(quotient): " << r.exact_at_second_middle
               << ", onto coker: " << r.connecting_onto_coker << "\n";
      res["dims"] = {r.dim_ker_psi_restricted, r.dim_hl1, r.dim_hl1_quotient, r.dim_coker};
      res["exact"] = r.exact_at_first_middle && r.exact_at_second_middle && r.connecting_onto_coker;
      rep.code = (r.exact_at_first_middle && r.exact_at_second_middle && r.connecting_onto_coker)
                     ? kOk
                     : kCheckFailed;
      return finish(cli, rep, out);
    }

    TensorPresentation t = tensor_product(a, ideals);
    if (cli.command == "tensor") {
      rep.text << "free dim " << t.free_dim() << ", relations dim " << t.relations().dim()
               << ", tensor product dim " << t.space().dim() << "\n";
      res["free_dim"] = t.free_dim();
      res["relations_dim"] = t.relations().dim();
      res["dim"] = t.space().dim();
      return finish(cli, rep, out);
    }
    if (cli.command == "psi") {
      PsiResult r = psi_map(t);
      rep.text << "psi is " << (r.is_morphism ? "" : "NOT ") << "a homomorphism; image dim "
               << r.image.dim() << "\n";
      res["is_morphism"] = r.is_morphism;
      res["image_dim"] = r.image.dim();
      res["image_in_intersection"] = r.image_in_intersection;
      return finish(cli, rep, out);
    }
    // phi
    UceResult u = uce(a);
    PhiReport r = phi_to_uce(t, u);
    rep.text << "phi well-defined: " << r.well_defined << ", injective: " << r.injective
             << ", surjective: " << r.surjective << "\n";
    res["well_defined"] = r.well_defined;
    res["injective"] = r.injective;
    res["surjective"] = r.surjective;
    return finish(cli, rep, out);
  }

  usage_error("unknown command '" + cli.command + "' (try 'homnalg help')");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Cli cli = parse_args(args);
    return dispatch(cli, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("usage: ", 0) == 0) {
      err << msg << "\n";
    } else {
      err << "error: " << msg << "\n";
    }
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace homnalg
