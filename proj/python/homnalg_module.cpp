#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homnalg/catalog.hpp"
#include "homnalg/hna.hpp"
#include "homnalg/tensorprod.hpp"

namespace py = pybind11;
using namespace homnalg;

namespace {

// shared_ptr<const T> is not a pybind11 holder; hand out value handles instead
struct AlgebraHandle {
  AlgebraPtr p;
};

std::vector<std::string> subspace_basis_strs(const Subspace& s,
                                             const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const Vec& v : s.basis()) out.push_back(lincomb_str(v, labels));
  return out;
}

}  // namespace

PYBIND11_MODULE(_homnalg, m) {
  m.doc() = "Exact-arithmetic computations with multiplicative Hom-Leibniz n-algebras";

  auto base = py::register_exception<Error>(m, "HomnalgError");
  py::register_exception<ParseError>(m, "HnaParseError", base.ptr());
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", base.ptr());

  py::class_<AlgebraHandle>(m, "Algebra")
      .def_property_readonly("name", [](const AlgebraHandle& a) { return a.p->name(); })
      .def_property_readonly("arity", [](const AlgebraHandle& a) { return a.p->arity(); })
      .def_property_readonly("dim", [](const AlgebraHandle& a) { return a.p->dim(); })
      .def_property_readonly("labels", [](const AlgebraHandle& a) { return a.p->labels(); })
      .def_property_readonly("valid", [](const AlgebraHandle& a) { return a.p->is_valid(); })
      .def("is_perfect", [](const AlgebraHandle& a) { return is_perfect(*a.p); })
      .def("is_hom_lie", [](const AlgebraHandle& a) { return is_hom_lie(*a.p); })
      .def("center",
           [](const AlgebraHandle& a) { return subspace_basis_strs(center(*a.p), a.p->labels()); })
      .def("center_dim", [](const AlgebraHandle& a) { return center(*a.p).dim(); })
      .def("hl0_dim", [](const AlgebraHandle& a) { return hl0(*a.p).dim; })
      .def("hl1_dim", [](const AlgebraHandle& a) { return hl1(*a.p).dim; })
      .def("condition2", [](const AlgebraHandle& a) { return condition2_check(*a.p); })
      .def("uce_dims",
           [](const AlgebraHandle& a) {
             UceResult u = uce(a.p);
             return py::make_tuple(u.algebra->dim(), u.kernel.dim());
           })
      .def("centrally_closed", [](const AlgebraHandle& a) { return centrally_closed_check(a.p); })
      .def("tensor_square_dim",
           [](const AlgebraHandle& a) {
             std::vector<Subspace> ideals(a.p->arity(), Subspace::full(a.p->dim()));
             return tensor_product(a.p, ideals).space().dim();
           })
      .def("to_hna", [](const AlgebraHandle& a) { return print_algebra_hna(a.p->name(), *a.p); })
      .def("__repr__", [](const AlgebraHandle& a) {
        return "<Algebra " + a.p->name() + " arity=" + std::to_string(a.p->arity()) +
               " dim=" + std::to_string(a.p->dim()) + ">";
      });

  py::class_<Morphism>(m, "Morphism")
      .def_property_readonly("name", [](const Morphism& f) { return f.name; })
      .def_property_readonly("source", [](const Morphism& f) { return AlgebraHandle{f.source}; })
      .def_property_readonly("target", [](const Morphism& f) { return AlgebraHandle{f.target}; })
      .def("is_valid", [](const Morphism& f) { return check_morphism(f).ok(); })
      .def("classify",
           [](const Morphism& f) {
             return std::string(ext_class_name(classify_extension(make_extension(f))));
           })
      .def("kernel_dim", [](const Morphism& f) { return kernel_basis(f.matrix).dim(); });

  py::class_<Document>(m, "Document")
      .def_property_readonly("algebra_names",
                             [](const Document& d) {
                               std::vector<std::string> names;
                               for (const auto& [n, a] : d.algebras) names.push_back(n);
                               return names;
                             })
      .def_property_readonly("morphism_names",
                             [](const Document& d) {
                               std::vector<std::string> names;
                               for (const auto& f : d.morphisms) names.push_back(f.name);
                               return names;
                             })
      .def("algebra",
           [](const Document& d, const std::string& name) {
             AlgebraPtr a = d.find_algebra(name);
             if (!a) throw Error("unknown algebra '" + name + "'");
             return AlgebraHandle{a};
           })
      .def("morphism",
           [](const Document& d, const std::string& name) {
             const Morphism* f = d.find_morphism(name);
             if (!f) throw Error("unknown morphism '" + name + "'");
             return *f;
           })
      .def("to_hna", [](const Document& d) { return print_hna(d); });

  m.def("parse", [](const std::string& text) { return parse_hna(text); },
        "Parse a .hna document from a string");
  m.def("parse_file", [](const std::string& path) { return parse_hna_file(path); },
        "Parse a .hna file");
  m.def("catalog_names", []() { return list_fixtures(); });
  m.def("catalog_algebra",
        [](const std::string& name) { return AlgebraHandle{catalog_algebra(name)}; });
  m.def("catalog_run", [](const std::string& name) {
    bool ok = true;
    for (const auto& r : run_expected_facts(name)) ok = ok && r.passed;
    return ok;
  });
}
