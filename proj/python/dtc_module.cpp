#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtc/certificate.hpp"
#include "dtc/collapse.hpp"
#include "dtc/invariants.hpp"

namespace py = pybind11;
using namespace dtc;

namespace {

using Facets = std::vector<std::vector<std::string>>;

InvariantOptions options(std::size_t budget, unsigned threads) {
  InvariantOptions o;
  o.search.budget = budget;
  o.threads = threads;
  return o;
}

Complex sub_of(const Complex& ambient, const Facets& facets) {
  std::vector<Simplex> simplices;
  for (const auto& f : facets) simplices.push_back(ambient.simplex_of(f));
  return ambient.subcomplex(simplices);
}

// Results cross the boundary as JSON text; the Python side decodes them.
std::string invariant(const Facets& facets, const std::string& kind, std::size_t budget,
                      unsigned threads) {
  ComplexPtr k = share(Complex::from_labels(facets));
  const InvariantOptions o = options(budget, threads);
  py::gil_scoped_release release;
  if (kind == "tc") return invariant_to_json(kind, *k, tc(k, o)).dump();
  if (kind == "scat") return invariant_to_json(kind, *k, scat(k, o)).dump();
  return invariant_to_json(kind, *k, scat_of_square(categorical_square(k), o)).dump();
}

}  // namespace

PYBIND11_MODULE(_dtc, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotSimplicial>(m, "NotSimplicial", PyExc_ValueError);
  py::register_exception<DomainMismatch>(m, "DomainMismatch", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("parse", [](const std::string& text) { return parse_complex(text).canonical_facets(); },
        py::arg("text"));
  m.def("invariant", &invariant, py::arg("facets"), py::arg("kind"),
        py::arg("budget") = 1'000'000, py::arg("threads") = 1);
  m.def("core", [](const Facets& facets) {
    return collapse_to_json(core(share(Complex::from_labels(facets)))).dump();
  });
  m.def("product", [](const Facets& facets) {
    return product_to_json(categorical_square(share(Complex::from_labels(facets)))).dump();
  });
  m.def(
      "is_farber",
      [](const Facets& facets, const std::optional<Facets>& omega, std::size_t budget) {
        ComplexPtr k = share(Complex::from_labels(facets));
        ProductComplex p = categorical_square(k);
        Complex sub = omega ? sub_of(*p.product(), *omega) : *p.product();
        SearchOptions s;
        s.budget = budget;
        return check_to_json("farber-check", *k, sub, is_farber(p, sub, s)).dump();
      },
      py::arg("facets"), py::arg("omega") = py::none(), py::arg("budget") = 1'000'000);
  m.def(
      "is_categorical",
      [](const Facets& facets, const std::optional<Facets>& sub, std::size_t budget) {
        ComplexPtr k = share(Complex::from_labels(facets));
        Complex l = sub ? sub_of(*k, *sub) : *k;
        SearchOptions s;
        s.budget = budget;
        return check_to_json("categorical-check", *k, l, is_categorical(k, l, s)).dump();
      },
      py::arg("facets"), py::arg("sub") = py::none(), py::arg("budget") = 1'000'000);
  m.def(
      "plan",
      [](const Facets& facets, const std::string& x, const std::string& y, std::size_t budget) {
        ComplexPtr k = share(Complex::from_labels(facets));
        ProductComplex p = categorical_square(k);
        InvariantResult r = tc(k, options(budget, 1));
        const VertexId vx = k->id_of(x), vy = k->id_of(y);
        const AdmissibleSet* set = covering_set(p, r.cover, vx, vy);
        if (!set) throw InvalidInput("no certified Farber set contains (" + x + ", " + y + ")");
        return plan_to_json(p, *set, motion_plan(p, *set, vx, vy)).dump();
      },
      py::arg("facets"), py::arg("source"), py::arg("target"), py::arg("budget") = 1'000'000);
  m.def(
      "verify",
      [](const std::string& cert, bool recompute) {
        VerifyOptions o;
        o.recompute = recompute;
        VerifyReport r = verify_certificate(Json::parse(cert), o);
        return py::make_tuple(r.accepted, r.message);
      },
      py::arg("certificate"), py::arg("recompute") = false);
}
