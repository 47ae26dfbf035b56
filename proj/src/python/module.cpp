#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tropsi/divisors.hpp"
#include "tropsi/fan.hpp"
#include "tropsi/psi.hpp"
#include "tropsi/trees.hpp"
#include "tropsi/verify.hpp"
#include "tropsi/weights.hpp"

namespace py = pybind11;
using namespace tropsi;

namespace {

py::int_ to_py_int(const BigInt& v) { return py::int_(py::str(v.str())); }

WeightVector make_weights(int n, int m) { return WeightVector(n, m); }

WeightVector weights_from_list(const std::vector<std::string>& entries) {
  std::vector<Rat> weights;
  for (const std::string& e : entries) {
    const auto slash = e.find('/');
    if (slash == std::string::npos) {
      weights.emplace_back(BigInt(e));
    } else {
      weights.emplace_back(BigInt(e.substr(0, slash)), BigInt(e.substr(slash + 1)));
    }
  }
  return WeightVector::from_weights(weights);
}

std::vector<std::vector<int>> type_splits(const CombinatorialType& t) {
  std::vector<std::vector<int>> out;
  for (const Split& s : t.splits()) out.push_back(marks_of(s.side()));
  return out;
}

py::dict cycle_dict(const Cycle& z) {
  py::dict out;
  out["n"] = z.w.n();
  out["heavy"] = z.w.heavy_count();
  out["light"] = z.w.m();
  out["dim"] = z.dim;
  py::list cones;
  for (const auto& [t, weight] : z.entries) {
    py::dict cone;
    cone["splits"] = type_splits(t);
    cone["weight"] = to_py_int(weight);
    cones.append(std::move(cone));
  }
  out["cones"] = std::move(cones);
  return out;
}

PsiProductQuery make_query(const WeightVector& w, const std::vector<std::int64_t>& k) {
  return PsiProductQuery(w, PsiExponents(k));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "intersection products of weighted tropical psi-classes on heavy/light "
            "tropical Hassett spaces";

  py::class_<WeightVector>(m, "WeightVector")
      .def(py::init(&make_weights), py::arg("n"), py::arg("m"))
      .def_static("from_weights", &weights_from_list, py::arg("weights"),
                  "canonicalise an explicit list of rationals given as strings")
      .def_property_readonly("n", &WeightVector::n)
      .def_property_readonly("m", &WeightVector::m)
      .def("is_heavy", &WeightVector::is_heavy)
      .def("__repr__", &WeightVector::to_string);

  m.def(
      "enumerate_types",
      [](const WeightVector& w, int codim) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const CombinatorialType& t : enumerate_types(w, codim)) {
          out.push_back(type_splits(t));
        }
        return out;
      },
      py::arg("w"), py::arg("codim"),
      "all w-stable combinatorial types of the given codimension, as split lists");

  m.def(
      "psi_class", [](int N, const WeightVector& w) { return cycle_dict(psi_class(N, w)); },
      py::arg("N"), py::arg("w"), "the weighted tropical psi-class as a cycle dict");

  m.def(
      "psi_class_pushforward",
      [](int N, const WeightVector& w) { return cycle_dict(psi_class_pushforward(N, w)); },
      py::arg("N"), py::arg("w"));

  m.def(
      "intersect_product",
      [](const WeightVector& w, const std::vector<std::int64_t>& k) {
        return cycle_dict(intersect_product(make_query(w, k)));
      },
      py::arg("w"), py::arg("exponents"),
      "closed-form intersection product of psi classes");

  m.def(
      "intersect_recursive",
      [](const WeightVector& w, const std::vector<std::int64_t>& k) {
        return cycle_dict(intersect_recursive(make_query(w, k)));
      },
      py::arg("w"), py::arg("exponents"), "recursive Weil-divisor oracle");

  m.def(
      "degree",
      [](const WeightVector& w, const std::vector<std::int64_t>& k) {
        return to_py_int(degree(make_query(w, k)));
      },
      py::arg("w"), py::arg("exponents"), "top-degree intersection number");

  m.def(
      "k_constant", [](int N, const WeightVector& w) { return K_constant(N, w); },
      py::arg("N"), py::arg("w"));

  m.def(
      "tlm",
      [](const std::vector<int>& S, const std::vector<std::int64_t>& k, const WeightVector& w) {
        MarkSet mask = 0;
        for (int mark : S) mask |= mark_bit(mark);
        return to_py_int(tlm(mask, PsiExponents(k), w));
      },
      py::arg("S"), py::arg("exponents"), py::arg("w"), "tropical local multiplicity");

  m.def(
      "verify",
      [](const std::string& suite, int max_n) {
        verify::Report report;
        if (suite == "balance") {
          report = verify::fan_suite(max_n);
        } else if (suite == "divisor") {
          report = verify::divisor_suite(max_n);
        } else if (suite == "oracle") {
          report = verify::psi_suite(max_n);
        } else if (suite == "appendix") {
          report = verify::appendix_suite(max_n);
        } else {
          throw std::invalid_argument("unknown suite: " + suite);
        }
        py::list out;
        for (const verify::CheckResult& check : report) {
          py::dict entry;
          entry["name"] = check.name;
          entry["pass"] = check.pass;
          entry["cases"] = check.cases;
          entry["detail"] = check.detail;
          out.append(std::move(entry));
        }
        return out;
      },
      py::arg("suite"), py::arg("max_n") = 5, "run an invariant suite");
}
