#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverkac/betti.hpp"
#include "quiverkac/errors.hpp"
#include "quiverkac/ffcount.hpp"
#include "quiverkac/hua.hpp"
#include "quiverkac/partitions.hpp"
#include "quiverkac/quiver.hpp"
#include "quiverkac/weyl.hpp"

namespace py = pybind11;
using namespace quiverkac;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list coefficients(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

py::tuple key(const DimVector& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
  return t;
}

DimVector dim(const std::vector<int>& v) { return DimVector(v); }

Quiver make_quiver(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (auto [s, t] : edges) {
    if (s < 1 || t < 1) throw UsageError("vertices are numbered from 1");
    es.push_back({static_cast<std::size_t>(s - 1), static_cast<std::size_t>(t - 1)});
  }
  return Quiver(n, std::move(es));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kac polynomials, Kac-Moody multiplicities and Betti numbers of quiver varieties";

  static py::exception<UsageError> usage_error(m, "UsageError", PyExc_ValueError);
  static py::exception<InvariantError> invariant_error(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const UsageError& err) {
      py::set_error(usage_error, err.what());
    } catch (const InvariantError& err) {
      py::set_error(invariant_error, err.what());
    }
  });

  py::class_<Quiver>(m, "Quiver")
      .def(py::init(&make_quiver), py::arg("vertices"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           "Quiver on vertices 1..n with edges given as (source, target) pairs.")
      .def_property_readonly("vertex_count", &Quiver::vertex_count)
      .def_property_readonly("edges",
                             [](const Quiver& q) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : q.edges()) {
                                 out.emplace_back(static_cast<int>(e.source) + 1, static_cast<int>(e.target) + 1);
                               }
                               return out;
                             })
      .def("reversed", &Quiver::reversed)
      .def("serialize", &serialize_quiver)
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
      .def("__repr__", [](const Quiver& q) {
        return "Quiver(" + std::to_string(q.vertex_count()) + ", " + std::to_string(q.edges().size()) + " edges)";
      });

  m.def("parse_quiver", &parse_quiver, py::arg("text"));
  m.def("load_quiver", &load_quiver, py::arg("path"));

  m.def(
      "pairing",
      [](const std::vector<int>& a, const std::vector<int>& b) { return pairing(Partition(a), Partition(b)); },
      py::arg("lam"), py::arg("mu"));

  m.def(
      "hua_series",
      [](const Quiver& q, const std::vector<int>& bound, int jobs) {
        const Box region(dim(bound));
        const MSeries s = hua_series(q, region, jobs);
        py::dict out;
        for (const auto& v : region.points()) {
          out[key(v)] = py::make_tuple(coefficients(s[v].numerator()), coefficients(s[v].denominator()));
        }
        return out;
      },
      py::arg("quiver"), py::arg("bound"), py::arg("jobs") = 1,
      "Coefficients as (numerator, denominator) coefficient lists, ascending in q.");

  m.def(
      "kac_polynomials",
      [](const Quiver& q, const std::vector<int>& bound, int jobs) {
        py::dict out;
        for (const auto& [alpha, poly] : kac_a_polynomials(q, Box(dim(bound)), jobs)) out[key(alpha)] = coefficients(poly);
        return out;
      },
      py::arg("quiver"), py::arg("bound"), py::arg("jobs") = 1);

  m.def(
      "root_multiplicities",
      [](const Quiver& q, const std::vector<int>& bound) {
        py::dict out;
        for (const auto& [alpha, mult] : root_multiplicities(q, Box(dim(bound)))) {
          if (!alpha.is_zero()) out[key(alpha)] = mult;
        }
        return out;
      },
      py::arg("quiver"), py::arg("bound"));

  m.def(
      "character_multiplicities",
      [](const Quiver& q, const std::vector<int>& w, const std::vector<int>& bound) {
        py::dict out;
        for (const auto& [alpha, mult] : character_multiplicities(q, dim(w), Box(dim(bound)))) out[key(alpha)] = mult;
        return out;
      },
      py::arg("quiver"), py::arg("w"), py::arg("bound"));

  m.def(
      "poincare_polynomials",
      [](const Quiver& q, const std::vector<int>& w, const std::vector<int>& bound, int jobs) {
        py::dict out;
        const PoincareTable table = poincare_series(q, dim(w), Box(dim(bound)), jobs);
        for (const auto& [v, e] : table.entries) out[key(v)] = py::make_tuple(e.half_dimension, coefficients(e.poincare));
        return out;
      },
      py::arg("quiver"), py::arg("w"), py::arg("bound"), py::arg("jobs") = 1,
      "Maps v to (d, coefficients of P_v ascending in q).");

  m.def(
      "betti_numbers",
      [](const Quiver& q, const std::vector<int>& w, const std::vector<int>& bound) {
        py::dict out;
        const PoincareTable table = poincare_series(q, dim(w), Box(dim(bound)));
        for (const auto& [v, e] : table.entries) {
          py::list b;
          for (const auto& x : betti_numbers(table, v)) b.append(to_py(x));
          out[key(v)] = b;
        }
        return out;
      },
      py::arg("quiver"), py::arg("w"), py::arg("bound"));

  m.def(
      "count_bruteforce",
      [](const Quiver& q, const std::vector<int>& v, const std::vector<int>& w, long p, std::uint64_t guard, int jobs) {
        return to_py(count_bruteforce(q, dim(v), dim(w), p, guard, jobs));
      },
      py::arg("quiver"), py::arg("v"), py::arg("w"), py::arg("p"), py::arg("guard") = kDefaultGuard, py::arg("jobs") = 1);

  m.def(
      "count_fourier",
      [](const Quiver& q, const std::vector<int>& v, const std::vector<int>& w, long p, std::uint64_t guard, int jobs) {
        return to_py(count_fourier(q, dim(v), dim(w), p, guard, jobs));
      },
      py::arg("quiver"), py::arg("v"), py::arg("w"), py::arg("p"), py::arg("guard") = kDefaultGuard, py::arg("jobs") = 1);

  m.def(
      "group_order", [](const std::vector<int>& v, long p) { return to_py(group_order(dim(v), p)); }, py::arg("v"),
      py::arg("p"));
}
