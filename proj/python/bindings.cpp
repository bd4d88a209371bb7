#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bicanon/canonical.hpp"
#include "bicanon/enumerate.hpp"
#include "bicanon/errors.hpp"
#include "bicanon/graph.hpp"
#include "bicanon/oracle.hpp"
#include "bicanon/text_format.hpp"

namespace py = pybind11;
using namespace bicanon;

namespace {

BipartiteGraph make_graph(int n, int m, const std::vector<std::pair<int, int>>& edges) {
  std::set<BipartiteGraph::Edge> set;
  for (const auto& e : edges) {
    if (!set.insert(e).second) {
      throw DomainError("duplicate edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")");
    }
  }
  return BipartiteGraph(n, m, std::move(set));
}

py::dict count_dict(const CountTable& t) {
  py::dict d;
  d["n"] = t.n;
  d["m"] = t.m;
  d["by_ones"] = t.by_ones;
  d["total"] = t.total;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Canonical binary matrices under row and column permutations";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<BinaryMatrix>(m, "BinaryMatrix")
      .def(py::init<int, int>(), py::arg("n"), py::arg("m"))
      .def_static("from_grid", &BinaryMatrix::from_grid, py::arg("grid"))
      .def_static("from_rows", py::overload_cast<int, std::vector<Code>>(&BinaryMatrix::from_rows),
                  py::arg("m"), py::arg("rows"))
      .def_static("parse", &parse_matrix, py::arg("text"))
      .def_property_readonly("n", &BinaryMatrix::rows)
      .def_property_readonly("m", &BinaryMatrix::cols)
      .def("__getitem__", [](const BinaryMatrix& a, std::pair<int, int> ij) {
        auto [i, j] = ij;
        if (i < 0 || i >= a.rows() || j < 0 || j >= a.cols()) throw py::index_error();
        return a.at(i, j) ? 1 : 0;
      })
      .def("row_code", [](const BinaryMatrix& a) { return row_code(a).values; })
      .def("col_code", [](const BinaryMatrix& a) { return col_code(a).values; })
      .def("to_grid", &BinaryMatrix::to_grid)
      .def("transpose", &BinaryMatrix::transpose)
      .def("ones", &BinaryMatrix::ones)
      .def("__eq__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a == b; })
      .def("__hash__", [](const BinaryMatrix& a) {
        py::tuple key = py::make_tuple(a.rows(), a.cols(), py::tuple(py::cast(row_code(a).values)));
        return py::hash(key);
      })
      .def("__str__", &format_matrix)
      .def("__repr__", [](const BinaryMatrix& a) {
        std::string s = "BinaryMatrix.from_rows(" + std::to_string(a.cols()) + ", [";
        for (int i = 0; i < a.rows(); ++i) s += (i ? ", " : "") + std::to_string(a.row(i));
        return s + "])";
      });

  m.def("is_semi_canonical", &is_semi_canonical, py::arg("a"));
  m.def(
      "is_canonical", [](const BinaryMatrix& a) { return is_canonical(a).is_canonical; }, py::arg("a"));
  m.def(
      "canonicity_report",
      [](const BinaryMatrix& a) {
        const auto r = is_canonical(a);
        py::dict d;
        d["is_canonical"] = r.is_canonical;
        d["failed_condition"] = r.failed_condition ? py::cast(*r.failed_condition) : py::none();
        d["witness"] = r.witness;
        d["depth"] = r.depth;
        return d;
      },
      py::arg("a"));
  m.def(
      "canonicalize", [](const BinaryMatrix& a) { return canonicalize(a); }, py::arg("a"));
  m.def(
      "brute_force_canonical", [](const BinaryMatrix& a) { return oracle::brute_force_canonical(a); },
      py::arg("a"));
  m.def(
      "equivalent", [](const BinaryMatrix& a, const BinaryMatrix& b) { return oracle::equivalent(a, b); },
      py::arg("a"), py::arg("b"));

  m.def(
      "count_semi_canonical", [](int n, int mm, unsigned jobs) { return count_dict(count_semi_canonical(n, mm, jobs)); },
      py::arg("n"), py::arg("m"), py::arg("jobs") = 1);
  m.def(
      "count_canonical", [](int n, int mm, unsigned jobs) { return count_dict(count_canonical(n, mm, jobs)); },
      py::arg("n"), py::arg("m"), py::arg("jobs") = 1);
  m.def(
      "enumerate_canonical", [](int n, int mm) { return enumerate_canonical(n, mm); }, py::arg("n"),
      py::arg("m"));
  m.def(
      "enumerate_semi_canonical", [](int n, int mm) { return enumerate_semi_canonical(n, mm); },
      py::arg("n"), py::arg("m"));

  m.def(
      "isomorphic",
      [](int n, int mm, const std::vector<std::pair<int, int>>& g, const std::vector<std::pair<int, int>>& h) {
        return isomorphic(make_graph(n, mm, g), make_graph(n, mm, h));
      },
      py::arg("n"), py::arg("m"), py::arg("edges_g"), py::arg("edges_h"),
      "Part-preserving isomorphism of two graphs with parts {1..n} and {1..m}.");
  m.def(
      "canonical_key",
      [](int n, int mm, const std::vector<std::pair<int, int>>& edges) {
        return canonical_key(make_graph(n, mm, edges)).values;
      },
      py::arg("n"), py::arg("m"), py::arg("edges"));
}
