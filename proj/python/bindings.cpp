// Python bindings. Big integers cross the boundary as Python ints and
// rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperdet/dims.hpp"
#include "hyperdet/errors.hpp"
#include "hyperdet/evaluate.hpp"
#include "hyperdet/kernel.hpp"
#include "hyperdet/orbit.hpp"
#include "hyperdet/raising.hpp"
#include "hyperdet/verification.hpp"
#include "hyperdet/weights.hpp"

namespace py = pybind11;
using namespace hyperdet;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(v)), to_py(denominator(v)));
}

BigInt big_from_py(const py::handle& h) { return parse_bigint(py::str(h).cast<std::string>()); }

Rational rational_from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(big_from_py(h));
  const py::object fraction = py::module_::import("fractions").attr("Fraction")(h);
  return Rational(big_from_py(fraction.attr("numerator")), big_from_py(fraction.attr("denominator")));
}

Shape shape_from_py(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return Shape::parse(h.cast<std::string>());
  const auto dims = h.cast<std::array<int, 3>>();
  return Shape(dims);
}

Weight weight_from(const Shape& shape, const std::optional<std::vector<int>>& w) {
  return w ? Weight{*w} : Weight::zero(shape);
}

py::tuple exps_to_py(const ExponentVector& m) { return py::cast(m.exps()); }

HyperArray array_from_py(const Shape& shape, const py::sequence& entries) {
  if (entries.size() != shape.size())
    throw ShapeMismatch("array needs " + std::to_string(shape.size()) + " entries for shape " + shape.to_string());
  HyperArray x{shape};
  for (std::size_t i = 0; i < shape.size(); ++i) x.entries[i] = rational_from_py(entries[i]);
  return x;
}

}  // namespace

PYBIND11_MODULE(_hyperdet, m) {
  m.doc() = "Exact invariants of small three-mode arrays";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleDegree>(m, "InfeasibleDegree", PyExc_ValueError);

  py::class_<IntPolynomial>(m, "Polynomial")
      .def_static("from_json", [](const std::string& text) { return parse_json(text); })
      .def_static("from_letter_text", [](const std::string& text) { return parse_letter_text(text); })
      .def_property_readonly("shape", [](const IntPolynomial& p) { return p.shape().dims(); })
      .def("terms",
           [](const IntPolynomial& p) {
             py::list out;
             for (const auto& t : p.terms()) out.append(py::make_tuple(exps_to_py(t.monomial), to_py(t.coeff)));
             return out;
           })
      .def("to_json", [](const IntPolynomial& p) { return to_json(p); })
      .def("to_letter_text", [](const IntPolynomial& p) { return to_letter_text(p); })
      .def("is_zero", &IntPolynomial::is_zero)
      .def("__len__", &IntPolynomial::size)
      .def("__eq__", [](const IntPolynomial& a, const IntPolynomial& b) { return a == b; })
      .def("__add__", [](const IntPolynomial& a, const IntPolynomial& b) { return a + b; })
      .def("__sub__", [](const IntPolynomial& a, const IntPolynomial& b) { return a - b; })
      .def("__rmul__", [](const IntPolynomial& p, const py::int_& c) { return poly_scale(p, big_from_py(c)); })
      .def("__mul__", [](const IntPolynomial& p, const py::int_& c) { return poly_scale(p, big_from_py(c)); })
      .def("__repr__", [](const IntPolynomial& p) {
        return "<Polynomial " + p.shape().to_string() + " with " + std::to_string(p.size()) + " terms>";
      });

  m.def("weight_of", [](const py::handle& shape, const std::vector<int>& exps) {
    return weight_of(ExponentVector(shape_from_py(shape), exps)).components;
  }, py::arg("shape"), py::arg("exps"));

  m.def("feasible_degree", [](const py::handle& shape, int degree, std::optional<std::vector<int>> weight) {
    const Shape s = shape_from_py(shape);
    return feasible_degree(s, weight_from(s, weight), degree);
  }, py::arg("shape"), py::arg("degree"), py::arg("weight") = py::none());

  m.def("enumerate_basis", [](const py::handle& shape, int degree, std::optional<std::vector<int>> weight) {
    const Shape s = shape_from_py(shape);
    py::list out;
    for (const auto& mono : enumerate_basis(s, degree, weight_from(s, weight)).monomials) out.append(exps_to_py(mono));
    return out;
  }, py::arg("shape"), py::arg("degree"), py::arg("weight") = py::none());

  m.def("count_dim", [](const py::handle& shape, int degree, std::optional<std::vector<int>> weight) {
    const Shape s = shape_from_py(shape);
    return to_py(count_dim(s, degree, weight_from(s, weight)));
  }, py::arg("shape"), py::arg("degree"), py::arg("weight") = py::none());

  m.def("exact_kernel", [](const std::vector<std::vector<py::int_>>& rows, std::optional<std::size_t> cols) {
    const std::size_t width = rows.empty() ? cols.value_or(0) : rows.front().size();
    Matrix<BigInt> a(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != width) throw ParseError("ragged matrix");
      for (std::size_t c = 0; c < width; ++c) a(r, c) = big_from_py(rows[r][c]);
    }
    const KernelResult k = exact_kernel(a);
    py::list basis;
    for (const auto& v : k.basis) {
      py::list vec;
      for (const auto& x : v) vec.append(to_py(x));
      basis.append(vec);
    }
    return py::make_tuple(k.rank, k.nullity, basis);
  }, py::arg("rows"), py::arg("cols") = py::none(), "Returns (rank, nullity, primitive kernel basis).");

  m.def("operator_matrix_shape", [](const py::handle& shape, int degree) {
    const OperatorMatrix mat = assemble_matrix(shape_from_py(shape), degree);
    return py::make_tuple(mat.rows(), mat.cols());
  }, py::arg("shape"), py::arg("degree"));

  m.def("find_invariant", [](const py::handle& shape, int degree) {
    return find_invariant(shape_from_py(shape), degree);
  }, py::arg("shape"), py::arg("degree"));

  m.def("annihilated", [](const IntPolynomial& p) {
    for (const auto& op : raising_ops(p.shape()))
      if (!apply_raising(op, p).is_zero()) return false;
    return true;
  }, py::arg("poly"));

  m.def("signed_orbit", [](const std::string& digits) {
    return signed_orbit(ExponentVector::from_digits(Shape{2, 2, 3}, digits));
  }, py::arg("seed"));
  m.def("theorem_decomposition", &theorem_decomposition);

  m.def("evaluate", [](const IntPolynomial& p, const py::sequence& entries) {
    return to_py(evaluate(p, array_from_py(p.shape(), entries)));
  }, py::arg("poly"), py::arg("entries"), "Entries in flattened order: frontal slices, each row-major.");

  m.def("invariance_check", [](const IntPolynomial& p, std::size_t trials, std::uint64_t seed) {
    const InvarianceReport r = invariance_check(p, trials, seed);
    return py::make_tuple(r.passed(), r.trials.size());
  }, py::arg("poly"), py::arg("trials") = 100, py::arg("seed") = 20100101);

  m.def("conjecture_dim", [](const std::string& column, int n) {
    for (DimColumn id : kDimColumns)
      if (column_name(id) == column) return to_py(conjecture_dim(id, n));
    throw py::value_error("unknown column '" + column + "'");
  }, py::arg("column"), py::arg("n"));

  m.def("verify_table", [] {
    const TableReport r = verify_table(Shape{2, 2, 3});
    return py::make_tuple(r.matches(), r.entries.size());
  }, "Returns (matching entries, total entries).");

  m.def("run_battery", [](const std::string& only, std::uint64_t seed) {
    BatteryOptions options;
    options.only = only;
    options.seed = seed;
    py::list out;
    for (const auto& r : run_battery(options)) {
      py::dict d;
      d["group"] = r.group;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("only") = "", py::arg("seed") = 20100101);
}
