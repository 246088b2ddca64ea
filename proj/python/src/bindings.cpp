#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boxdioph/cone.hpp"
#include "boxdioph/frobenius.hpp"
#include "boxdioph/io.hpp"
#include "boxdioph/lattice.hpp"
#include "boxdioph/solver.hpp"

namespace py = pybind11;
using namespace boxdioph;

namespace {

// Python ints cross the boundary as decimal strings so size is unbounded.
Integer to_integer(const py::handle &h) {
  if (!py::isinstance<py::int_>(h))
    throw py::type_error("expected an int");
  return Integer(py::str(h).cast<std::string>());
}

py::int_ to_py(const Integer &v) {
  PyObject *o = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!o)
    throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(o);
}

py::object to_py(const Rational &q) {
  return py::module_::import("fractions")
      .attr("Fraction")(to_py(Integer(q.get_num())), to_py(Integer(q.get_den())));
}

IntVector to_vector(const py::sequence &s) {
  IntVector v;
  v.reserve(s.size());
  for (auto item : s)
    v.push_back(to_integer(item));
  return v;
}

IntMatrix to_matrix(const py::sequence &rows) {
  const std::size_t m = rows.size();
  if (m == 0)
    throw py::value_error("matrix needs at least one row");
  const std::size_t n = py::len(rows[0]);
  IntMatrix M(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = rows[i].cast<py::sequence>();
    if (row.size() != n)
      throw py::value_error("rows have different lengths");
    for (std::size_t j = 0; j < n; ++j)
      M(i, j) = to_integer(row[j]);
  }
  return M;
}

py::list to_py(const IntVector &v) {
  py::list out;
  for (const auto &x : v)
    out.append(to_py(x));
  return out;
}

py::list to_py(const IntMatrix &M) {
  py::list out;
  for (std::size_t i = 0; i < M.rows(); ++i)
    out.append(to_py(M.row(i)));
  return out;
}

py::dict report_dict(const ConditionReport &r) {
  py::dict d;
  d["holds"] = r.holds;
  d["t_squared"] = to_py(r.t_squared);
  py::list facets;
  for (const auto &f : r.per_facet) {
    py::dict fd;
    fd["facet"] = f.facet + 1;
    fd["coordinate"] = to_py(f.coordinate);
    fd["lhs_squared"] = to_py(f.lhs_squared);
    fd["rhs_squared"] = to_py(f.rhs_squared);
    fd["passes"] = f.passes;
    facets.append(fd);
  }
  d["per_facet"] = facets;
  return d;
}

ProblemInstance make_instance(const py::sequence &A, const py::sequence &b,
                              const std::optional<std::vector<std::size_t>> &basis) {
  ProblemInstance inst{to_matrix(A), to_vector(b), std::nullopt};
  if (basis) {
    std::vector<std::size_t> cols;
    for (auto c : *basis) {
      if (c == 0)
        throw py::value_error("basis columns are 1-based");
      cols.push_back(c - 1);
    }
    inst.basis_cols = cols;
  }
  return inst;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact solver for nonnegative integer solutions of A x = b";

  py::register_exception<Error>(m, "BoxdiophError", PyExc_ValueError);

  m.def(
      "solve",
      [](const py::sequence &A, const py::sequence &b,
         std::optional<std::vector<std::size_t>> basis_cols) {
        const auto inst = make_instance(A, b, basis_cols);
        const auto d = solve_detailed(inst);
        py::dict out;
        out["status"] = to_string(d.outcome.status);
        out["x"] = d.outcome.status == SolveStatus::IntegerInfeasible
                       ? py::object(py::none())
                       : py::object(to_py(d.outcome.x));
        py::list cols;
        for (auto c : d.trace.columns.basis)
          cols.append(c + 1);
        out["basis_cols"] = cols;
        out["condition"] = d.outcome.report
                               ? py::object(report_dict(*d.outcome.report))
                               : py::object(py::none());
        return out;
      },
      py::arg("A"), py::arg("b"), py::arg("basis_cols") = py::none());

  m.def(
      "solve_json",
      [](const std::string &instance_text) {
        const auto inst = parse_instance(instance_text);
        return dump(result_to_json(inst, solve_detailed(inst)));
      },
      py::arg("instance_text"));

  m.def(
      "verify",
      [](const py::sequence &A, const py::sequence &b, const py::sequence &x) {
        return boxdioph::verify(to_matrix(A), to_vector(b), to_vector(x));
      },
      py::arg("A"), py::arg("b"), py::arg("x"));

  m.def(
      "hnf",
      [](const py::sequence &M) {
        const auto r = hnf_column(to_matrix(M));
        return py::make_tuple(to_py(r.H), to_py(r.U));
      },
      py::arg("M"));

  m.def(
      "det", [](const py::sequence &M) { return to_py(det_exact(to_matrix(M))); },
      py::arg("M"));

  m.def(
      "gcd_max_minors",
      [](const py::sequence &A) { return to_py(gcd_max_minors(to_matrix(A))); },
      py::arg("A"));

  m.def(
      "special_basis",
      [](const py::sequence &columns) {
        // columns given as a list of basis vectors
        const IntMatrix rows = to_matrix(columns);
        return to_py(special_basis(rows.transpose()).coeffs());
      },
      py::arg("basis_vectors"));

  m.def(
      "deep_cone_condition",
      [](const py::sequence &B, const py::sequence &N, const py::int_ &gcdA,
         const py::sequence &b) {
        return report_dict(deep_cone_condition(to_matrix(B), to_matrix(N),
                                               to_integer(gcdA), to_vector(b)));
      },
      py::arg("B"), py::arg("N"), py::arg("gcdA"), py::arg("b"));

  m.def(
      "shifted_cone_condition_m2",
      [](const py::sequence &B, const py::sequence &N,
         const py::sequence &b) -> py::object {
        const auto r =
            shifted_cone_condition_m2(to_matrix(B), to_matrix(N), to_vector(b));
        if (!r)
          return py::none();
        return report_dict(*r);
      },
      py::arg("B"), py::arg("N"), py::arg("b"));

  m.def(
      "f_chain", [](const py::sequence &a) { return to_py(f_chain(to_vector(a))); },
      py::arg("a"));
  m.def(
      "brauer_G", [](const py::sequence &a) { return to_py(brauer_G(to_vector(a))); },
      py::arg("a"));
  m.def(
      "frobenius_number",
      [](const py::sequence &a) { return to_py(frobenius_number_dp(to_vector(a))); },
      py::arg("a"));
  m.def(
      "box_shape",
      [](const py::sequence &a) { return to_py(box_shape(to_vector(a))); },
      py::arg("a"));

#ifdef VERSION_INFO
#define BOXDIOPH_STR(x) #x
#define BOXDIOPH_XSTR(x) BOXDIOPH_STR(x)
  m.attr("__version__") = BOXDIOPH_XSTR(VERSION_INFO);
#endif
}
