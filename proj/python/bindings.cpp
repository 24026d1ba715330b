#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvop/errors.hpp"
#include "mvop/family.hpp"
#include "mvop/orthogonality.hpp"
#include "mvop/recurrence.hpp"
#include "mvop/serialize.hpp"
#include "mvop/spectral.hpp"
#include "mvop/verify.hpp"

namespace py = pybind11;
using Rows = std::vector<std::vector<double>>;

namespace {

Rows rows_of(const mvop::MatrixR& m) {
  Rows out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i).std_vector());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matrix-valued orthogonal polynomials attached to one-step K-types";

  py::register_exception<mvop::ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<mvop::NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<mvop::Params>(m, "Params")
      .def_static("integer", &mvop::Params::integer, py::arg("n"), py::arg("k"), py::arg("ell"), py::arg("m"))
      .def_static("jacobi", &mvop::Params::jacobi, py::arg("alpha"), py::arg("beta"), py::arg("k"), py::arg("ell"))
      .def_property_readonly("n_eff", &mvop::Params::n_eff)
      .def_property_readonly("m_eff", &mvop::Params::m_eff)
      .def_property_readonly("k", [](const mvop::Params& p) { return p.k; })
      .def_property_readonly("ell", [](const mvop::Params& p) { return p.ell; })
      .def_property_readonly("is_integer", &mvop::Params::is_integer)
      .def("validate", [](const mvop::Params& p) { mvop::validate(p); })
      .def("__repr__", &mvop::Params::describe);

  m.def("lambda_eig", &mvop::lambda_eig, py::arg("params"), py::arg("w"), py::arg("r"));
  m.def("mu_eig", &mvop::mu_eig, py::arg("params"), py::arg("w"), py::arg("r"));

  m.def(
      "eigenfunction",
      [](const mvop::Params& p, int w, int r) {
        const auto ef = mvop::f_wr(p, w, r);
        Rows coeffs;
        for (const auto& c : ef.poly.coeffs()) coeffs.push_back(c.std_vector());
        return py::make_tuple(ef.spectral.lambda, ef.spectral.mu, coeffs);
      },
      py::arg("params"), py::arg("w"), py::arg("r"),
      "(lambda, mu, coefficients) of F_{w,r}; coefficients are u-power major.");

  m.def(
      "m_lambda", [](const mvop::Params& p, double lambda) { return rows_of(mvop::build_M(mvop::build_structure(p), lambda).matrix); },
      py::arg("params"), py::arg("lam"));

  m.def(
      "blocks",
      [](const mvop::Params& p, int w) {
        const auto b = mvop::blocks(p, w);
        return py::make_tuple(rows_of(b.A), rows_of(b.B), rows_of(b.C));
      },
      py::arg("params"), py::arg("w"), "(A_w, B_w, C_w) as nested lists.");
  m.def("three_term_residual", &mvop::three_term_residual, py::arg("params"), py::arg("w"));

  m.def(
      "gram",
      [](const mvop::Params& p, int wmax) {
        const auto g = mvop::gram(mvop::make_weight(p), wmax);
        py::dict d;
        d["labels"] = g.labels;
        d["gram"] = rows_of(g.gram);
        d["max_offdiag_ratio"] = g.max_offdiag_ratio;
        d["matrix_level_max_ratio"] = g.matrix_level_max_ratio;
        return d;
      },
      py::arg("params"), py::arg("wmax"));

  m.def(
      "walk",
      [](const mvop::Params& p, std::int64_t steps, std::uint64_t seed, int start_w, int start_r) {
        std::vector<std::pair<int, int>> out;
        for (const auto& s : mvop::walk(p, steps, seed, {start_w, start_r})) out.emplace_back(s.w, s.r);
        return out;
      },
      py::arg("params"), py::arg("steps"), py::arg("seed") = 42, py::arg("start_w") = 0, py::arg("start_r") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "verify",
      [](const mvop::Params& p, int wmax, const std::string& suite) {
        mvop::VerifyOptions o;
        o.wmax = wmax;
        o.suite = mvop::parse_suite(suite);
        return mvop::report_json(mvop::run_verification(p, o));
      },
      py::arg("params"), py::arg("wmax") = 4, py::arg("suite") = "all", "RunReport as a JSON string.",
      py::call_guard<py::gil_scoped_release>());
}
