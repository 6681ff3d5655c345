#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "birkpois/cli.hpp"
#include "birkpois/errors.hpp"
#include "birkpois/linalg.hpp"
#include "birkpois/local.hpp"
#include "birkpois/momentum.hpp"
#include "birkpois/poisson.hpp"
#include "birkpois/strata.hpp"
#include "birkpois/symspace.hpp"
#include "birkpois/verify.hpp"

namespace py = pybind11;
using namespace bp;

namespace {

py::dict weyl_dict(const SignedPermutation& w) {
  py::dict d;
  d["perm"] = w.perm;
  d["sign"] = w.sign;
  d["identity"] = w.is_identity();
  return d;
}

SymmetricSpace space_of(const std::string& preset) { return SymmetricSpace::parse(preset); }

// accepts a column vector or a matrix of chart coordinates
CMatrix point_rep(const CMatrix& z, const std::string& preset) { return canonical_rep(z, space_of(preset)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Birkhoff strata and Poisson structures on compact symmetric spaces";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::object err = py::reinterpret_borrow<py::object>(domain_error.ptr())(std::string(e.what()));
      err.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(domain_error.ptr(), err.ptr());
    }
  });

  m.def(
      "birkhoff_factor",
      [](const CMatrix& g, double tol) {
        const auto f = birkhoff_factor(g, tol);
        py::dict d;
        d["l"] = f.l;
        d["w"] = weyl_dict(f.w);
        d["w_matrix"] = f.w.matrix();
        d["h"] = f.h;
        d["u_plus"] = f.u_plus;
        d["residual"] = (f.reconstruct() - g).norm();
        return d;
      },
      py::arg("g"), py::arg("tol") = kDefaultTol);

  m.def(
      "iwasawa_factor",
      [](const CMatrix& g, double tol) {
        const auto f = iwasawa_factor(g, tol);
        py::dict d;
        d["l"] = f.l;
        d["a"] = f.a;
        d["u"] = f.u;
        d["residual"] = (f.reconstruct() - g).norm();
        return d;
      },
      py::arg("g"), py::arg("tol") = kDefaultTol);

  m.def("principal_minors", &principal_minors, py::arg("g"));

  m.def("canonical_rep", &point_rep, py::arg("z"), py::arg("preset"));
  m.def(
      "cartan_embed", [](const CMatrix& u, const std::string& preset) { return cartan_embed(u, space_of(preset)); },
      py::arg("u"), py::arg("preset"));
  m.def(
      "chart_of", [](const CMatrix& u, const std::string& preset) { return chart_of(u, space_of(preset)); },
      py::arg("u"), py::arg("preset"));
  m.def(
      "dimensions",
      [](const std::string& preset) {
        const auto s = space_of(preset);
        py::dict d;
        d["name"] = s.name();
        d["dim"] = s.dim();
        d["dim_u"] = s.dim_u();
        d["dim_k"] = s.dim_k();
        d["dim_ip"] = s.dim_ip();
        return d;
      },
      py::arg("preset"));

  m.def(
      "omega_matrix",
      [](const CMatrix& u, const std::string& preset) { return bivector_operator(u, space_of(preset)).omega; },
      py::arg("u"), py::arg("preset"));
  m.def(
      "pi_rank",
      [](const CMatrix& u, const std::string& preset, double tol) { return pi_rank(u, space_of(preset), tol); },
      py::arg("u"), py::arg("preset"), py::arg("tol") = kDefaultTol);
  m.def("grassmann_local_pi", &grassmann_local_pi, py::arg("z"), py::arg("v"), py::arg("w"));
  m.def(
      "grassmann_equivariant_pi",
      [](const CMatrix& z, const CMatrix& v, const CMatrix& w) {
        return grassmann_equivariant_pi(z, v, w, SymmetricSpace::grassmannian(static_cast<int>(z.cols()),
                                                                             static_cast<int>(z.rows())));
      },
      py::arg("z"), py::arg("v"), py::arg("w"));
  m.def(
      "cp1_family",
      [](Complex z) {
        const auto c = cp1_family(z);
        return py::make_tuple(c.pi, c.pi_pl, c.pi_kks);
      },
      py::arg("z"));

  m.def(
      "leaf_factorize",
      [](const CMatrix& u, const std::string& preset, double tol) {
        const auto lf = leaf_factorize(u, space_of(preset), tol);
        py::dict d;
        d["l"] = lf.l;
        d["w"] = weyl_dict(lf.w);
        d["h"] = lf.h;
        d["log_abs_h"] = lf.log_abs_h;
        return d;
      },
      py::arg("u"), py::arg("preset"), py::arg("tol") = kDefaultTol);
  m.def(
      "moment_values",
      [](const CMatrix& u, const std::string& preset, double tol) {
        const auto mv = moment_values(u, space_of(preset), tol);
        py::dict d;
        d["w"] = weyl_dict(mv.w);
        d["basis"] = mv.basis;
        d["values"] = mv.values;
        return d;
      },
      py::arg("u"), py::arg("preset"), py::arg("tol") = kDefaultTol);

  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, double tol, double fd_step) {
        VerifyConfig cfg;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.fd_step = fd_step;
        std::vector<SuiteReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suites(suite, cfg);
        }
        return report_json(reports, cfg);
      },
      py::arg("suite") = "all", py::arg("seed") = 1, py::arg("tol") = 1e-9, py::arg("fd_step") = 1e-5);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
