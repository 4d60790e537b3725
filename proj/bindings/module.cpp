#include <pybind11/pybind11.h>

#include <optional>
#include <string>

#include "pbf/report.hpp"

namespace py = pybind11;

namespace {

std::optional<std::string> opt(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

std::string analyze(const std::string& spec, std::size_t depth, const std::string& arithmetic) {
  return pbf::render_report(pbf::run_analyze(pbf::parse_spec_json(spec), depth, opt(arithmetic)));
}

std::string factorize(const std::string& spec, std::size_t depth, const std::string& alpha2) {
  return pbf::render_report(pbf::run_factorize(pbf::parse_spec_json(spec), opt(alpha2), depth));
}

std::string transform(const std::string& spec, const std::string& kind, const std::string& s,
                      long k) {
  std::optional<std::size_t> kk;
  if (k >= 0) kk = static_cast<std::size_t>(k);
  return pbf::render_report(pbf::run_transform(pbf::parse_spec_json(spec), kind, opt(s), kk));
}

std::string convergents(const std::string& spec, std::size_t k, std::size_t max_n,
                        const std::string& tol, const std::string& format) {
  return pbf::run_convergents(pbf::parse_spec_json(spec), k, max_n, tol, format);
}

}  // namespace

PYBIND11_MODULE(_pbf, m) {
  m.doc() = "oscillation and positive bidiagonal factorization of banded Hessenberg matrices";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pbf::error& e) {
      if (pbf::exit_code_for(e) == 1)
        PyErr_SetString(PyExc_ValueError, e.what());
      else
        PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def("analyze", &analyze, py::arg("spec"), py::arg("depth") = 10,
        py::arg("arithmetic") = "",
        "Oscillation verdicts, LU factor tables and continued fraction convergents "
        "for a JSON matrix spec; returns the JSON report as a string.");
  m.def("factorize", &factorize, py::arg("spec"), py::arg("depth") = 10,
        py::arg("alpha2") = "",
        "Positive bidiagonal factorization report; alpha2 defaults to the midpoint "
        "of the positivity interval.");
  m.def("transform", &transform, py::arg("spec"), py::arg("kind"), py::arg("s") = "",
        py::arg("k") = -1,
        "Applies retract / tail / check / check_shifted and returns the derived "
        "bands as a re-ingestable spec.");
  m.def("convergents", &convergents, py::arg("spec"), py::arg("k") = 1,
        py::arg("max_n") = 20, py::arg("tol") = "1e-9", py::arg("format") = "json",
        "Plot-ready continued fraction convergents as JSON or CSV text.");
}
