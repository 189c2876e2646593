// Python bindings for the susyfactory core: expression tools, generator
// factorization, spectra, and relation classification.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "susyfactory/analytic.hpp"
#include "susyfactory/pipeline.hpp"
#include "susyfactory/presets.hpp"

namespace py = pybind11;
using namespace susy;

namespace {

RunConfig config_from_kwargs(const py::kwargs& kw) {
  RunConfig cfg;
  for (auto item : kw) {
    std::string key = py::str(item.first);
    if (key == "params") {
      cfg.params = item.second.cast<ParamEnv>();
    } else {
      apply_key_value(cfg, key, py::str(item.second));
    }
  }
  return cfg;
}

py::dict spectrum_to_dict(const Spectrum& s) {
  py::dict d;
  d["values"] = s.values;
  d["scheme"] = s.scheme;
  d["converged_count"] = s.converged_count;
  d["stability_digits"] = s.stability_digits;
  d["not_converged"] = s.not_converged;
  return d;
}

py::dict report_to_dict(const PairingReport& r) {
  py::dict d;
  d["relation"] = r.relation();
  d["susy_shift"] = r.susy_shift;
  d["iso_spectral"] = r.iso_spectral;
  d["twins"] = r.twins;
  d["quadruplet"] = r.quadruplet;
  d["ground_zero"] = r.ground_zero;
  d["ground_energy"] = r.ground_energy;
  d["tolerance"] = r.tolerance;
  d["depth"] = r.depth;
  return d;
}

}  // namespace

PYBIND11_MODULE(_susyfactory, m) {
  m.doc() = "supersymmetric partner Hamiltonian factory";

  // expression layer
  m.def("parse_print", [](const std::string& s) { return print(parse(s)); },
        "parse an expression and print its canonical-grammar rendering");
  m.def(
      "evaluate",
      [](const std::string& s, Complex x, const ParamEnv& env) { return eval(parse(s), x, env); },
      py::arg("expr"), py::arg("x"), py::arg("params") = ParamEnv{});
  m.def(
      "differentiate",
      [](const std::string& s) { return print(differentiate(parse(s))); },
      "symbolic d/dx, rendered back to a string");
  m.def(
      "conj_reflect",
      [](const std::string& s) { return print(conj_reflect(parse(s))); },
      "the PT map W(x) -> W*(-x), rendered back to a string");
  m.def(
      "is_pt_invariant",
      [](const std::string& s, const ParamEnv& env) { return is_pt_invariant(parse(s), env); },
      py::arg("expr"), py::arg("params") = ParamEnv{});

  // factorization
  m.def(
      "factor",
      [](const py::kwargs& kw) {
        FactorResult f = factor(config_from_kwargs(kw));
        py::dict d;
        d["h_plus"] = f.pair.h_plus.to_string();
        d["h_minus"] = f.pair.h_minus.to_string();
        d["sym_plus"] = to_string(f.pair.sym_plus.primary());
        d["sym_minus"] = to_string(f.pair.sym_minus.primary());
        d["trivial"] = f.pair.trivial;
        return d;
      },
      "build H+ = AB and H- = BA; keyword arguments mirror the CLI flags");

  // spectra
  m.def(
      "spectrum",
      [](const py::kwargs& kw) {
        PairSpectra s = run_spectrum(config_from_kwargs(kw));
        py::dict d;
        d["plus"] = spectrum_to_dict(s.plus);
        d["minus"] = spectrum_to_dict(s.minus);
        return d;
      },
      "paired spectra for a configured run");

  m.def(
      "verify",
      [](const py::kwargs& kw) {
        VerifyResult v = run_verify(config_from_kwargs(kw));
        py::dict d = report_to_dict(v.report);
        d["matches_expected"] = v.matches_expected;
        d["plus"] = spectrum_to_dict(v.spectra.plus);
        d["minus"] = spectrum_to_dict(v.spectra.minus);
        return d;
      },
      "paired spectra + relation classification");

  // analytic closed forms
  py::enum_<ShapeInvariantCase>(m, "ShapeInvariantCase")
      .value("IID_minus", ShapeInvariantCase::IID_minus)
      .value("IID_plus", ShapeInvariantCase::IID_plus)
      .value("IIE_minus", ShapeInvariantCase::IIE_minus)
      .value("IIE_plus", ShapeInvariantCase::IIE_plus);
  m.def("shape_invariant_energy", &shape_invariant_energy, py::arg("case"), py::arg("lam"),
        py::arg("n"));
  m.def("ground_state_eval", &ground_state_eval, py::arg("case"), py::arg("lam"), py::arg("x"));
  m.def(
      "su11_energy",
      [](double h11, double h22, double h12, double h1, double h2, double c0, int n) {
        return su11_energy({h11, h22, h12, h1, h2, c0}, n);
      },
      py::arg("h11"), py::arg("h22"), py::arg("h12"), py::arg("h1"), py::arg("h2"),
      py::arg("c0"), py::arg("n"));

  // table reproduction presets
  m.def("table_names", &table_names);
  m.def(
      "run_table",
      [](const std::string& name) {
        TableReport rep = run_table(name);
        py::dict d;
        d["name"] = rep.name;
        d["lines"] = rep.lines;
        d["values_ok"] = rep.values_ok;
        d["relation_ok"] = rep.relation_ok;
        d["published_discrepancy"] = rep.published_discrepancy;
        d["max_value_dev"] = rep.max_value_dev;
        d["csv"] = rep.csv;
        return d;
      },
      py::arg("name"));
}
