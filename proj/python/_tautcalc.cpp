#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "taut/checks.hpp"
#include "taut/combinatorics.hpp"
#include "taut/error.hpp"
#include "taut/formulas.hpp"
#include "taut/render.hpp"

namespace py = pybind11;

namespace {

taut::ModuliSpec make_spec(int g, int n, const std::string& mode, const std::optional<std::vector<std::string>>& labels) {
  if (labels) return taut::ModuliSpec::concrete(g, *labels);
  if (mode == "concrete") return taut::ModuliSpec::concrete(g, n);
  if (mode != "generic") throw taut::DomainError("mode must be 'generic' or 'concrete'");
  return taut::ModuliSpec::generic(g, n);
}

taut::Bundle parse_bundle(const std::string& s) {
  if (s == "tangent") return taut::Bundle::Tangent;
  if (s == "cotangent") return taut::Bundle::Cotangent;
  throw taut::DomainError("bundle must be 'tangent' or 'cotangent'");
}

taut::Basis parse_basis(const std::string& s) {
  if (s == "kappa") return taut::Basis::Kappa;
  if (s == "lambda") return taut::Basis::Lambda;
  throw taut::DomainError("basis must be 'kappa' or 'lambda'");
}

std::vector<std::string> ch(int g, int n, int degree, const std::string& bundle, const std::string& basis,
                            const std::string& mode, const std::optional<std::vector<std::string>>& labels,
                            const std::string& format) {
  if (degree < 1) throw taut::DomainError("degree must be >= 1");
  const auto spec = make_spec(g, n, mode, labels);
  auto e = taut::ch_bundle(spec, degree, parse_bundle(bundle));
  if (parse_basis(basis) == taut::Basis::Lambda) e = taut::to_lambda_basis(e);
  const auto fmt = taut::parse_format(format);
  std::vector<std::string> out;
  for (int d = 1; d <= degree; ++d) out.push_back(taut::render(e.component(d), fmt, d));
  return out;
}

std::vector<std::string> chern(int g, int n, int jmax, const std::string& bundle, const std::string& basis,
                               const std::string& mode, const std::optional<std::vector<std::string>>& labels,
                               const std::string& format) {
  const auto spec = make_spec(g, n, mode, labels);
  const auto fmt = taut::parse_format(format);
  std::vector<std::string> out;
  int j = 0;
  for (const auto& c : taut::chern_classes(spec, jmax, parse_bundle(bundle), parse_basis(basis))) {
    out.push_back(taut::render(c, fmt, ++j));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_tautcalc, m) {
  m.doc() = "Chern characters and Chern classes of moduli spaces of stable curves";

  py::register_exception<taut::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("bernoulli", [](int k) { return taut::bernoulli(k).str(); }, py::arg("k"));
  m.def("a_coeff", [](int m) { return taut::a_coeff(m).str(); }, py::arg("m"));
  m.def(
      "partitions",
      [](int j) {
        std::vector<std::vector<int>> out;
        for (const auto& p : taut::partitions(j)) out.push_back(p.parts());
        return out;
      },
      py::arg("j"));
  m.def("rank", [](int g, int n) { return taut::cotangent_rank(taut::ModuliSpec::generic(g, n)); }, py::arg("g"),
        py::arg("n"));
  m.def("boundary_count", [](int g, int n) { return taut::enumerate_boundary(taut::ModuliSpec::concrete(g, n)).size(); },
        py::arg("g"), py::arg("n"));

  m.def("ch", &ch, "Graded Chern character ch_1..ch_degree, one rendered string per degree", py::arg("g"),
        py::arg("n") = 0, py::arg("degree") = 3, py::arg("bundle") = "cotangent", py::arg("basis") = "kappa",
        py::arg("mode") = "generic", py::arg("labels") = py::none(), py::arg("format") = "text");
  m.def("chern", &chern, "Chern classes c_1..c_jmax, one rendered string per class", py::arg("g"), py::arg("n") = 0,
        py::arg("jmax") = 3, py::arg("bundle") = "tangent", py::arg("basis") = "kappa", py::arg("mode") = "generic",
        py::arg("labels") = py::none(), py::arg("format") = "text");

  m.def(
      "render",
      [](const std::string& json, const std::string& format) {
        const auto doc = nlohmann::ordered_json::parse(json, nullptr, false);
        if (doc.is_discarded()) throw taut::DomainError("invalid JSON");
        return taut::render(taut::from_json(doc), taut::parse_format(format), doc.at("degree").get<int>());
      },
      "Re-render an expression given in the JSON form", py::arg("json"), py::arg("format") = "text");

  m.def(
      "verify",
      [](int order, bool inject_fault) {
        if (order < 4) throw taut::DomainError("order must be >= 4");
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : taut::run_checks({order, inject_fault})) out.emplace_back(r.name, r.passed, r.detail);
        return out;
      },
      "Run the verification battery; returns (name, passed, detail) triples", py::arg("order") = 12,
      py::arg("inject_fault") = false);
}
