#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncgb/commands.hpp"
#include "ncgb/families.hpp"
#include "ncgb/grassmann.hpp"
#include "ncgb/groebner.hpp"
#include "ncgb/parse.hpp"
#include "ncgb/pbw.hpp"
#include "ncgb/rewrite.hpp"

namespace py = pybind11;
using namespace ncgb;

namespace {

std::vector<std::pair<std::string, std::string>> members(const GeneratorSet& G) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& g : G) out.emplace_back(g.label, g.poly.to_string());
  return out;
}

GeneratorSet basis_for(const std::string& which, int n, int bound) {
  if (which == "gamma3") return gamma3_basis(n);
  if (which == "tideal") return tideal_basis(n, bound);
  throw std::invalid_argument("unknown basis " + which);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InconsistentReference>(m, "InconsistentReference", PyExc_RuntimeError);

  m.def(
      "run",
      [](const std::string& command, int n, std::optional<int> bound, std::vector<std::string> drop,
         std::vector<std::string> inputs, std::string basis, std::string direction, int jobs) {
        RunConfig cfg;
        cfg.command = command;
        cfg.n = n;
        cfg.bound = bound;
        cfg.drop = std::move(drop);
        cfg.inputs = std::move(inputs);
        cfg.basis = std::move(basis);
        cfg.direction = std::move(direction);
        cfg.jobs = jobs;
        CommandResult r;
        {
          py::gil_scoped_release release;
          r = run_command(cfg);
        }
        return py::make_tuple(r.exit_code, r.report.dump(), r.text);
      },
      py::arg("command"), py::arg("n") = 3, py::arg("bound") = py::none(), py::arg("drop") = std::vector<std::string>{},
      py::arg("inputs") = std::vector<std::string>{}, py::arg("basis") = "gamma3", py::arg("direction") = "psi",
      py::arg("jobs") = 0);

  m.def(
      "basis", [](const std::string& which, int n, int bound) { return members(basis_for(which, n, bound)); },
      py::arg("which"), py::arg("n"), py::arg("bound") = 8);

  m.def(
      "reduce",
      [](const std::string& text, const std::string& which, int n, int bound) {
        return reduce(parse_polynomial(text), basis_for(which, n, bound)).to_string();
      },
      py::arg("polynomial"), py::arg("basis") = "gamma3", py::arg("n") = 3, py::arg("bound") = 8);

  m.def("psi", [](const std::string& index) { return psi(parse_pbw_index(index)).to_sequence(); });
  m.def("theta", [](const std::string& seq) { return theta(parse_sequence(seq)).to_string(); });
  m.def("canonical_factorization",
        [](const std::string& seq) { return canonical_factorization(parse_sequence(seq)).to_string(); });
  m.def("is_gamma3_normal", [](const std::string& seq) { return gamma3_normal_predicate(parse_sequence(seq)); });

  m.def("evaluate_grassmann", [](const std::string& poly, const std::map<int, std::string>& assignment) {
    GrassmannAssignment a;
    for (const auto& [v, text] : assignment) a.emplace(v, parse_grassmann(text));
    return evaluate(parse_polynomial(poly), a).to_string();
  });
}
