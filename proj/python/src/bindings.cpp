#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gbsect/cli.hpp"
#include "gbsect/division.hpp"
#include "gbsect/errors.hpp"
#include "gbsect/parser.hpp"
#include "gbsect/planarity.hpp"
#include "gbsect/render.hpp"

namespace py = pybind11;
using namespace gbsect;

namespace {

using Names = std::vector<std::string>;

RenderMode mode_of(const std::string& name) {
  if (name == "monic") return RenderMode::monic;
  if (name == "cleared") return RenderMode::cleared;
  if (name == "as_is") return RenderMode::as_is;
  throw UsageError("unknown render mode '" + name + "'");
}

IdealSpec ideal_of(const Names& polys, const Names& vars, const Names& params) {
  const ContextPtr ctx = make_context(vars, params);
  std::vector<Polynomial> gens;
  for (const auto& text : polys) gens.push_back(parse_expression(text, ctx));
  return IdealSpec(ctx, std::move(gens));
}

Names reduced_basis(const Names& polys, const Names& vars, const Names& params, const std::string& mode) {
  const RenderMode m = mode_of(mode);
  const GroebnerBasis basis = reduced_groebner_basis(ideal_of(polys, vars, params));
  Names out;
  for (const auto& g : basis.elements()) out.push_back(render(g, m));
  return out;
}

std::string reduce(const std::string& target, const Names& polys, const Names& vars, const Names& params) {
  const IdealSpec ideal = ideal_of(polys, vars, params);
  const GroebnerBasis basis = reduced_groebner_basis(ideal);
  return render(normal_form(parse_expression(target, ideal.context()), basis));
}

py::dict planes(const Names& polys, const Names& vars, const Names& params) {
  const IdealSpec ideal = ideal_of(polys, vars, params);
  const PlanarityResult r = detect_planes(ideal);
  py::dict out;
  switch (r.status) {
    case PlanarityStatus::planes: out["status"] = "planes"; break;
    case PlanarityStatus::none: out["status"] = "none"; break;
    case PlanarityStatus::empty_variety: out["status"] = "empty-variety"; break;
  }
  Names rendered;
  for (const auto& p : r.family.planes) rendered.push_back(render(p.to_polynomial(ideal.context()), RenderMode::cleared));
  out["planes"] = rendered;
  return out;
}

py::tuple run(const Names& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Groebner bases over Q(parameters) and plane detection";
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
  const Names none;
  m.def("reduced_basis", &reduced_basis, py::arg("polys"), py::arg("vars"), py::arg("params") = none,
        py::arg("mode") = "monic", "Reduced lex Groebner basis as expression strings.");
  m.def("normal_form", &reduce, py::arg("target"), py::arg("polys"), py::arg("vars"), py::arg("params") = none,
        "Normal form of target modulo the reduced basis of polys.");
  m.def("planes", &planes, py::arg("polys"), py::arg("vars"), py::arg("params") = none,
        "Planes containing the variety of polys (three variables).");
  m.def("run", &run, py::arg("args"), "Runs a CLI command; returns (exit code, stdout, stderr).");
}
