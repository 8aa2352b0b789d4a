#include "gbsect/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbsect/conoid.hpp"
#include "gbsect/division.hpp"
#include "gbsect/errors.hpp"
#include "gbsect/parser.hpp"
#include "gbsect/planarity.hpp"
#include "gbsect/render.hpp"
#include "gbsect/system_file.hpp"

namespace gbsect {

namespace {

using Json = nlohmann::ordered_json;

struct SystemOptions {
  std::vector<std::string> inputs;
  std::string vars;
  std::string params;
  std::string order = "lex";
  bool monic = false;
  bool cleared = false;
  bool json = false;
};

void add_system_options(CLI::App* cmd, SystemOptions& o) {
  cmd->add_option("inputs", o.inputs, "system file, or expressions when --vars is given")->required();
  cmd->add_option("--vars", o.vars, "comma separated variables, highest first");
  cmd->add_option("--params", o.params, "comma separated parameters");
  cmd->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"lex"}));
  auto* monic = cmd->add_flag("--monic", o.monic, "monic output");
  auto* cleared = cmd->add_flag("--cleared", o.cleared, "denominators cleared");
  monic->excludes(cleared);
  cmd->add_flag("--json", o.json, "machine-readable output");
}

IdealSpec load_ideal(const SystemOptions& o) {
  if (o.vars.empty()) {
    if (o.inputs.size() != 1) throw UsageError("expected one system file (or --vars with expressions)");
    if (!o.params.empty()) throw UsageError("--params requires --vars");
    SystemFile sys = load_system_file(o.inputs.front());
    if (o.order != sys.order) throw UsageError("--order conflicts with the system file");
    return sys.ideal();
  }
  const ContextPtr ctx = make_context(split_names(o.vars), split_names(o.params));
  std::vector<Polynomial> gens;
  for (const auto& text : o.inputs) gens.push_back(parse_expression(text, ctx));
  return IdealSpec(ctx, std::move(gens), parse_order(o.order));
}

RenderMode chosen_mode(const SystemOptions& o, RenderMode fallback) {
  if (o.monic) return RenderMode::monic;
  if (o.cleared) return RenderMode::cleared;
  return fallback;
}

Json header(const ContextPtr& ctx, MonomialOrder order) {
  Json j;
  j["order"] = order.name();
  j["vars"] = ctx->variables();
  j["params"] = ctx->parameters();
  return j;
}

Json basis_json(const GroebnerBasis& basis) {
  Json arr = Json::array();
  for (const auto& g : basis.elements())
    arr.push_back({{"monic", render(g, RenderMode::monic)}, {"cleared", render(g, RenderMode::cleared)}});
  return arr;
}

Json polys_json(const std::vector<Polynomial>& ps, RenderMode mode = RenderMode::as_is) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(render(p, mode));
  return arr;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_basis(const SystemOptions& o, std::ostream& out) {
  const IdealSpec ideal = load_ideal(o);
  const GroebnerBasis basis = reduced_groebner_basis(ideal);
  if (o.json) {
    Json j = header(ideal.context(), ideal.order());
    j["basis"] = basis_json(basis);
    print_json(out, j);
    return 0;
  }
  const RenderMode mode = chosen_mode(o, RenderMode::monic);
  if (basis.empty()) out << "0\n";
  for (const auto& g : basis.elements()) out << render(g, mode) << '\n';
  return 0;
}

int cmd_reduce(const SystemOptions& o, const std::string& target_text, std::ostream& out) {
  const IdealSpec ideal = load_ideal(o);
  const GroebnerBasis basis = reduced_groebner_basis(ideal);
  const Polynomial target = parse_expression(target_text, ideal.context());
  const DivisionResult div = multivariate_divide(target, basis.elements(), basis.order());
  const RenderMode mode = chosen_mode(o, RenderMode::as_is);
  if (o.json) {
    Json j = header(ideal.context(), ideal.order());
    j["basis"] = basis_json(basis);
    j["target"] = render(target);
    j["remainder"] = render(div.remainder, mode);
    j["cofactors"] = polys_json(div.quotients);
    print_json(out, j);
    return 0;
  }
  out << "remainder: " << render(div.remainder, mode) << '\n';
  for (std::size_t i = 0; i < basis.size(); ++i)
    out << "cofactor of " << render(basis.elements()[i], RenderMode::monic) << ": " << render(div.quotients[i])
        << '\n';
  return 0;
}

int cmd_planar(const SystemOptions& o, std::ostream& out) {
  const IdealSpec ideal = load_ideal(o);
  const PlanarityResult result = detect_planes(ideal);
  const ContextPtr& ctx = ideal.context();
  if (o.json) {
    Json j = header(ctx, ideal.order());
    j["basis"] = basis_json(result.basis);
    Json planes = Json::array();
    for (const auto& p : result.family.planes) {
      const auto& names = ctx->parameters();
      planes.push_back({{"A", render(p.a, names)}, {"B", render(p.b, names)}, {"C", render(p.c, names)},
                        {"D", render(p.d, names)}});
    }
    j["planes"] = planes;
    j["status"] = result.status == PlanarityStatus::planes ? "planes"
                  : result.status == PlanarityStatus::none ? "none"
                                                           : "empty-variety";
    print_json(out, j);
    return 0;
  }
  switch (result.status) {
    case PlanarityStatus::none: out << "none\n"; break;
    case PlanarityStatus::empty_variety: out << "empty-variety\n"; break;
    case PlanarityStatus::planes: {
      const RenderMode mode = chosen_mode(o, RenderMode::cleared);
      for (const auto& p : result.family.planes) out << render(p.to_polynomial(ctx), mode) << " = 0\n";
      break;
    }
  }
  return 0;
}

// ------------------------------------------------------------- conoid

struct SectionOptions {
  std::string axis;
  std::string value;
  std::string a = "2";
  std::string b = "1";
  std::string d = "1";
  std::string h = "1";
  bool json = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_section(const SectionOptions& o, std::ostream& out) {
  const ConoidParams params = ConoidParams::numeric(Rational::parse(o.a), Rational::parse(o.b),
                                                    Rational::parse(o.d), Rational::parse(o.h));
  const Axis axis = o.axis == "x" ? Axis::x : o.axis == "y" ? Axis::y : Axis::z;
  const SectionReport r = axis_section(params, axis, Rational::parse(o.value));
  if (o.json) {
    Json j;
    j["axis"] = to_string(r.axis);
    j["value"] = r.value.to_string();
    j["kind"] = to_string(r.kind);
    j["section"] = render(r.section);
    if (r.discriminant) j["discriminant"] = r.discriminant->to_string();
    if (r.real_lines_condition) j["real_lines_condition"] = *r.real_lines_condition;
    j["lines"] = polys_json(r.lines);
    if (r.lines_verified) j["lines_verified"] = *r.lines_verified;
    j["factors"] = polys_json(r.factors);
    j["locus"] = r.locus;
    print_json(out, j);
    return 0;
  }
  out << "plane: " << to_string(r.axis) << " = " << r.value.to_string() << '\n';
  out << "kind: " << to_string(r.kind) << '\n';
  out << "section: " << render(r.section) << " = 0\n";
  if (r.discriminant) out << "discriminant: " << r.discriminant->to_string() << '\n';
  if (r.real_lines_condition) out << "real lines condition: " << (*r.real_lines_condition ? "holds" : "fails") << '\n';
  for (const auto& l : r.lines) out << "line: " << render(l) << " = 0\n";
  if (r.lines_verified) out << "lines verified: " << yes_no(*r.lines_verified) << '\n';
  for (const auto& f : r.factors) out << "factor: " << render(f) << '\n';
  out << "locus: " << r.locus << '\n';
  return 0;
}

std::string render_point(const std::array<ParamFraction, 3>& pt, const std::vector<std::string>& names) {
  return "(" + render(pt[0], names) + ", " + render(pt[1], names) + ", " + render(pt[2], names) + ")";
}

int cmd_conic_analysis(bool json, std::ostream& out) {
  const ConicConstraintAnalysis a = solve_conic_constraints();
  const auto& names = constraint_context()->parameters();
  if (json) {
    Json j = header(constraint_context(), MonomialOrder::lex());
    j["constraints"] = polys_json(a.constraints);
    j["basis"] = basis_json(a.basis);
    Json fams = Json::array();
    for (std::size_t i = 0; i < a.families.size(); ++i) {
      const auto pt = a.families[i].normalized();
      fams.push_back({{"id", a.families[i].id},
                      {"A", render(pt[0], names)},
                      {"B", render(pt[1], names)},
                      {"D", render(pt[2], names)},
                      {"satisfies", static_cast<bool>(a.family_satisfies[i])}});
    }
    j["families"] = fams;
    j["b_forced_zero"] = a.b_forced_zero;
    j["solutions_are_families"] = a.solutions_are_families;
    print_json(out, j);
    return 0;
  }
  out << "constraints (C = 1):\n";
  for (const auto& c : a.constraints) out << "  " << render(c) << " = 0\n";
  out << "reduced basis (lex A > B > D):\n";
  for (const auto& g : a.basis.elements()) out << "  " << render(g) << '\n';
  for (std::size_t i = 0; i < a.families.size(); ++i)
    out << "family " << a.families[i].id << " (A, B, D) = " << render_point(a.families[i].normalized(), names)
        << ": satisfies constraints: " << yes_no(a.family_satisfies[i]) << '\n';
  out << "B forced to zero: " << yes_no(a.b_forced_zero) << '\n';
  out << "solutions are exactly the families: " << yes_no(a.solutions_are_families) << '\n';
  return 0;
}

int cmd_verdict(bool json, std::ostream& out) {
  const VerdictReport v = final_verdict();
  if (json) {
    Json j;
    j["family1_basis"] = basis_json(v.family1_basis);
    j["family2_basis"] = basis_json(v.family2_basis);
    j["families_on_directrix"] = v.families_on_directrix;
    j["constraint_basis"] = basis_json(v.constraint_analysis.basis);
    j["solutions_are_families"] = v.constraint_analysis.solutions_are_families;
    j["x3z_coefficient"] = render(v.x3z_coefficient, projection_context()->parameters());
    j["x3z_basis"] = basis_json(v.x3z_basis);
    j["a_forced_zero"] = v.a_forced_zero;
    j["x_section_degree"] = v.x_section_degree;
    j["y_sections_are_line_pairs"] = v.y_sections_are_line_pairs;
    j["no_nondegenerate_conic"] = v.no_nondegenerate_conic;
    j["report"] = v.lines;
    print_json(out, j);
    return 0;
  }
  for (const auto& line : v.lines) out << line << '\n';
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases over Q(parameters) and plane sections of algebraic surfaces", "gbsect"};
  app.require_subcommand(1);

  SystemOptions basis_opts;
  auto* basis = app.add_subcommand("basis", "print the reduced Groebner basis");
  add_system_options(basis, basis_opts);

  SystemOptions reduce_opts;
  std::string target;
  auto* reduce = app.add_subcommand("reduce", "normal form and cofactors of a target");
  add_system_options(reduce, reduce_opts);
  reduce->add_option("--target", target, "expression to reduce")->required();

  SystemOptions planar_opts;
  auto* planar = app.add_subcommand("planar", "linear members of the ideal");
  add_system_options(planar, planar_opts);

  auto* conoid = app.add_subcommand("conoid", "egg-curve conoid case study");
  conoid->require_subcommand(1);
  SectionOptions section_opts;
  auto* section = conoid->add_subcommand("section", "section by an axis-parallel plane");
  section->set_help_flag("--help", "print this help message and exit");
  section->add_option("--axis", section_opts.axis, "x, y or z")->required()->check(CLI::IsMember({"x", "y", "z"}));
  section->add_option("--value", section_opts.value, "plane offset (rational)")->required();
  section->add_option("--a", section_opts.a, "a")->capture_default_str();
  section->add_option("--b", section_opts.b, "b")->capture_default_str();
  section->add_option("--d", section_opts.d, "d")->capture_default_str();
  section->add_option("--h", section_opts.h, "h")->capture_default_str();
  section->add_flag("--json", section_opts.json, "machine-readable output");
  bool conic_json = false;
  auto* conic = conoid->add_subcommand("conic-analysis", "conditions for a conic section");
  conic->add_flag("--json", conic_json, "machine-readable output");
  bool verdict_json = false;
  auto* verdict = conoid->add_subcommand("verdict", "full case analysis");
  verdict->add_flag("--json", verdict_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*basis) return cmd_basis(basis_opts, out);
    if (*reduce) return cmd_reduce(reduce_opts, target, out);
    if (*planar) return cmd_planar(planar_opts, out);
    if (*section) return cmd_section(section_opts, out);
    if (*conic) return cmd_conic_analysis(conic_json, out);
    if (*verdict) return cmd_verdict(verdict_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace gbsect
