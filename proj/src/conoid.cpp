#include "gbsect/conoid.hpp"

#include <algorithm>
#include <set>

#include "gbsect/division.hpp"
#include "gbsect/errors.hpp"
#include "gbsect/render.hpp"

namespace gbsect {

namespace {

const std::vector<std::string> kShapeParams{"a", "b", "d", "h"};

std::size_t shape_index(char name) {
  switch (name) {
    case 'a': return 0;
    case 'b': return 1;
    case 'd': return 2;
    case 'h': return 3;
    default: throw UsageError(std::string("unknown conoid parameter '") + name + "'");
  }
}

Polynomial var(const ContextPtr& ctx, const char* name) { return Polynomial::variable(ctx, name); }

Polynomial constant(const ContextPtr& ctx, const ParamFraction& v) { return Polynomial::constant(ctx, v); }

Polynomial constant(const ContextPtr& ctx, const Rational& v) { return Polynomial::constant(ctx, v); }

// Element of ctx's coefficient field re-expressed over `target`'s parameters.
ParamFraction recast(const ParamFraction& value, const ContextPtr& from, const ContextPtr& target) {
  const Polynomial lifted = change_context(constant(from, value), target);
  if (!lifted.is_constant()) throw UsageError("value depends on a variable of the target context");
  return lifted.is_zero() ? ParamFraction(target->num_params()) : lifted.leading_coefficient();
}

bool vanishes_at(const Polynomial& p, const std::vector<std::pair<std::string, ParamFraction>>& point) {
  Polynomial r = p;
  for (const auto& [name, value] : point) r = r.substitute(name, constant(p.context(), value));
  return r.is_zero();
}

// Checks section == c · Π factors for some nonzero constant c.
bool is_scalar_multiple_of_product(const Polynomial& section, const std::vector<Polynomial>& factors) {
  Polynomial product = constant(section.context(), Rational(1));
  for (const auto& f : factors) product *= f;
  if (section.is_zero() || product.is_zero()) return false;
  const ParamFraction c = section.leading_coefficient() / product.leading_coefficient();
  return product.scaled(c) == section;
}

}  // namespace

// ------------------------------------------------------------ ConoidParams

ConoidParams ConoidParams::numeric(const Rational& a, const Rational& b, const Rational& d, const Rational& h) {
  if (!(b.sign() > 0 && a > b)) throw ValidationError("conoid parameters need a > b > 0");
  if (!(d.sign() > 0 && a - b >= d)) throw ValidationError("conoid parameters need a - b >= d > 0");
  if (h.sign() <= 0) throw ValidationError("conoid parameters need h > 0");
  ConoidParams p;
  p.values_ = std::array<Rational, 4>{a, b, d, h};
  return p;
}

const std::array<Rational, 4>& ConoidParams::values() const {
  if (!values_) throw UsageError("numeric conoid parameters are required");
  return *values_;
}

ContextPtr ConoidParams::context(const std::vector<std::string>& extra_params) const {
  return context_with_variables({}, extra_params);
}

ContextPtr ConoidParams::context_with_variables(const std::vector<std::string>& extra_variables,
                                                const std::vector<std::string>& extra_params) const {
  std::vector<std::string> vars{"x", "y", "z"};
  vars.insert(vars.end(), extra_variables.begin(), extra_variables.end());
  std::vector<std::string> params;
  if (is_symbolic()) params = kShapeParams;
  params.insert(params.end(), extra_params.begin(), extra_params.end());
  return make_context(std::move(vars), std::move(params));
}

ParamFraction ConoidParams::value(char name, const ContextPtr& ctx) const {
  const std::size_t i = shape_index(name);
  if (values_) return ParamFraction((*values_)[i], ctx->num_params());
  const auto idx = ctx->parameter_index(std::string(1, name));
  if (!idx) throw UsageError(std::string("context lacks parameter '") + name + "'");
  return ParamFraction::parameter(ctx->num_params(), *idx);
}

// ------------------------------------------------------------- surfaces

Polynomial egg_curve(const ConoidParams& params, const ContextPtr& ctx_in) {
  const ContextPtr ctx = ctx_in ? ctx_in : params.context();
  const Polynomial a = constant(ctx, params.value('a', ctx));
  const Polynomial b = constant(ctx, params.value('b', ctx));
  const Polynomial d = constant(ctx, params.value('d', ctx));
  const Polynomial x = var(ctx, "x");
  const Polynomial y = var(ctx, "y");
  return b.pow(2) * x.pow(2) + a.pow(2) * y.pow(2) + constant(ctx, Rational(2)) * d * x * y.pow(2) +
         d.pow(2) * y.pow(2) - a.pow(2) * b.pow(2);
}

Polynomial conoid_surface(const ConoidParams& params, const ContextPtr& ctx_in) {
  const ContextPtr ctx = ctx_in ? ctx_in : params.context();
  const Polynomial a = constant(ctx, params.value('a', ctx));
  const Polynomial b = constant(ctx, params.value('b', ctx));
  const Polynomial d = constant(ctx, params.value('d', ctx));
  const Polynomial h = constant(ctx, params.value('h', ctx));
  const Polynomial x = var(ctx, "x");
  const Polynomial y = var(ctx, "y");
  const Polynomial zh = var(ctx, "z") - h;
  const Polynomial y2 = y.pow(2);
  return (a.pow(2) * y2 + d.pow(2) * y2 - a.pow(2) * b.pow(2)) * zh.pow(2) -
         constant(ctx, Rational(2)) * d * h * x * y2 * zh + b.pow(2) * h.pow(2) * x.pow(2);
}

bool quintic_decomposition_check(const ConoidParams& params, const Polynomial& quartic) {
  const ContextPtr& ctx = quartic.context();
  const Polynomial a = constant(ctx, params.value('a', ctx));
  const Polynomial b = constant(ctx, params.value('b', ctx));
  const Polynomial d = constant(ctx, params.value('d', ctx));
  const Polynomial h = constant(ctx, params.value('h', ctx));
  const Polynomial x = var(ctx, "x");
  const Polynomial y2 = var(ctx, "y").pow(2);
  const Polynomial zh = var(ctx, "z") - h;
  const Polynomial quintic = (a.pow(2) * y2 + d.pow(2) * y2 - a.pow(2) * b.pow(2)) * zh.pow(3) -
                             constant(ctx, Rational(2)) * d * h * x * y2 * zh.pow(2) +
                             b.pow(2) * h.pow(2) * x.pow(2) * zh;
  return zh * quartic == quintic;
}

bool quintic_decomposition_check(const ConoidParams& params) {
  return quintic_decomposition_check(params, conoid_surface(params));
}

// -------------------------------------------------------------- sections

std::string to_string(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

std::string to_string(SectionKind kind) {
  switch (kind) {
    case SectionKind::quartic_curve: return "quartic-curve";
    case SectionKind::cubic_curve: return "cubic-curve";
    case SectionKind::line_pair: return "line-pair";
    case SectionKind::double_line: return "double-line";
    case SectionKind::degenerate_locus: return "degenerate-locus";
    case SectionKind::empty: return "empty";
  }
  return "?";
}

namespace {

bool real_lines_condition(const std::array<Rational, 4>& v, const Rational& beta) {
  const Rational& a = v[0];
  const Rational& b = v[1];
  const Rational& d = v[2];
  const Rational abs_beta = beta.abs();
  return abs_beta <= b || abs_beta >= a * b / d;
}

Rational line_discriminant(const std::array<Rational, 4>& v, const Rational& beta) {
  const Rational& a = v[0];
  const Rational& b = v[1];
  const Rational& d = v[2];
  const Rational beta2 = beta * beta;
  return (b * b - beta2) * (a * a * b * b - d * d * beta2);
}

}  // namespace

SectionReport axis_section(const ConoidParams& params, Axis axis, const Rational& value) {
  const auto& v = params.values();
  const Rational& a = v[0];
  const Rational& b = v[1];
  const Rational& d = v[2];
  const Rational& h = v[3];
  const ContextPtr ctx = params.context();
  const Polynomial surface = conoid_surface(params, ctx);
  const std::size_t index = static_cast<std::size_t>(axis);
  const Polynomial section = surface.substitute(index, constant(ctx, value));
  const Polynomial x = var(ctx, "x");
  const Polynomial y = var(ctx, "y");
  const Polynomial zh = var(ctx, "z") - constant(ctx, h);
  const std::string plane = to_string(axis) + " = " + value.to_string();

  SectionReport report{axis, value, SectionKind::empty, section, {}, {}, {}, {}, {}, {}};
  switch (axis) {
    case Axis::x: {
      if (!value.is_zero()) {
        report.kind = section.total_degree() == 4 ? SectionKind::quartic_curve : SectionKind::degenerate_locus;
        report.locus = "curve of degree " + std::to_string(section.total_degree()) + " in the plane " + plane;
        break;
      }
      report.kind = SectionKind::degenerate_locus;
      report.factors = {constant(ctx, a * a + d * d) * y.pow(2) - constant(ctx, a * a * b * b), zh, zh};
      const Rational y_sq = a * a * b * b / (a * a + d * d);
      Rational root;
      const std::string y_text =
          y_sq.perfect_square_root(root) ? root.to_string() : "sqrt(" + y_sq.to_string() + ")";
      report.locus = "x = 0, z = " + h.to_string() + " (traced for |y| <= " + b.to_string() + " or |y| >= " +
                     (a * b / d).to_string() + "); x = 0, y = +-" + y_text;
      break;
    }
    case Axis::y: {
      const Rational delta = line_discriminant(v, value);
      report.discriminant = delta;
      report.real_lines_condition = real_lines_condition(v, value);
      if (delta.sign() < 0) {
        report.kind = SectionKind::empty;
        report.locus = "no real lines: only the point x = 0, z = " + h.to_string() + " in the plane " + plane;
        break;
      }
      report.kind = delta.is_zero() ? SectionKind::double_line : SectionKind::line_pair;
      report.lines_verified = verify_section_lines(params, value);
      Rational s;
      if (delta.perfect_square_root(s)) {
        const Rational base = d * value * value;
        const Rational scale = (b * b * h).inverse();
        std::vector<Rational> slopes{(base + s) * scale};
        if (!delta.is_zero()) slopes.push_back((base - s) * scale);
        for (const auto& k : slopes) report.lines.push_back(x - constant(ctx, k) * zh);
        report.locus = std::string(delta.is_zero() ? "double line" : "two lines") + " in the plane " + plane;
      } else {
        report.locus = "two lines x = (z - " + h.to_string() + ")*(" + (d * value * value).to_string() +
                       " +- sqrt(" + delta.to_string() + "))/" + (b * b * h).to_string() + " in the plane " + plane;
      }
      break;
    }
    case Axis::z: {
      if (value != h) {
        report.kind = section.total_degree() == 3 ? SectionKind::cubic_curve : SectionKind::degenerate_locus;
        report.locus = "curve of degree " + std::to_string(section.total_degree()) + " in the plane " + plane;
        break;
      }
      report.kind = SectionKind::degenerate_locus;
      report.factors = {x, x};
      report.locus = "x = 0 (double) in the plane " + plane;
      break;
    }
  }
  if (!report.factors.empty() && !is_scalar_multiple_of_product(section, report.factors))
    throw std::logic_error("section factorization does not reproduce the section");
  return report;
}

bool verify_section_lines(const ConoidParams& params, const std::optional<Rational>& beta) {
  if (beta && !params.is_symbolic() && !real_lines_condition(params.values(), *beta))
    throw UsageError("beta violates |beta| <= b or |beta| >= ab/d");
  std::vector<std::string> extra;
  if (!beta) extra.emplace_back("beta");
  const ContextPtr ctx = params.context_with_variables({"s"}, extra);
  const std::size_t np = ctx->num_params();
  const ParamFraction a = params.value('a', ctx);
  const ParamFraction b = params.value('b', ctx);
  const ParamFraction d = params.value('d', ctx);
  const ParamFraction h = params.value('h', ctx);
  const ParamFraction t = beta ? ParamFraction(*beta, np) : ParamFraction::parameter(np, *ctx->parameter_index("beta"));
  const ParamFraction t2 = t * t;
  const ParamFraction delta = (b * b - t2) * (a * a * b * b - d * d * t2);

  const Polynomial s = var(ctx, "s");
  const GroebnerBasis relation(ctx, {s.pow(2) - constant(ctx, delta)}, MonomialOrder::lex(), true);
  const Polynomial on_plane = conoid_surface(params, ctx).substitute("y", constant(ctx, t));
  const Polynomial zh = var(ctx, "z") - constant(ctx, h);
  const ParamFraction scale = (b * b * h).inverse();
  for (const int sign : {1, -1}) {
    const Polynomial slope = (constant(ctx, d * t2) + s.scaled(ParamFraction(Rational(sign), np))).scaled(scale);
    const Polynomial restricted = on_plane.substitute("x", zh * slope);
    if (!normal_form(restricted, relation).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------- projections

ContextPtr projection_context() {
  static const ContextPtr ctx = make_context({"x", "y", "z"}, {"a", "b", "d", "h", "A", "B", "C", "D"});
  return ctx;
}

Polynomial plane_projection(ProjectionCase which) {
  const ContextPtr ctx = projection_context();
  const Polynomial surface = conoid_surface(ConoidParams::symbolic(), ctx);
  auto p = [&](const char* name) { return Polynomial::parameter(ctx, name); };
  const Polynomial x = var(ctx, "x");
  if (which == ProjectionCase::c_nonzero) {
    const ParamFraction inv_c = p("C").leading_coefficient().inverse();
    const Polynomial z_of_xy = -(p("A") * x + p("B") * var(ctx, "y") + p("D")).scaled(inv_c);
    return surface.substitute("z", z_of_xy);
  }
  const ParamFraction inv_b = p("B").leading_coefficient().inverse();
  const Polynomial y_of_x = -(p("A") * x + p("D")).scaled(inv_b);
  return surface.substitute("y", y_of_x);
}

ContextPtr constraint_context() {
  static const ContextPtr ctx = make_context({"A", "B", "D"}, {"a", "b", "d", "h"});
  return ctx;
}

std::vector<Polynomial> conic_constraints() {
  const ContextPtr proj = projection_context();
  const Polynomial projected =
      plane_projection(ProjectionCase::c_nonzero).substitute_parameter("C", ParamFraction(Rational(1), proj->num_params()));
  const std::vector<std::vector<std::uint32_t>> monomials{{2, 2, 0}, {1, 3, 0}, {0, 4, 0}, {1, 2, 0}, {0, 3, 0}};
  std::vector<Polynomial> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials)
    out.push_back(change_context(constant(proj, projected.coefficient_of(Monomial(m))), constraint_context()));
  return out;
}

// -------------------------------------------------------------- families

Polynomial ConicCandidateFamily::plane() const {
  return var(context, "x").scaled(a) + var(context, "y").scaled(b) + var(context, "z").scaled(c) + constant(context, d);
}

std::array<ParamFraction, 3> ConicCandidateFamily::normalized() const {
  const ContextPtr target = constraint_context();
  return {recast(a / c, context, target), recast(b / c, context, target), recast(d / c, context, target)};
}

ConicCandidateFamily candidate_family(int id) {
  if (id != 1 && id != 2) throw UsageError("candidate families are numbered 1 and 2");
  const ConoidParams sym = ConoidParams::symbolic();
  const std::string scale = id == 1 ? "p" : "q";
  const ContextPtr ctx = sym.context({scale});
  const std::size_t np = ctx->num_params();
  const ParamFraction k = ParamFraction::parameter(np, *ctx->parameter_index(scale));
  const ParamFraction zero(np);
  const ParamFraction a = sym.value('a', ctx);
  const ParamFraction d = sym.value('d', ctx);
  const ParamFraction h = sym.value('h', ctx);
  if (id == 1) return {1, scale, ctx, zero, zero, k, -(k * h)};
  const ParamFraction two(Rational(2), np);
  const ParamFraction a2d2 = a * a + d * d;
  return {2, scale, ctx, k, zero, -(a2d2 * k) / (two * d * h), a2d2 * k / (two * d)};
}

ConicConstraintAnalysis solve_conic_constraints() {
  const ContextPtr ctx = constraint_context();
  std::vector<Polynomial> constraints = conic_constraints();
  GroebnerBasis basis = reduced_groebner_basis(IdealSpec(ctx, constraints));
  std::vector<ConicCandidateFamily> families{candidate_family(1), candidate_family(2)};

  std::vector<std::array<ParamFraction, 3>> points;
  std::vector<bool> satisfies;
  for (const auto& fam : families) {
    const auto pt = fam.normalized();
    points.push_back(pt);
    const std::vector<std::pair<std::string, ParamFraction>> assignment{{"A", pt[0]}, {"B", pt[1]}, {"D", pt[2]}};
    satisfies.push_back(std::all_of(constraints.begin(), constraints.end(),
                                    [&](const Polynomial& c) { return vanishes_at(c, assignment); }));
  }

  const Polynomial b_var = var(ctx, "B");
  const bool b_forced = std::any_of(basis.elements().begin(), basis.elements().end(),
                                    [&](const Polynomial& g) { return g == b_var; });

  // The zero set equals the family points when the basis is Π(A − Aᵢ), Π(B − Bᵢ),
  // Π(D − Dᵢ) over the distinct coordinates and the points form their full product.
  bool exact = basis.size() == 3;
  std::size_t product_size = 1;
  for (std::size_t coord = 0; exact && coord < 3; ++coord) {
    std::vector<ParamFraction> distinct;
    for (const auto& pt : points)
      if (std::find(distinct.begin(), distinct.end(), pt[coord]) == distinct.end()) distinct.push_back(pt[coord]);
    product_size *= distinct.size();
    Polynomial expected = constant(ctx, Rational(1));
    for (const auto& value : distinct) expected *= Polynomial::variable(ctx, coord) - constant(ctx, value);
    exact = std::find(basis.elements().begin(), basis.elements().end(), expected) != basis.elements().end();
  }
  std::set<std::string> unique_points;
  for (const auto& pt : points) {
    std::string key;
    for (const auto& c : pt) key += render(c, ctx->parameters()) + ";";
    unique_points.insert(key);
  }
  exact = exact && product_size == unique_points.size();

  return {std::move(constraints), std::move(basis), std::move(families), std::move(satisfies), b_forced, exact};
}

// --------------------------------------------------------------- verdict

namespace {

bool on_directrix(const GroebnerBasis& basis, const ConoidParams& sym) {
  const ContextPtr& ctx = basis.context();
  const Polynomial zh = var(ctx, "z") - constant(ctx, sym.value('h', ctx));
  return normal_form(var(ctx, "x").pow(2), basis).is_zero() && normal_form(zh.pow(2), basis).is_zero();
}

std::string join(const GroebnerBasis& basis, RenderMode mode) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i != 0) out += ", ";
    out += render(basis.elements()[i], mode);
  }
  return out + "}";
}

}  // namespace

VerdictReport final_verdict() {
  const ConoidParams sym = ConoidParams::symbolic();
  std::vector<std::string> lines;

  auto family_basis = [&](int id) {
    const ConicCandidateFamily fam = candidate_family(id);
    return reduced_groebner_basis(IdealSpec(fam.context, {conoid_surface(sym, fam.context), fam.plane()}));
  };
  GroebnerBasis fam1 = family_basis(1);
  GroebnerBasis fam2 = family_basis(2);
  const bool directrix = on_directrix(fam1, sym) && on_directrix(fam2, sym);

  ConicConstraintAnalysis analysis = solve_conic_constraints();
  const bool families_ok = std::all_of(analysis.family_satisfies.begin(), analysis.family_satisfies.end(),
                                       [](bool b) { return b; });

  lines.push_back("case C != 0: quartic and cubic parts of the x-y projection vanish iff (C = 1)");
  for (const auto& c : analysis.constraints) lines.push_back("  " + render(c, RenderMode::as_is) + " = 0");
  lines.push_back("  reduced basis (lex A > B > D): " + join(analysis.basis, RenderMode::as_is));
  lines.push_back(std::string("  solutions are exactly families 1 and 2: ") +
                  (analysis.solutions_are_families && families_ok ? "yes" : "no"));
  lines.push_back("  family 1 (A = 0, B = 0, C = p, D = -h*p): basis " + join(fam1, RenderMode::cleared));
  lines.push_back("  family 2 (A = q, B = 0, C = -(a^2 + d^2)*q/(2*d*h), D = (a^2 + d^2)*q/(2*d)): basis " +
                  join(fam2, RenderMode::cleared));
  lines.push_back(std::string("  both sections lie on the directrix x = 0, z = h: ") + (directrix ? "yes" : "no"));

  lines.push_back("case C = 0, B = 0, A = 0: no plane");

  const ContextPtr alpha_ctx = sym.context({"alpha"});
  const Polynomial x_section =
      conoid_surface(sym, alpha_ctx).substitute("x", Polynomial::parameter(alpha_ctx, "alpha"));
  const std::uint32_t x_degree = x_section.total_degree();
  lines.push_back("case C = 0, B = 0, A != 0: plane x = alpha meets the conoid in a curve of degree " +
                  std::to_string(x_degree) + " (alpha = 0: lines only)");

  const ContextPtr proj = projection_context();
  const Polynomial xz_projection = plane_projection(ProjectionCase::c_zero_b_nonzero);
  ParamFraction x3z = xz_projection.coefficient_of(Monomial(std::vector<std::uint32_t>{3, 0, 1}));
  const ContextPtr a_ctx = make_context({"A"}, {"a", "b", "d", "h", "B", "C", "D"});
  const Polynomial x3z_poly = change_context(constant(proj, x3z), a_ctx);
  GroebnerBasis x3z_basis = reduced_groebner_basis(IdealSpec(a_ctx, {x3z_poly}));
  const bool a_forced = x3z_basis.size() == 1 && x3z_basis.elements().front().size() == 1 &&
                        !x3z_basis.elements().front().is_constant();
  lines.push_back("case C = 0, B != 0: coefficient of x^3*z is " + render(x3z, proj->parameters()) +
                  ", basis " + join(x3z_basis, RenderMode::as_is) + (a_forced ? ": A = 0 forced" : ""));

  const bool y_lines = verify_section_lines(sym, std::nullopt);
  lines.push_back(std::string("  plane y = beta splits into two lines modulo s^2 - (b^2 - beta^2)*(a^2*b^2 - d^2*beta^2): ") +
                  (y_lines ? "yes" : "no"));

  const bool verdict = directrix && families_ok && analysis.solutions_are_families && analysis.b_forced_zero &&
                       a_forced && x_degree == 4 && y_lines;
  lines.push_back(verdict ? "conclusion: no plane section is a non-degenerate conic"
                          : "conclusion: inconclusive");

  return {std::move(fam1), std::move(fam2), directrix, std::move(analysis), std::move(x3z), std::move(x3z_basis),
          a_forced, x_degree, y_lines, verdict, std::move(lines)};
}

}  // namespace gbsect
