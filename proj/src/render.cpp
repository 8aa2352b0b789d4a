#include "gbsect/render.hpp"

#include <sstream>

namespace gbsect {

namespace {

void append_power(std::string& out, const std::string& name, std::uint32_t exponent) {
  if (!out.empty()) out += '*';
  out += name;
  if (exponent > 1) out += '^' + std::to_string(exponent);
}

std::string power_product(const std::vector<std::uint32_t>& exponents, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) append_power(out, names[i], exponents[i]);
  return out;
}

// Renders c*m with c > 0; m may be empty.
std::string positive_product(const Rational& c, const std::string& m) {
  if (m.empty()) return c.to_string();
  if (c.is_one()) return m;
  return c.to_string() + "*" + m;
}

// A single parameter power such as "b" or "b^2" binds tighter than '/'.
bool is_atom(const ParamPoly& p) {
  if (p.is_constant()) return p.constant_value().is_integer();
  if (!p.is_monomial() || !p.leading_coefficient().is_one()) return false;
  std::size_t nonzero = 0;
  for (auto e : p.leading_term().exponents) nonzero += e != 0 ? 1 : 0;
  return nonzero == 1;
}

// Coefficient text for a fraction whose numerator has a positive leading
// coefficient; `standalone` is false when a monomial follows.
std::string coefficient_text(const ParamFraction& c, const std::vector<std::string>& names, bool standalone) {
  const ParamPoly& num = c.numerator();
  const ParamPoly& den = c.denominator();
  std::string n = render(num, names);
  const bool compound = num.size() > 1;
  if (den.is_one()) return (compound && !standalone) ? "(" + n + ")" : n;
  if (compound) n = "(" + n + ")";
  std::string d = render(den, names);
  if (!is_atom(den)) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace

std::string render(const ParamPoly& value, const std::vector<std::string>& parameter_names) {
  if (value.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : value.terms()) {
    const bool negative = t.coefficient.sign() < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += positive_product(t.coefficient.abs(), power_product(t.exponents, parameter_names));
    first = false;
  }
  return out;
}

std::string render(const ParamFraction& value, const std::vector<std::string>& parameter_names) {
  if (value.is_zero()) return "0";
  if (value.leading_sign() < 0) {
    const ParamFraction pos = -value;
    const std::string body = coefficient_text(pos, parameter_names, false);
    return "-" + body;
  }
  return coefficient_text(value, parameter_names, true);
}

std::string render(const Polynomial& p_in, RenderMode mode) {
  const Polynomial p = mode == RenderMode::monic ? p_in.monic()
                       : mode == RenderMode::cleared ? p_in.clear_denominators()
                                                     : p_in;
  if (p.is_zero()) return "0";
  const auto& vars = p.context()->variables();
  const auto& params = p.context()->parameters();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient.leading_sign() < 0;
    const ParamFraction c = negative ? -t.coefficient : t.coefficient;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string m = power_product(t.monomial.exponents(), vars);
    if (m.empty()) {
      // A compound constant after a sign needs parentheses to keep the sign global.
      const bool wrap = c.numerator().size() > 1 && c.denominator().is_one() && negative;
      const std::string text = coefficient_text(c, params, !wrap);
      out += text;
    } else if (c.is_one()) {
      out += m;
    } else {
      out += coefficient_text(c, params, false) + "*" + m;
    }
  }
  return out;
}

}  // namespace gbsect
