#include "gbsect/param_poly.hpp"

#include <algorithm>
#include <compare>
#include <utility>

#include "gbsect/errors.hpp"

namespace gbsect {

int compare_exponents(const ParamPoly::Exponents& lhs, const ParamPoly::Exponents& rhs) {
  const auto c = std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

bool is_zero_exponents(const ParamPoly::Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::uint32_t v) { return v == 0; });
}

// Merge of two descending term lists with sign applied to the second.
std::vector<ParamPoly::Term> merge_terms(const std::vector<ParamPoly::Term>& a,
                                         const std::vector<ParamPoly::Term>& b, bool subtract) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare_exponents(a[i].exponents, b[j].exponents);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? ParamPoly::Term{b[j].exponents, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Rational sum = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!sum.is_zero()) out.push_back({a[i].exponents, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back(subtract ? ParamPoly::Term{b[j].exponents, -b[j].coefficient} : b[j]);
  return out;
}

}  // namespace

ParamPoly ParamPoly::constant(std::size_t num_params, const Rational& value) {
  ParamPoly p(num_params);
  if (!value.is_zero()) p.terms_.push_back({Exponents(num_params, 0), value});
  return p;
}

ParamPoly ParamPoly::generator(std::size_t num_params, std::size_t index) {
  if (index >= num_params) throw UsageError("parameter index out of range");
  ParamPoly p(num_params);
  Exponents e(num_params, 0);
  e[index] = 1;
  p.terms_.push_back({std::move(e), Rational(1)});
  return p;
}

ParamPoly ParamPoly::from_terms(std::size_t num_params, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exponents.size() != num_params) throw UsageError("exponent vector length does not match parameter count");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_exponents(a.exponents, b.exponents) > 0; });
  ParamPoly p(num_params);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_exponents(terms_.front().exponents));
}

bool ParamPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.front().coefficient.is_one(); }

Rational ParamPoly::constant_term() const {
  if (!terms_.empty() && is_zero_exponents(terms_.back().exponents)) return terms_.back().coefficient;
  return Rational(0);
}

Rational ParamPoly::constant_value() const {
  if (!is_constant()) throw UsageError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

const ParamPoly::Term& ParamPoly::leading_term() const {
  if (terms_.empty()) throw UsageError("zero parameter polynomial has no leading term");
  return terms_.front();
}

std::uint32_t ParamPoly::degree_in(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[index]);
  return d;
}

std::uint32_t ParamPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    std::uint32_t s = 0;
    for (auto e : t.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

void ParamPoly::check_compatible(const ParamPoly& other) const {
  if (num_params_ != other.num_params_) throw UsageError("parameter polynomials from different contexts");
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
  lhs.check_compatible(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return ParamPoly(lhs.num_params_);
  if (lhs.size() == 1) return rhs.times_term(lhs.terms_[0].exponents, lhs.terms_[0].coefficient);
  if (rhs.size() == 1) return lhs.times_term(rhs.terms_[0].exponents, rhs.terms_[0].coefficient);
  std::vector<ParamPoly::Term> products;
  products.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      ParamPoly::Exponents e(a.exponents.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exponents[k] + b.exponents[k];
      products.push_back({std::move(e), a.coefficient * b.coefficient});
    }
  }
  return ParamPoly::from_terms(lhs.num_params_, std::move(products));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

ParamPoly ParamPoly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return ParamPoly(num_params_);
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coefficient *= factor;
  return r;
}

ParamPoly ParamPoly::times_term(const Exponents& exponents, const Rational& coefficient) const {
  if (exponents.size() != num_params_) throw UsageError("exponent vector length does not match parameter count");
  if (coefficient.is_zero()) return ParamPoly(num_params_);
  // Multiplying by a monomial preserves lex order.
  ParamPoly r(num_params_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e = t.exponents;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += exponents[k];
    r.terms_.push_back({std::move(e), t.coefficient * coefficient});
  }
  return r;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
  ParamPoly result = constant(num_params_, Rational(1));
  ParamPoly base = *this;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rational ParamPoly::evaluate(std::span<const Rational> values) const {
  if (values.size() != num_params_) throw UsageError("wrong number of parameter values");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational term = t.coefficient;
    for (std::size_t k = 0; k < num_params_; ++k)
      if (t.exponents[k] != 0) term *= gbsect::pow(values[k], t.exponents[k]);
    sum += term;
  }
  return sum;
}

ParamPoly exact_divide(const ParamPoly& dividend, const ParamPoly& divisor) {
  if (divisor.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (dividend.num_params() != divisor.num_params()) throw UsageError("parameter polynomials from different contexts");
  if (divisor.is_constant()) return dividend.scaled(divisor.constant_value().inverse());
  const std::size_t n = divisor.num_params();
  const auto& lead = divisor.leading_term();
  const Rational lead_inv = lead.coefficient.inverse();
  std::vector<ParamPoly::Term> quotient;
  ParamPoly rest = dividend;
  while (!rest.is_zero()) {
    const auto& top = rest.leading_term();
    ParamPoly::Exponents e(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (top.exponents[k] < lead.exponents[k]) throw ArithmeticError("inexact parameter polynomial division");
      e[k] = top.exponents[k] - lead.exponents[k];
    }
    Rational c = top.coefficient * lead_inv;
    rest -= divisor.times_term(e, c);
    quotient.push_back({std::move(e), std::move(c)});
  }
  return ParamPoly::from_terms(n, std::move(quotient));
}

mpz_class denominator_lcm(const ParamPoly& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) {
    const mpz_class den = t.coefficient.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

mpz_class integer_content(const ParamPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    const mpz_class num = t.coefficient.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  return g;
}

Rational rational_content(const ParamPoly& p) {
  if (p.is_zero()) return Rational(0);
  // content = gcd(numerators) / lcm(denominators), signed by the leading coefficient
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : p.terms()) {
    const mpz_class num = t.coefficient.numerator();
    const mpz_class den = t.coefficient.denominator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rational c(g, l);
  return p.leading_coefficient().sign() < 0 ? -c : c;
}

ParamPoly primitive_part(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(rational_content(p).inverse());
}

namespace {

using Exponents = ParamPoly::Exponents;

Exponents min_exponents(const ParamPoly& p) {
  Exponents m = p.terms().front().exponents;
  for (const auto& t : p.terms())
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], t.exponents[k]);
  return m;
}

ParamPoly monomial(std::size_t n, Exponents e) {
  return ParamPoly::from_terms(n, {{std::move(e), Rational(1)}});
}

ParamPoly shift_down(const ParamPoly& p, const Exponents& by) {
  std::vector<ParamPoly::Term> terms = p.terms();
  for (auto& t : terms)
    for (std::size_t k = 0; k < by.size(); ++k) t.exponents[k] -= by[k];
  return ParamPoly::from_terms(p.num_params(), std::move(terms));
}

// Coefficients of p viewed as a univariate polynomial in parameter `var`.
std::vector<ParamPoly> coefficients_in(const ParamPoly& p, std::size_t var) {
  std::vector<std::vector<ParamPoly::Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    ParamPoly::Term stripped = t;
    stripped.exponents[var] = 0;
    buckets[t.exponents[var]].push_back(std::move(stripped));
  }
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(ParamPoly::from_terms(p.num_params(), std::move(b)));
  return out;
}

ParamPoly leading_coefficient_in(const ParamPoly& p, std::size_t var) {
  const std::uint32_t deg = p.degree_in(var);
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exponents[var] == deg) {
      ParamPoly::Term stripped = t;
      stripped.exponents[var] = 0;
      terms.push_back(std::move(stripped));
    }
  }
  return ParamPoly::from_terms(p.num_params(), std::move(terms));
}

ParamPoly gcd_core(const ParamPoly& p, const ParamPoly& q);

ParamPoly content_in(const ParamPoly& p, std::size_t var) {
  ParamPoly g(p.num_params());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_core(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const ParamPoly lcb = leading_coefficient_in(b, var);
  ParamPoly r = a;
  while (!r.is_zero()) {
    const std::uint32_t dr = r.degree_in(var);
    if (dr < db) break;
    const ParamPoly lcr = leading_coefficient_in(r, var);
    Exponents shift(a.num_params(), 0);
    shift[var] = dr - db;
    ParamPoly next = lcb * r;
    ParamPoly sub = lcr * b;
    next -= sub.times_term(shift, Rational(1));
    r = primitive_part(next);
  }
  return r;
}

ParamPoly gcd_core(const ParamPoly& p_in, const ParamPoly& q_in) {
  if (p_in.is_zero()) return q_in;
  if (q_in.is_zero()) return p_in;
  const std::size_t n = p_in.num_params();
  if (p_in.is_constant() || q_in.is_constant()) return ParamPoly::constant(n, Rational(1));

  const Exponents mp = min_exponents(p_in);
  const Exponents mq = min_exponents(q_in);
  Exponents common(n);
  for (std::size_t k = 0; k < n; ++k) common[k] = std::min(mp[k], mq[k]);
  if (p_in.is_monomial() || q_in.is_monomial()) return monomial(n, common);

  ParamPoly p = shift_down(p_in, mp);
  ParamPoly q = shift_down(q_in, mq);

  // A parameter present in only one argument cannot occur in the gcd.
  bool stripped = false;
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_p = p.involves(v);
    const bool in_q = q.involves(v);
    if (in_p && !in_q) {
      p = content_in(p, v);
      stripped = true;
    } else if (in_q && !in_p) {
      q = content_in(q, v);
      stripped = true;
    }
  }
  if (stripped) return primitive_part(gcd_core(p, q) * monomial(n, common));

  std::size_t var = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (p.involves(v)) {
      var = v;
      break;
    }
  }

  const ParamPoly cp = content_in(p, var);
  const ParamPoly cq = content_in(q, var);
  ParamPoly a = exact_divide(p, cp);
  ParamPoly b = exact_divide(q, cq);
  const ParamPoly c = gcd_core(cp, cq);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

  ParamPoly g(n);
  while (true) {
    ParamPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = ParamPoly::constant(n, Rational(1));
      break;
    }
    a = std::move(b);
    b = exact_divide(r, content_in(r, var));
  }
  if (!g.is_constant()) g = exact_divide(g, content_in(g, var));
  return primitive_part(c * g * monomial(n, common));
}

}  // namespace

ParamPoly param_poly_gcd(const ParamPoly& p, const ParamPoly& q) {
  if (p.num_params() != q.num_params()) throw UsageError("parameter polynomials from different contexts");
  if (p.is_zero() && q.is_zero()) return ParamPoly(p.num_params());
  return primitive_part(gcd_core(p, q));
}

}  // namespace gbsect
