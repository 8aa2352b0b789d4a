#include "gbsect/polynomial.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "gbsect/errors.hpp"

namespace gbsect {

VarContext::VarContext(std::vector<std::string> variables, std::vector<std::string> parameters)
    : variables_(std::move(variables)), parameters_(std::move(parameters)) {
  if (variables_.empty()) throw UsageError("a context needs at least one variable");
  std::set<std::string> seen;
  for (const auto& name : variables_) {
    if (name.empty()) throw UsageError("empty variable name");
    if (!seen.insert(name).second) throw UsageError("duplicate name '" + name + "'");
  }
  for (const auto& name : parameters_) {
    if (name.empty()) throw UsageError("empty parameter name");
    if (!seen.insert(name).second) throw UsageError("duplicate name '" + name + "'");
  }
}

std::optional<std::size_t> VarContext::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> VarContext::parameter_index(std::string_view name) const {
  for (std::size_t i = 0; i < parameters_.size(); ++i)
    if (parameters_[i] == name) return i;
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> variables, std::vector<std::string> parameters) {
  return std::make_shared<const VarContext>(std::move(variables), std::move(parameters));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t num_variables, std::size_t index, std::uint32_t power) {
  if (index >= num_variables) throw UsageError("variable index out of range");
  Monomial m(num_variables);
  m.exponents_[index] = power;
  return m;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) throw UsageError("monomials from different contexts");
  for (std::size_t i = 0; i < size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw UsageError("monomials from different contexts");
  Monomial r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.exponents_[i] += other.exponents_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw UsageError("monomial quotient is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.exponents_[i] -= divisor.exponents_[i];
  return r;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  if (u.size() != v.size()) throw UsageError("monomials from different contexts");
  std::vector<std::uint32_t> e(u.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  if (u.size() != v.size()) throw UsageError("monomials from different contexts");
  std::vector<std::uint32_t> e(u.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(u[i], v[i]);
  return Monomial(std::move(e));
}

std::strong_ordering compare_monomials(const Monomial& u, const Monomial& v, MonomialOrder /*order*/) {
  if (u.size() != v.size()) throw UsageError("monomials from different contexts");
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(ContextPtr context) : context_(std::move(context)) {
  if (!context_) throw UsageError("polynomial without context");
}

Polynomial Polynomial::constant(ContextPtr context, const ParamFraction& value) {
  Polynomial p(std::move(context));
  if (value.num_params() != p.context_->num_params()) throw UsageError("coefficient from a different parameter list");
  if (!value.is_zero()) p.terms_.push_back({value, Monomial(p.context_->num_variables())});
  return p;
}

Polynomial Polynomial::constant(ContextPtr context, const Rational& value) {
  const std::size_t n = context->num_params();
  return constant(std::move(context), ParamFraction(value, n));
}

Polynomial Polynomial::variable(ContextPtr context, std::size_t index) {
  Polynomial p(std::move(context));
  p.terms_.push_back({ParamFraction(Rational(1), p.context_->num_params()),
                      Monomial::variable(p.context_->num_variables(), index)});
  return p;
}

Polynomial Polynomial::variable(ContextPtr context, std::string_view name) {
  const auto idx = context->variable_index(name);
  if (!idx) throw UsageError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(context), *idx);
}

Polynomial Polynomial::parameter(ContextPtr context, std::string_view name) {
  const auto idx = context->parameter_index(name);
  if (!idx) throw UsageError("unknown parameter '" + std::string(name) + "'");
  const std::size_t n = context->num_params();
  return constant(std::move(context), ParamFraction::parameter(n, *idx));
}

Polynomial Polynomial::from_term(ContextPtr context, Term term) {
  Polynomial p(std::move(context));
  if (term.monomial.size() != p.context_->num_variables()) throw UsageError("monomial from a different context");
  if (!term.coefficient.is_zero()) p.terms_.push_back(std::move(term));
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr context, std::vector<Term> terms) {
  Polynomial p(std::move(context));
  for (const auto& t : terms)
    if (t.monomial.size() != p.context_->num_variables()) throw UsageError("monomial from a different context");
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw UsageError("the zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t variable) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[variable]);
  return d;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_context(context_, other.context_)) throw UsageError("polynomials from different contexts");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial Polynomial::merged(const Polynomial& other, bool subtract) const {
  Polynomial out(context_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const auto c = compare_monomials(terms_[i].monomial, other.terms_[j].monomial);
    if (c == std::strong_ordering::greater) {
      out.terms_.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      const Term& t = other.terms_[j++];
      out.terms_.push_back(subtract ? Term{-t.coefficient, t.monomial} : t);
    } else {
      ParamFraction sum = subtract ? terms_[i].coefficient - other.terms_[j].coefficient
                                   : terms_[i].coefficient + other.terms_[j].coefficient;
      if (!sum.is_zero()) out.terms_.push_back({std::move(sum), terms_[i].monomial});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) {
    const Term& t = other.terms_[j];
    out.terms_.push_back(subtract ? Term{-t.coefficient, t.monomial} : t);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  return *this = merged(other, false);
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  return *this = merged(other, true);
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_compatible(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.context_);
  if (lhs.size() == 1) return rhs.times_term(lhs.terms_.front());
  if (rhs.size() == 1) return lhs.times_term(rhs.terms_.front());
  std::vector<Term> products;
  products.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_) products.push_back({a.coefficient * b.coefficient, a.monomial * b.monomial});
  return Polynomial::from_terms(lhs.context_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const ParamFraction& factor) const {
  if (factor.is_zero()) return Polynomial(context_);
  if (factor.is_one()) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= factor;
  return r;
}

Polynomial Polynomial::times_term(const Term& term) const {
  if (term.coefficient.is_zero()) return Polynomial(context_);
  // Lex is multiplicative, so the arranged order is preserved.
  Polynomial r(context_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coefficient * term.coefficient, t.monomial * term.monomial});
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(context_, Rational(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

ParamFraction Polynomial::coefficient_of(const Monomial& m) const {
  if (m.size() != context_->num_variables()) throw UsageError("monomial from a different context");
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return ParamFraction(context_->num_params());
}

Polynomial Polynomial::substitute(std::size_t variable, const Polynomial& replacement) const {
  check_compatible(replacement);
  if (variable >= context_->num_variables()) throw UsageError("variable index out of range");
  const std::uint32_t deg = degree_in(variable);
  if (deg == 0) return *this;
  std::vector<std::vector<Term>> buckets(deg + 1);
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e = t.monomial.exponents();
    const std::uint32_t k = e[variable];
    e[variable] = 0;
    buckets[k].push_back({t.coefficient, Monomial(std::move(e))});
  }
  Polynomial acc(context_);
  for (std::size_t k = buckets.size(); k-- > 0;) {
    acc *= replacement;
    acc += from_terms(context_, std::move(buckets[k]));
  }
  return acc;
}

Polynomial Polynomial::substitute(std::string_view name, const Polynomial& replacement) const {
  const auto idx = context_->variable_index(name);
  if (!idx) throw UsageError("unknown variable '" + std::string(name) + "'");
  return substitute(*idx, replacement);
}

Polynomial Polynomial::substitute_parameter(std::string_view name, const ParamFraction& value) const {
  const auto idx = context_->parameter_index(name);
  if (!idx) throw UsageError("unknown parameter '" + std::string(name) + "'");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coefficient.substitute(*idx, value), t.monomial});
  return from_terms(context_, std::move(terms));
}

Polynomial Polynomial::clear_denominators() const {
  if (is_zero()) return *this;
  const std::size_t n = context_->num_params();
  ParamPoly common = ParamPoly::constant(n, Rational(1));
  for (const auto& t : terms_) {
    const ParamPoly& d = t.coefficient.denominator();
    if (d.is_one()) continue;
    const ParamPoly g = param_poly_gcd(common, d);
    common = common * exact_divide(d, g);
  }
  std::vector<ParamPoly> numerators;
  numerators.reserve(terms_.size());
  for (const auto& t : terms_)
    numerators.push_back(t.coefficient.numerator() * exact_divide(common, t.coefficient.denominator()));

  ParamPoly content(n);
  for (const auto& num : numerators) {
    content = content.is_zero() ? primitive_part(num) : param_poly_gcd(content, num);
    if (content.is_one()) break;
  }
  if (!content.is_one())
    for (auto& num : numerators) num = exact_divide(num, content);

  // Remaining rational scale: clear integer denominators, drop integer content, fix sign.
  mpz_class den = 1;
  mpz_class num_gcd = 0;
  for (const auto& num : numerators) {
    const mpz_class l = denominator_lcm(num);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
  }
  for (auto& num : numerators) num = num.scaled(Rational(den));
  for (const auto& num : numerators) {
    const mpz_class c = integer_content(num);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_mpz_t());
  }
  if (numerators.front().leading_coefficient().sign() < 0) num_gcd = -num_gcd;
  const Rational fix = Rational(num_gcd).inverse();

  Polynomial out(context_);
  out.terms_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i)
    out.terms_.push_back({ParamFraction::from_poly(numerators[i].scaled(fix)), terms_[i].monomial});
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> variable_values,
                              std::span<const Rational> parameter_values) const {
  if (variable_values.size() != context_->num_variables()) throw UsageError("wrong number of variable values");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational term = t.coefficient.evaluate(parameter_values);
    for (std::size_t i = 0; i < variable_values.size(); ++i)
      if (t.monomial[i] != 0) term *= gbsect::pow(variable_values[i], t.monomial[i]);
    sum += term;
  }
  return sum;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return same_context(lhs.context_, rhs.context_) && lhs.terms_ == rhs.terms_;
}

// ----------------------------------------------------------- change_context

namespace {

struct Slot {
  bool is_variable;
  std::size_t index;
};

std::optional<Slot> locate(const VarContext& ctx, const std::string& name) {
  if (auto v = ctx.variable_index(name)) return Slot{true, *v};
  if (auto p = ctx.parameter_index(name)) return Slot{false, *p};
  return std::nullopt;
}

}  // namespace

Polynomial change_context(const Polynomial& p, const ContextPtr& target) {
  if (same_context(p.context(), target)) return p;
  const VarContext& src = *p.context();
  const std::size_t nv = target->num_variables();
  const std::size_t np = target->num_params();

  auto slot_for = [&](const std::string& name) {
    auto s = locate(*target, name);
    if (!s) throw UsageError("name '" + name + "' is missing from the target context");
    return *s;
  };
  std::vector<std::optional<Slot>> var_slots(src.num_variables());
  std::vector<std::optional<Slot>> param_slots(src.num_params());
  for (std::size_t i = 0; i < src.num_variables(); ++i) var_slots[i] = locate(*target, src.variables()[i]);
  for (std::size_t i = 0; i < src.num_params(); ++i) param_slots[i] = locate(*target, src.parameters()[i]);

  auto remap_param_poly = [&](const ParamPoly& q, std::vector<std::uint32_t>* lifted) {
    std::vector<ParamPoly::Term> out;
    for (const auto& t : q.terms()) {
      ParamPoly::Exponents e(np, 0);
      for (std::size_t k = 0; k < t.exponents.size(); ++k) {
        if (t.exponents[k] == 0) continue;
        const Slot s = param_slots[k] ? *param_slots[k] : slot_for(src.parameters()[k]);
        if (s.is_variable) {
          if (lifted == nullptr) throw UsageError("parameter '" + src.parameters()[k] + "' occurs in a denominator");
          (*lifted)[s.index] += t.exponents[k];
        } else {
          e[s.index] += t.exponents[k];
        }
      }
      out.push_back({std::move(e), t.coefficient});
    }
    return ParamPoly::from_terms(np, std::move(out));
  };

  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> base(nv, 0);
    ParamPoly param_factor = ParamPoly::constant(np, Rational(1));
    for (std::size_t i = 0; i < src.num_variables(); ++i) {
      if (t.monomial[i] == 0) continue;
      const Slot s = var_slots[i] ? *var_slots[i] : slot_for(src.variables()[i]);
      if (s.is_variable) {
        base[s.index] += t.monomial[i];
      } else {
        ParamPoly::Exponents e(np, 0);
        e[s.index] = t.monomial[i];
        param_factor = param_factor.times_term(e, Rational(1));
      }
    }
    const ParamPoly den = remap_param_poly(t.coefficient.denominator(), nullptr);
    for (const auto& nt : t.coefficient.numerator().terms()) {
      std::vector<std::uint32_t> lifted(nv, 0);
      const ParamPoly single = remap_param_poly(ParamPoly::from_terms(src.num_params(), {nt}), &lifted);
      for (std::size_t k = 0; k < nv; ++k) lifted[k] += base[k];
      terms.push_back({normalize_fraction(single * param_factor, den), Monomial(std::move(lifted))});
    }
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace gbsect
