#include "gbsect/param_fraction.hpp"

#include <utility>

#include "gbsect/errors.hpp"

namespace gbsect {

namespace {

ParamPoly from_rational_numerator(const Rational& value, std::size_t n) {
  return ParamPoly::constant(n, Rational(value.numerator()));
}

ParamPoly from_rational_denominator(const Rational& value, std::size_t n) {
  return ParamPoly::constant(n, Rational(value.denominator()));
}

}  // namespace

ParamFraction::ParamFraction(const Rational& value, std::size_t num_params)
    : num_(from_rational_numerator(value, num_params)), den_(from_rational_denominator(value, num_params)) {}

ParamFraction ParamFraction::parameter(std::size_t num_params, std::size_t index) {
  return ParamFraction(ParamPoly::generator(num_params, index), ParamPoly::constant(num_params, Rational(1)));
}

ParamFraction ParamFraction::from_poly(const ParamPoly& numerator) {
  return normalize_fraction(numerator, ParamPoly::constant(numerator.num_params(), Rational(1)));
}

ParamFraction normalize_fraction(ParamPoly numerator, ParamPoly denominator) {
  if (numerator.num_params() != denominator.num_params())
    throw UsageError("parameter polynomials from different contexts");
  const std::size_t n = numerator.num_params();
  if (denominator.is_zero()) throw ArithmeticError("fraction with zero denominator");
  if (numerator.is_zero()) return ParamFraction(n);
  if (denominator.is_constant() && numerator.is_constant())
    return ParamFraction(numerator.constant_value() / denominator.constant_value(), n);

  // Scale both sides to integer coefficients.
  mpz_class scale = denominator_lcm(numerator);
  const mpz_class dl = denominator_lcm(denominator);
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), dl.get_mpz_t());
  if (scale != 1) {
    const Rational s(scale);
    numerator = numerator.scaled(s);
    denominator = denominator.scaled(s);
  }

  if (!denominator.is_constant()) {
    const ParamPoly g = param_poly_gcd(numerator, denominator);
    if (!g.is_constant()) {
      // g is primitive over Z, so by Gauss's lemma the quotients stay integral.
      numerator = exact_divide(numerator, g);
      denominator = exact_divide(denominator, g);
    }
  }

  mpz_class content = integer_content(numerator);
  const mpz_class dc = integer_content(denominator);
  mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), dc.get_mpz_t());
  if (denominator.leading_coefficient().sign() < 0) content = -content;
  if (content != 1) {
    const Rational inv = Rational(content).inverse();
    numerator = numerator.scaled(inv);
    denominator = denominator.scaled(inv);
  }
  return ParamFraction(std::move(numerator), std::move(denominator));
}

void ParamFraction::check_compatible(const ParamFraction& other) const {
  if (num_params() != other.num_params()) throw UsageError("fractions over different parameter lists");
}

Rational ParamFraction::constant_value() const {
  if (!is_constant()) throw UsageError("fraction is not constant");
  return num_.constant_value() / den_.constant_value();
}

ParamFraction ParamFraction::operator-() const { return ParamFraction(-num_, den_); }

ParamFraction ParamFraction::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of the zero fraction");
  if (num_.leading_coefficient().sign() < 0) return ParamFraction(-den_, -num_);
  return ParamFraction(den_, num_);
}

ParamFraction& ParamFraction::operator+=(const ParamFraction& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ += other.num_;
    return *this;
  }
  if (is_constant() && other.is_constant())
    return *this = ParamFraction(constant_value() + other.constant_value(), num_params());
  if (den_ == other.den_) return *this = normalize_fraction(num_ + other.num_, den_);
  return *this = normalize_fraction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

ParamFraction& ParamFraction::operator-=(const ParamFraction& other) { return *this += -other; }

ParamFraction& ParamFraction::operator*=(const ParamFraction& other) {
  check_compatible(other);
  if (is_zero() || other.is_zero()) return *this = ParamFraction(num_params());
  if (other.is_one()) return *this;
  if (is_one()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ *= other.num_;
    return *this;
  }
  if (is_constant() && other.is_constant())
    return *this = ParamFraction(constant_value() * other.constant_value(), num_params());
  // Cross-cancel before multiplying to keep the gcd inputs small.
  const ParamPoly g1 = param_poly_gcd(num_, other.den_);
  const ParamPoly g2 = param_poly_gcd(other.num_, den_);
  ParamPoly n = exact_divide(num_, g1) * exact_divide(other.num_, g2);
  ParamPoly d = exact_divide(den_, g2) * exact_divide(other.den_, g1);
  return *this = normalize_fraction(std::move(n), std::move(d));
}

ParamFraction& ParamFraction::operator/=(const ParamFraction& other) {
  check_compatible(other);
  return *this *= other.inverse();
}

ParamFraction ParamFraction::pow(unsigned exponent) const {
  if (exponent == 0) return ParamFraction(Rational(1), num_params());
  // Canonical form is preserved by powers: coprime factors stay coprime.
  return ParamFraction(num_.pow(exponent), den_.pow(exponent));
}

namespace {

ParamFraction substitute_poly(const ParamPoly& p, std::size_t index, const ParamFraction& value) {
  const std::size_t n = p.num_params();
  const std::uint32_t deg = p.degree_in(index);
  std::vector<std::vector<ParamPoly::Term>> buckets(deg + 1);
  for (const auto& t : p.terms()) {
    ParamPoly::Term stripped = t;
    stripped.exponents[index] = 0;
    buckets[t.exponents[index]].push_back(std::move(stripped));
  }
  // Horner evaluation in the fraction field.
  ParamFraction acc(n);
  for (std::size_t k = buckets.size(); k-- > 0;) {
    acc *= value;
    acc += ParamFraction::from_poly(ParamPoly::from_terms(n, std::move(buckets[k])));
  }
  return acc;
}

}  // namespace

ParamFraction ParamFraction::substitute(std::size_t index, const ParamFraction& value) const {
  check_compatible(value);
  if (index >= num_params()) throw UsageError("parameter index out of range");
  if (!involves(index)) return *this;
  const ParamFraction top = substitute_poly(num_, index, value);
  const ParamFraction bottom = substitute_poly(den_, index, value);
  if (bottom.is_zero()) throw ArithmeticError("substitution makes a denominator vanish");
  return top / bottom;
}

Rational ParamFraction::evaluate(std::span<const Rational> values) const {
  const Rational d = den_.evaluate(values);
  if (d.is_zero()) throw ArithmeticError("denominator vanishes at the evaluation point");
  return num_.evaluate(values) / d;
}

}  // namespace gbsect
