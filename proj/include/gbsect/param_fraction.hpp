#pragma once

#include <cstddef>
#include <span>

#include "gbsect/param_poly.hpp"
#include "gbsect/rational.hpp"

namespace gbsect {

/// Element of Q(parameters): a ratio of parameter polynomials in canonical
/// form. Both sides carry integer coefficients, they share no common factor
/// (including integer content) and the denominator's leading coefficient is
/// positive. Zero is 0/1, so equality is structural.
class ParamFraction {
 public:
  explicit ParamFraction(std::size_t num_params = 0)
      : num_(num_params), den_(ParamPoly::constant(num_params, Rational(1))) {}
  ParamFraction(const Rational& value, std::size_t num_params);

  static ParamFraction parameter(std::size_t num_params, std::size_t index);
  static ParamFraction from_poly(const ParamPoly& numerator);

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  std::size_t num_params() const { return num_.num_params(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// True when the denominator is 1 (the value lies in Z[parameters]).
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const;
  bool involves(std::size_t index) const { return num_.involves(index) || den_.involves(index); }

  /// Sign of the numerator's leading coefficient (0 for zero).
  int leading_sign() const { return num_.is_zero() ? 0 : num_.leading_coefficient().sign(); }

  ParamFraction operator-() const;
  ParamFraction inverse() const;
  ParamFraction& operator+=(const ParamFraction& other);
  ParamFraction& operator-=(const ParamFraction& other);
  ParamFraction& operator*=(const ParamFraction& other);
  ParamFraction& operator/=(const ParamFraction& other);
  friend ParamFraction operator+(ParamFraction lhs, const ParamFraction& rhs) { return lhs += rhs; }
  friend ParamFraction operator-(ParamFraction lhs, const ParamFraction& rhs) { return lhs -= rhs; }
  friend ParamFraction operator*(ParamFraction lhs, const ParamFraction& rhs) { return lhs *= rhs; }
  friend ParamFraction operator/(ParamFraction lhs, const ParamFraction& rhs) { return lhs /= rhs; }
  ParamFraction pow(unsigned exponent) const;

  /// Replaces parameter `index` by `value` (a fraction over the same parameters).
  ParamFraction substitute(std::size_t index, const ParamFraction& value) const;
  Rational evaluate(std::span<const Rational> values) const;

  friend bool operator==(const ParamFraction&, const ParamFraction&) = default;

 private:
  friend ParamFraction normalize_fraction(ParamPoly numerator, ParamPoly denominator);
  ParamFraction(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void check_compatible(const ParamFraction& other) const;

  ParamPoly num_;
  ParamPoly den_;
};

/// Canonical representative of numerator/denominator; throws ArithmeticError
/// for a zero denominator.
ParamFraction normalize_fraction(ParamPoly numerator, ParamPoly denominator);

}  // namespace gbsect
