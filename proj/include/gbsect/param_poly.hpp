#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gbsect/rational.hpp"

namespace gbsect {

/// Sparse polynomial in the parameters of a context with rational
/// coefficients. Terms are kept strictly descending under lex on the
/// parameter exponent vectors; no stored coefficient is zero.
class ParamPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct Term {
    Exponents exponents;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit ParamPoly(std::size_t num_params = 0) : num_params_(num_params) {}

  static ParamPoly constant(std::size_t num_params, const Rational& value);
  static ParamPoly generator(std::size_t num_params, std::size_t index);
  /// Builds a canonical polynomial from arbitrary terms (merges duplicates,
  /// drops zeros, sorts).
  static ParamPoly from_terms(std::size_t num_params, std::vector<Term> terms);

  std::size_t num_params() const { return num_params_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the empty exponent vector (0 when absent).
  Rational constant_term() const;
  /// Value of a constant polynomial; throws UsageError otherwise.
  Rational constant_value() const;

  /// First term under lex on the parameters.
  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  std::uint32_t degree_in(std::size_t index) const;
  std::uint32_t total_degree() const;
  bool involves(std::size_t index) const { return degree_in(index) != 0; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);

  ParamPoly scaled(const Rational& factor) const;
  ParamPoly times_term(const Exponents& exponents, const Rational& coefficient) const;
  ParamPoly pow(unsigned exponent) const;

  Rational evaluate(std::span<const Rational> values) const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  void check_compatible(const ParamPoly& other) const;

  std::size_t num_params_;
  std::vector<Term> terms_;
};

/// Lex comparison of exponent vectors: negative, zero or positive.
int compare_exponents(const ParamPoly::Exponents& lhs, const ParamPoly::Exponents& rhs);

/// Quotient of an exact division; throws ArithmeticError when the divisor
/// is zero or does not divide the dividend.
ParamPoly exact_divide(const ParamPoly& dividend, const ParamPoly& divisor);

/// Greatest common divisor normalized to integer coefficients with content 1
/// and a positive leading coefficient. gcd(p, 0) is p normalized; gcd(0, 0) = 0.
ParamPoly param_poly_gcd(const ParamPoly& p, const ParamPoly& q);

/// Rational factor c with p = c * primitive_part(p); primitive part has
/// integer coefficients with gcd 1 and positive leading coefficient.
Rational rational_content(const ParamPoly& p);
ParamPoly primitive_part(const ParamPoly& p);

/// Least common multiple of the denominators of all coefficients.
mpz_class denominator_lcm(const ParamPoly& p);
/// gcd of the numerators of all coefficients (for integer polynomials).
mpz_class integer_content(const ParamPoly& p);

}  // namespace gbsect
