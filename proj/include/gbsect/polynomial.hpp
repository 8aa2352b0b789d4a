#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbsect/param_fraction.hpp"

namespace gbsect {

/// Ordered ring variables (x ≻ y ≻ z under lex) and the ordered parameters
/// that generate the coefficient field. The name sets are disjoint.
class VarContext {
 public:
  VarContext(std::vector<std::string> variables, std::vector<std::string> parameters);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_params() const { return parameters_.size(); }

  std::optional<std::size_t> variable_index(std::string_view name) const;
  std::optional<std::size_t> parameter_index(std::string_view name) const;

  friend bool operator==(const VarContext&, const VarContext&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<std::string> parameters_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> variables, std::vector<std::string> parameters = {});

/// Exponent vector over the variables of a context.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_variables) : exponents_(num_variables, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t num_variables, std::size_t index, std::uint32_t power = 1);

  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t total_degree() const;
  bool is_one() const;

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);

/// Monomial orders. Lex on the variable order of the context is the only
/// order used for computation.
struct MonomialOrder {
  enum class Kind { lex };
  Kind kind = Kind::lex;

  static MonomialOrder lex() { return {}; }
  std::string name() const { return "lex"; }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering compare_monomials(const Monomial& u, const Monomial& v,
                                       MonomialOrder order = MonomialOrder::lex());

struct Term {
  ParamFraction coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over Q(parameters) stored as its arranged form: terms strictly
/// descending under lex, no zero coefficients. Zero is the empty list.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr context);

  static Polynomial constant(ContextPtr context, const ParamFraction& value);
  static Polynomial constant(ContextPtr context, const Rational& value);
  static Polynomial variable(ContextPtr context, std::string_view name);
  static Polynomial variable(ContextPtr context, std::size_t index);
  static Polynomial parameter(ContextPtr context, std::string_view name);
  static Polynomial from_term(ContextPtr context, Term term);
  /// Canonicalizes arbitrary terms (merges, drops zeros, sorts).
  static Polynomial from_terms(ContextPtr context, std::vector<Term> terms);

  const ContextPtr& context() const { return context_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const ParamFraction& leading_coefficient() const { return leading_term().coefficient; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t variable) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  Polynomial scaled(const ParamFraction& factor) const;
  Polynomial times_term(const Term& term) const;
  Polynomial pow(unsigned exponent) const;
  /// Leading coefficient scaled to 1; zero stays zero.
  Polynomial monic() const;

  /// Exact coefficient of `m`, zero when absent.
  ParamFraction coefficient_of(const Monomial& m) const;

  /// Replaces variable `name` by `replacement` and expands.
  Polynomial substitute(std::string_view name, const Polynomial& replacement) const;
  Polynomial substitute(std::size_t variable, const Polynomial& replacement) const;
  /// Replaces a coefficient-field parameter by a value of the field.
  Polynomial substitute_parameter(std::string_view name, const ParamFraction& value) const;

  /// λ·p with all coefficients in Z[parameters], overall content 1 and a
  /// positive leading sign. Zero maps to zero.
  Polynomial clear_denominators() const;

  Rational evaluate(std::span<const Rational> variable_values, std::span<const Rational> parameter_values) const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void check_compatible(const Polynomial& other) const;
  Polynomial merged(const Polynomial& other, bool subtract) const;

  ContextPtr context_;
  std::vector<Term> terms_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Re-expresses `p` in `target`, where every name of p's context that is
/// actually used appears in `target` as a variable or a parameter. Moving a
/// parameter into the variables requires it to be absent from denominators.
Polynomial change_context(const Polynomial& p, const ContextPtr& target);

}  // namespace gbsect
