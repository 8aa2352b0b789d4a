#pragma once

#include <span>
#include <vector>

#include "gbsect/polynomial.hpp"

namespace gbsect {

class GroebnerBasis;

/// f = Σ quotients[i]·divisors[i] + remainder, with no monomial of the
/// remainder divisible by any LT(divisors[i]).
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  std::vector<Polynomial> divisors;
};

/// Multivariate division: at each step the first divisor (in list order)
/// whose leading term divides LT(p) is used; otherwise LT(p) moves to the
/// remainder. Throws UsageError for a zero divisor.
DivisionResult multivariate_divide(const Polynomial& f, std::span<const Polynomial> divisors,
                                   MonomialOrder order = MonomialOrder::lex());

/// Remainder of multivariate_divide without tracking quotients.
Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors,
                     MonomialOrder order = MonomialOrder::lex());

/// Normal form modulo a Gröbner basis; independent of the element order.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace gbsect
