#include "gbsect/division.hpp"

#include <optional>

#include "gbsect/errors.hpp"
#include "gbsect/groebner.hpp"

namespace gbsect {

namespace {

void check_divisors(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw UsageError("division by the zero polynomial");
    if (!same_context(f.context(), g.context())) throw UsageError("polynomials from different contexts");
  }
}

// Index of the first divisor whose leading monomial divides m.
std::optional<std::size_t> first_divisor(const Monomial& m, std::span<const Polynomial> divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i].leading_monomial().divides(m)) return i;
  return std::nullopt;
}

template <typename OnQuotient>
Polynomial divide_loop(const Polynomial& f, std::span<const Polynomial> divisors, OnQuotient&& on_quotient) {
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lead = p.leading_term();
    if (auto i = first_divisor(lead.monomial, divisors)) {
      const Polynomial& g = divisors[*i];
      const Term factor{lead.coefficient / g.leading_coefficient(), lead.monomial / g.leading_monomial()};
      on_quotient(*i, factor);
      p -= g.times_term(factor);
    } else {
      // Leading terms leave p in descending order, so the remainder stays arranged.
      rem.push_back(lead);
      p -= Polynomial::from_term(p.context(), lead);
    }
  }
  return Polynomial::from_terms(f.context(), std::move(rem));
}

}  // namespace

DivisionResult multivariate_divide(const Polynomial& f, std::span<const Polynomial> divisors,
                                   MonomialOrder /*order*/) {
  check_divisors(f, divisors);
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  Polynomial r = divide_loop(f, divisors, [&](std::size_t i, const Term& t) { quotient_terms[i].push_back(t); });
  DivisionResult result{{}, std::move(r), {divisors.begin(), divisors.end()}};
  result.quotients.reserve(divisors.size());
  for (auto& terms : quotient_terms) result.quotients.push_back(Polynomial::from_terms(f.context(), std::move(terms)));
  return result;
}

Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder /*order*/) {
  check_divisors(f, divisors);
  return divide_loop(f, divisors, [](std::size_t, const Term&) {});
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return remainder(f, basis.elements(), basis.order());
}

}  // namespace gbsect
