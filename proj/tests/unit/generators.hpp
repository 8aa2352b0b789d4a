#pragma once

#include <random>
#include <vector>

#include "gbsect/polynomial.hpp"

namespace test {

using namespace gbsect;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  Rational rational(long range = 5) {
    long den = integer(1, 4);
    return Rational(integer(-range, range), den);
  }
  Rational nonzero_rational(long range = 5) {
    Rational r;
    do r = rational(range);
    while (r.is_zero());
    return r;
  }

  ParamPoly param_poly(std::size_t np, int terms, std::uint32_t max_deg) {
    std::vector<ParamPoly::Term> ts;
    for (int i = 0; i < terms; ++i) {
      ParamPoly::Exponents e(np, 0);
      for (auto& x : e) x = static_cast<std::uint32_t>(integer(0, max_deg));
      ts.push_back({std::move(e), rational()});
    }
    return ParamPoly::from_terms(np, std::move(ts));
  }

  ParamFraction fraction(std::size_t np, bool allow_zero = true) {
    for (;;) {
      const ParamPoly num = param_poly(np, static_cast<int>(integer(1, 3)), 2);
      ParamPoly den = param_poly(np, static_cast<int>(integer(1, 2)), 1);
      if (den.is_zero()) continue;
      const ParamFraction f = num.is_zero() ? ParamFraction(np)
                                            : ParamFraction::from_poly(num) / ParamFraction::from_poly(den);
      if (!allow_zero && f.is_zero()) continue;
      return f;
    }
  }

  Monomial monomial(std::size_t nv, std::uint32_t max_deg) {
    std::vector<std::uint32_t> e(nv);
    for (auto& x : e) x = static_cast<std::uint32_t>(integer(0, max_deg));
    return Monomial(std::move(e));
  }

  Polynomial poly(const ContextPtr& ctx, int max_terms, std::uint32_t max_deg, bool params = false) {
    std::vector<Term> ts;
    const int n = static_cast<int>(integer(0, max_terms));
    for (int i = 0; i < n; ++i) {
      ParamFraction c = params && coin(0.3) ? fraction(ctx->num_params(), false)
                                            : ParamFraction(nonzero_rational(), ctx->num_params());
      ts.push_back({std::move(c), monomial(ctx->num_variables(), max_deg)});
    }
    return Polynomial::from_terms(ctx, std::move(ts));
  }

  Polynomial nonzero_poly(const ContextPtr& ctx, int max_terms, std::uint32_t max_deg, bool params = false) {
    Polynomial p(ctx);
    do p = poly(ctx, max_terms, max_deg, params);
    while (p.is_zero());
    return p;
  }
};

inline bool remainder_is_pure(const Polynomial& r, const std::vector<Polynomial>& divisors) {
  for (const auto& t : r.terms())
    for (const auto& d : divisors)
      if (d.leading_monomial().divides(t.monomial)) return false;
  return true;
}

}  // namespace test
