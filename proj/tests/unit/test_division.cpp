#include <doctest.h>

#include "gbsect/division.hpp"
#include "gbsect/errors.hpp"
#include "support.hpp"

using namespace gbsect;
using test::P;

TEST_CASE("division by itself") {
  const auto ctx = test::xyz({"a"});
  const Polynomial f = P(ctx, "a*x*y - z^2 + 1");
  const DivisionResult r = multivariate_divide(f, std::vector<Polynomial>{f});
  CHECK(r.quotients.at(0) == P(ctx, "1"));
  CHECK(r.remainder.is_zero());
}

TEST_CASE("textbook division") {
  const auto ctx = make_context({"x", "y"});
  const Polynomial f = P(ctx, "x^2*y + x*y^2 + y^2");
  const auto divisors = test::Ps(ctx, {"x*y - 1", "y^2 - 1"});
  const DivisionResult r = multivariate_divide(f, divisors);
  CHECK(r.quotients.at(0) == P(ctx, "x + y"));
  CHECK(r.quotients.at(1) == P(ctx, "1"));
  CHECK(r.remainder == P(ctx, "x + y + 1"));
  CHECK(r.quotients[0] * divisors[0] + r.quotients[1] * divisors[1] + r.remainder == f);

  // Divisor order matters for the remainder.
  const std::vector<Polynomial> swapped{divisors[1], divisors[0]};
  CHECK(remainder(f, swapped) == P(ctx, "2*x + 1"));
}

TEST_CASE("reduction to the plane") {
  const auto ctx = test::xyz();
  const Polynomial f = P(ctx, "x + y*z + y - z^4 - 4");
  const Polynomial g = P(ctx, "y - z^3 - 1");
  CHECK(f - P(ctx, "z") * g == P(ctx, "x + y + z - 4"));
  const DivisionResult r = multivariate_divide(f, std::vector<Polynomial>{g});
  CHECK(r.quotients[0] == P(ctx, "z + 1"));
  CHECK(r.remainder == P(ctx, "x + z^3 + z - 3"));
}

TEST_CASE("division edge cases") {
  const auto ctx = test::xyz();
  const Polynomial f = P(ctx, "x^2 + 1");
  const DivisionResult r = multivariate_divide(f, std::vector<Polynomial>{});
  CHECK(r.quotients.empty());
  CHECK(r.remainder == f);
  CHECK_THROWS_AS(multivariate_divide(f, test::Ps(ctx, {"x", "0"})), UsageError);
  CHECK(remainder(P(ctx, "0"), test::Ps(ctx, {"x"})).is_zero());
  CHECK_THROWS_AS(remainder(f, test::Ps(make_context({"x"}), {"x"})), UsageError);
}

TEST_CASE("normal form") {
  const auto ctx = test::xyz();
  const GroebnerBasis g(ctx, test::Ps(ctx, {"x + z^3 + z - 3", "y - z^3 - 1"}), MonomialOrder::lex(), true);
  CHECK(normal_form(P(ctx, "x"), g) == P(ctx, "-z^3 - z + 3"));
  for (const auto& e : g.elements()) CHECK(normal_form(e, g).is_zero());

  const auto pctx = test::xyz({"a", "b"});
  const GroebnerBasis g17 = reduced_groebner_basis(
      IdealSpec(pctx, test::Ps(pctx, {"z - x^2/a^2 - y^2/b^2", "x^2/a^2 + y^2/b^2 - x/a - y/b"})));
  CHECK(normal_form(P(pctx, "b*x + a*y - a*b*z"), g17).is_zero());
  CHECK(normal_form(P(pctx, "z"), g17) == P(pctx, "z"));
}
