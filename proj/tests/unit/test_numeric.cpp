#include <doctest.h>

#include "gbsect/errors.hpp"
#include "gbsect/param_fraction.hpp"
#include "support.hpp"

using namespace gbsect;

namespace {

const ContextPtr ab = make_context({"x"}, {"a", "b"});

ParamFraction F(const std::string& text) {
  const Polynomial p = test::P(ab, text);
  REQUIRE(p.is_constant());
  return p.is_zero() ? ParamFraction(2) : p.leading_coefficient();
}

ParamPoly PP(const std::string& text) {
  const ParamFraction f = F(text);
  REQUIRE(f.denominator().is_constant());
  return f.numerator().scaled(f.denominator().constant_value().inverse());
}

std::string S(const ParamFraction& f) { return render(f, ab->parameters()); }
std::string S(const ParamPoly& p) { return render(p, ab->parameters()); }

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
  CHECK_THROWS_AS(Rational(0).inverse(), ArithmeticError);
  CHECK_THROWS(Rational::parse("1/x"));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-3, 4) < Rational(0));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  Rational r;
  CHECK(Rational(9, 4).perfect_square_root(r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(Rational(2).perfect_square_root(r));
  CHECK_FALSE(Rational(-4).perfect_square_root(r));
}

TEST_CASE("field operations on fractions") {
  CHECK((F("a/b") * F("b/a")).is_one());
  CHECK(F("1/2") + F("1/3") == F("5/6"));
  CHECK(S(F("(a^2 - b^2)/(a + b)")) == "a - b");
  CHECK(S(F("a") / F("a^2 - a*b")) == "1/(a - b)");
  CHECK(S(F("1/a - 1/b")) == "-(a - b)/(a*b)");
  CHECK(F("a/b") - F("a/b") == ParamFraction(2));
  CHECK_THROWS_AS(F("a") / ParamFraction(2), ArithmeticError);
  CHECK_THROWS_AS(ParamFraction(2).inverse(), ArithmeticError);
  CHECK(F("a/b").inverse() == F("b/a"));
  CHECK(F("-a/b").pow(2) == F("a^2/b^2"));
}

TEST_CASE("normalize_fraction") {
  CHECK(S(normalize_fraction(PP("2*a"), PP("4"))) == "a/2");
  const ParamFraction zero = normalize_fraction(ParamPoly(2), PP("a^2*b"));
  CHECK(zero.is_zero());
  CHECK(zero.denominator().is_one());
  CHECK(S(normalize_fraction(PP("a^2 + 2*a*b + b^2"), PP("a + b"))) == "a + b");
  CHECK_THROWS_AS(normalize_fraction(PP("a"), ParamPoly(2)), ArithmeticError);
  // Sign lives in the numerator, denominators have positive leading coefficient.
  const ParamFraction f = normalize_fraction(PP("a"), PP("-b"));
  CHECK(f.denominator() == PP("b"));
  CHECK(f.numerator() == PP("-a"));
  CHECK(S(normalize_fraction(PP("1/2*a"), PP("1/3*b"))) == "3*a/(2*b)");
}

TEST_CASE("parameter polynomial gcd") {
  CHECK(param_poly_gcd(PP("a^2"), PP("a^3")) == PP("a^2"));
  CHECK(param_poly_gcd(PP("a + b"), PP("a - b")) == PP("1"));
  CHECK(param_poly_gcd(ParamPoly(2), ParamPoly(2)).is_zero());
  CHECK(param_poly_gcd(PP("6*a^2*b - 6*b^3"), PP("4*a*b + 4*b^2")) == PP("a*b + b^2"));
  CHECK(param_poly_gcd(PP("a^2*b + a"), PP("b")) == PP("1"));
  CHECK(param_poly_gcd(PP("-3*a"), ParamPoly(2)) == PP("a"));
  CHECK(exact_divide(PP("a^2 - b^2"), PP("a - b")) == PP("a + b"));
  CHECK_THROWS_AS(exact_divide(PP("a^2 + b"), PP("a")), ArithmeticError);
}

TEST_CASE("substitution and evaluation in the coefficient field") {
  const ParamFraction f = F("(a^2 + b)/(a - b)");
  CHECK(f.substitute(0, F("b + 1")) == F("(b^2 + 3*b + 1)"));
  CHECK_THROWS_AS(f.substitute(0, F("b")), ArithmeticError);
  const std::vector<Rational> at{Rational(3), Rational(1)};
  CHECK(f.evaluate(at) == Rational(5));
}
