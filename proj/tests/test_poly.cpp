#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "locweil/errors.hpp"
#include "locweil/parse.hpp"
#include "locweil/poly.hpp"
#include "support.hpp"

using namespace locweil;
using testing_support::Gen;

namespace {

Polynomial P(std::string_view text, std::size_t nv) { return parse_polynomial(text, projective_names(nv)); }
Form F(std::string_view text, std::size_t nv) { return parse_form(text, nv); }

const Place kTwo = Place::finite(2);

}  // namespace

TEST_CASE("parse examples") {
  const Form f = F("x0^2 + 3*x0*x1", 2);
  CHECK(f.degree() == 2);
  CHECK(f.poly().terms().size() == 2);
  CHECK_THROWS_AS(F("x0 + 1", 2), ParseError);
  const auto g = parse_polynomial("(1/2)*u^3 - u*w + 5", {"u", "w"});
  CHECK(g.degree() == 3);
  CHECK(!g.is_homogeneous());
  CHECK(g.terms().size() == 3);
}

TEST_CASE("parse errors carry positions") {
  try {
    (void)P("x0 x1", 2);
    FAIL("implicit multiplication accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(P("x0 +", 2), ParseError);
  CHECK_THROWS_AS(P("x0^x1", 2), ParseError);
  CHECK_THROWS_AS(P("x5", 2), ParseError);
  CHECK_THROWS_AS(P("1/0", 2), ParseError);
  CHECK_THROWS_AS(P("sqrt(4)", 2), ParseError);
  CHECK_THROWS_AS(P("sqrt(2) + sqrt(3)", 2), ParseError);
  CHECK_THROWS_AS(P("(x0", 2), ParseError);
}

TEST_CASE("parse: whitespace, unicode minus, quadratic literals") {
  CHECK(P(" x0 *  x1 ", 2) == P("x0*x1", 2));
  CHECK(P("x0 − x1", 2) == P("x0 - x1", 2));
  const auto q = P("sqrt(-1)*x0 + 2", 1);
  CHECK(q.field() == Field{-1});
  CHECK(P("3/4*x0", 1).coefficient(Monomial::variable(1, 0)) == FieldElement(Rational(3, 4)));
  CHECK(P("-(x0 - x1)^2", 2) == P("-x0^2 + 2*x0*x1 - x1^2", 2));
}

TEST_CASE("to_string round-trips through the parser") {
  Gen gen(41);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.poly(3, 4, 30);
    CHECK(P(p.to_string(), 3) == p);
  }
  for (long d : {-1, 2, -5}) {
    Polynomial p(2);
    p.add_term(Monomial(std::vector<Exponent>{1, 1}), FieldElement(Rational(3, 2), Rational(-1), d));
    p.add_term(Monomial(std::vector<Exponent>{0, 2}), FieldElement(Rational(0), Rational(2, 3), d));
    p.add_term(Monomial(std::vector<Exponent>{2, 0}), FieldElement(Rational(-7)));
    CHECK(P(p.to_string(), 2) == p);
  }
  CHECK(P("x0^2 - 3*x0*x1", 2).to_string() == "x0^2 - 3*x0*x1");
  CHECK(Polynomial(2).to_string() == "0");
}

TEST_CASE("evaluate examples and homogeneity") {
  const std::vector<FieldElement> x{2, 3};
  CHECK(P("x0*x1", 2).evaluate(x) == FieldElement(6));
  CHECK(P("x0^2 + x1^2", 2).evaluate(std::vector<FieldElement>{1, 0}) == FieldElement(1));
  CHECK_THROWS_AS(P("x0", 2).evaluate(std::vector<FieldElement>{1}), DomainError);

  Gen gen(43);
  for (int i = 0; i < 100; ++i) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 4));
    const Form f = gen.form(3, d);
    const auto pt = gen.integer_point(3, 20);
    const FieldElement c(gen.rational(30));
    std::vector<FieldElement> scaled;
    for (const auto& v : pt) scaled.push_back(v * c);
    FieldElement cd(1);
    for (unsigned k = 0; k < d; ++k) cd *= c;
    CHECK(f.evaluate(scaled) == cd * f.evaluate(pt));
  }
}

TEST_CASE("ring operations") {
  CHECK(P("x0", 2) * P("x1", 2) == P("x0*x1", 2));
  CHECK((P("x0", 2) * Polynomial(2)).is_zero());
  CHECK(P("x0 + x1", 2) * P("x0 - x1", 2) == P("x0^2 - x1^2", 2));
  CHECK_THROWS_AS(P("x0", 2) * P("x0", 3), DomainError);
  CHECK(P("x0 + x1", 2).pow(3) == P("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 2));
  CHECK(P("2*x0 + 4", 1).monic() == P("x0 + 2", 1));

  Gen gen(47);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.poly(3, 3), q = gen.poly(3, 3), r = gen.poly(3, 2);
    const auto x = gen.integer_point(3, 9);
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("grevlex order") {
  auto m = [](std::vector<Exponent> e) { return Monomial(std::move(e)); };
  CHECK(grevlex_compare(m({2, 0, 0}), m({0, 1, 0})) > 0);  // degree first
  CHECK(grevlex_compare(m({1, 1, 0}), m({1, 0, 1})) > 0);  // smaller last exponent wins
  CHECK(grevlex_compare(m({0, 2, 0}), m({1, 0, 1})) > 0);
  CHECK(grevlex_compare(m({1, 0, 0}), m({1, 0, 0})) == 0);
  CHECK(P("x1^2 + x0*x2 + x0^2", 3).leading_monomial() == m({2, 0, 0}));
  // Every monomial list comes out strictly descending.
  const auto list = monomials_of_degree(3, 3);
  CHECK(list.size() == 10);
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(grevlex_compare(list[i - 1], list[i]) > 0);
  CHECK(monomials_up_to_degree(2, 3).size() == 10);
}

TEST_CASE("gauss_norm examples") {
  const auto f = P("4*x0 + 6*x1", 2);
  CHECK(gauss_norm(P("x0 + x1", 2), kTwo).is_zero());
  CHECK(gauss_norm(P("x0 + x1", 2), Place::infinity()).is_zero());
  CHECK(gauss_norm(f, kTwo) == LogValue::prime_multiple(2, -1));
  CHECK(std::fabs(gauss_norm(f, Place::infinity()).total().to_double() - std::log(6.0)) < 1e-14);
  CHECK_THROWS_AS(gauss_norm(Polynomial(2), kTwo), DomainError);
}

TEST_CASE("support_size examples") {
  CHECK(support_size(P("x0^3", 2)) == 1);
  CHECK(support_size(P("(x0 + x1)^2", 2)) == 3);
  CHECK(support_size(P("4*x0 + 6*x1", 2)) == 2);
  CHECK_THROWS_AS(support_size(Polynomial(2)), DomainError);
}

TEST_CASE("dehomogenize examples") {
  CHECK(dehomogenize(F("x0*x1", 2), 0) == parse_polynomial("u0", affine_names(1)));
  CHECK(dehomogenize(F("x0^2", 2), 0) == Polynomial::constant(1, 1));
  CHECK(dehomogenize(F("x0^2 + x1*x2", 3), 2) == parse_polynomial("u0^2 + u1", affine_names(2)));
  CHECK_THROWS_AS(dehomogenize(F("x0", 2), 2), DomainError);
}

TEST_CASE("Gauss's lemma at finite places, submultiplicativity at infinity") {
  Gen gen(53);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.poly(2, 3, 40), q = gen.poly(2, 3, 40);
    for (long prime : {2, 3, 5}) {
      const Place v = Place::finite(prime);
      CHECK(gauss_norm(p * q, v) == gauss_norm(p, v) + gauss_norm(q, v));
    }
    const double lhs = gauss_norm(p * q, Place::infinity()).total().to_double();
    const double rhs = (gauss_norm(p, Place::infinity()) + gauss_norm(q, Place::infinity())).total().to_double() +
                       std::log(static_cast<double>(std::min(support_size(p), support_size(q))));
    CHECK(lhs <= rhs + 1e-12);
  }
}

TEST_CASE("dehomogenization is multiplicative") {
  Gen gen(59);
  for (int i = 0; i < 100; ++i) {
    const auto f = gen.form(3, static_cast<unsigned>(gen.integer(0, 3)));
    const auto g = gen.form(3, static_cast<unsigned>(gen.integer(0, 3)));
    for (std::size_t chart = 0; chart < 3; ++chart) {
      CHECK(dehomogenize(f * g, chart) == dehomogenize(f, chart) * dehomogenize(g, chart));
    }
  }
}

TEST_CASE("forms") {
  CHECK_THROWS_AS(Form(P("x0 + 1", 2), 1), DomainError);
  CHECK_THROWS_AS(Form(Polynomial(2)), DomainError);
  const Form f(P("x0*x1", 2));
  CHECK(f.degree() == 2);
  CHECK((f + F("x0^2", 2)).degree() == 2);
  CHECK_THROWS_AS(f + F("x0", 2), DomainError);
  CHECK(Form::constant(3, 5).degree() == 0);
}

TEST_CASE("infer_variables and split_list") {
  const std::vector<std::string> texts{"x0*x2", "x1"};
  CHECK(infer_variables(texts) == std::vector<std::string>{"x0", "x1", "x2"});
  const std::vector<std::string> affine{"u1 - 1"};
  CHECK(infer_variables(affine) == std::vector<std::string>{"u0", "u1"});
  const std::vector<std::string> named{"w + u", "u*w - 1"};
  CHECK(infer_variables(named) == std::vector<std::string>{"u", "w"});
  CHECK(split_list("(u, 1-u)") == std::vector<std::string>{"u", "1-u"});
  CHECK(split_list("[x0^2, (x0 + x1)*x1]") == std::vector<std::string>{"x0^2", "(x0 + x1)*x1"});
}
