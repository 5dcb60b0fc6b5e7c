#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locweil/errors.hpp"
#include "locweil/linsolve.hpp"
#include "locweil/nullstellensatz.hpp"
#include "locweil/parse.hpp"
#include "support.hpp"

using namespace locweil;
using testing_support::Gen;

namespace {

const std::vector<std::string> kU{"u"};

Polynomial U(std::string_view text) { return parse_polynomial(text, kU); }

std::vector<Polynomial> family(std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(U(t));
  return out;
}

Certificate expect_certificate(const std::vector<Polynomial>& f, unsigned cap) {
  auto r = find_certificate(f, cap);
  REQUIRE(std::holds_alternative<Certificate>(r));
  return std::get<Certificate>(r);
}

}  // namespace

TEST_CASE("solve_linear_exact examples") {
  LinearSystem id(2, 2);
  id.at(0, 0) = 1;
  id.at(1, 1) = 1;
  id.rhs(0) = 1;
  auto x = solve_linear_exact(id);
  REQUIRE(x);
  CHECK(*x == std::vector<FieldElement>{1, 0});

  LinearSystem two(1, 1);
  two.at(0, 0) = 2;
  two.rhs(0) = 1;
  x = solve_linear_exact(two);
  REQUIRE(x);
  CHECK((*x)[0] == FieldElement(Rational(1, 2)));

  LinearSystem bad(1, 1);
  bad.rhs(0) = 1;
  CHECK(!solve_linear_exact(bad));
}

TEST_CASE("solve_linear_exact against substitution on random systems") {
  Gen gen(73);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 6));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 6));
    LinearSystem s(rows, cols);
    std::vector<FieldElement> planted;
    for (std::size_t c = 0; c < cols; ++c) planted.emplace_back(gen.rational_or_zero(9));
    for (std::size_t r = 0; r < rows; ++r) {
      FieldElement acc(0);
      for (std::size_t c = 0; c < cols; ++c) {
        s.at(r, c) = gen.coin() ? FieldElement(gen.rational_or_zero(7)) : FieldElement(0);
        acc += s.at(r, c) * planted[c];
      }
      s.rhs(r) = acc;
    }
    const auto x = solve_linear_exact(s);
    REQUIRE(x);
    for (std::size_t r = 0; r < rows; ++r) {
      FieldElement acc(0);
      for (std::size_t c = 0; c < cols; ++c) acc += s.at(r, c) * (*x)[c];
      CHECK(acc == s.rhs(r));
    }
  }
  // Quadratic coefficients take the field path.
  LinearSystem q(2, 2);
  q.at(0, 0) = FieldElement::sqrt(2);
  q.at(0, 1) = 1;
  q.at(1, 0) = 1;
  q.at(1, 1) = FieldElement::sqrt(2);
  q.rhs(0) = 1;
  q.rhs(1) = 0;
  const auto y = solve_linear_exact(q);
  REQUIRE(y);
  CHECK(q.at(0, 0) * (*y)[0] + q.at(0, 1) * (*y)[1] == FieldElement(1));
  CHECK(q.at(1, 0) * (*y)[0] + q.at(1, 1) * (*y)[1] == FieldElement(0));
}

TEST_CASE("find_certificate examples") {
  auto c = expect_certificate(family({"u", "1 - u"}), 2);
  CHECK(c.pairs[0].g == U("1"));
  CHECK(c.pairs[1].g == U("1"));
  CHECK(c.degree_bound == 1);

  c = expect_certificate(family({"u^2", "1 - u"}), 4);
  CHECK(c.pairs[0].g == U("1"));
  CHECK(c.pairs[1].g == U("1 + u"));
  CHECK(c.degree_bound == 2);

  auto none = find_certificate(family({"u", "u^2"}), 6);
  REQUIRE(std::holds_alternative<NoCertificateAtCap>(none));
  CHECK(std::get<NoCertificateAtCap>(none).cap == 6);

  CHECK_THROWS_AS(find_certificate(std::vector<Polynomial>{U("u"), Polynomial(1)}, 3), DomainError);
  CHECK_THROWS_AS(find_certificate(family({"u^3", "1 - u"}), 2), DomainError);
  CHECK(default_certificate_cap(family({"u^2", "1 - u"})) == 4);
}

TEST_CASE("verify_certificate examples") {
  auto c = expect_certificate(family({"u^2", "1 - u"}), 4);
  CHECK(verify_certificate(c));
  Certificate tampered = c;
  tampered.pairs[0].g += U("u");
  CHECK(!verify_certificate(tampered));
  Certificate wrong_degree = c;
  wrong_degree.degree_bound = 7;
  CHECK(!verify_certificate(wrong_degree));
  Certificate unit{{{U("1"), U("1")}}, 0};
  CHECK(verify_certificate(unit));
}

TEST_CASE("certificate_size examples") {
  const Certificate ones{{{U("u"), U("1")}, {U("1 - u"), U("1")}}, 1};
  CHECK(certificate_size(ones, Place::finite(3)).is_zero());
  CHECK(certificate_size(ones, Place::infinity()).is_zero());
  const Certificate c2{{{U("u^2"), U("1")}, {U("1 - u"), U("1 + u")}}, 2};
  CHECK(certificate_size(c2, Place::infinity()).is_zero());
  CHECK(certificate_size(c2, Place::finite(2)).is_zero());
  const Certificate c3{{{U("2"), U("1/2")}, {U("u"), U("4*u")}}, 2};
  CHECK(certificate_size(c3, Place::finite(2)) == LogValue::prime_multiple(2, 1));
}

TEST_CASE("soundness, minimality and determinism on random families") {
  Gen gen(79);
  const auto names = affine_names(2);
  int found = 0;
  for (int i = 0; i < 40; ++i) {
    // Random families with a unit combination planted: f_last = 1 - sum of a_k f_k.
    std::vector<Polynomial> f;
    const int count = static_cast<int>(gen.integer(1, 2));
    Polynomial combo(2);
    for (int k = 0; k < count; ++k) {
      f.push_back(gen.poly(2, 2, 4, 0.6));
      combo += f.back() * gen.poly(2, 1, 3, 0.6);
    }
    f.push_back(Polynomial::constant(2, 1) - combo);
    if (f.back().is_zero()) continue;
    const unsigned cap = default_certificate_cap(f) + 2;
    auto r = find_certificate(f, cap);
    REQUIRE(std::holds_alternative<Certificate>(r));
    const auto& c = std::get<Certificate>(r);
    ++found;
    CHECK(verify_certificate(c));
    CHECK(c.degree_bound <= static_cast<int>(cap));
    // Nothing at a lower target degree: the system one step down is inconsistent.
    int max_f = 0;
    for (const auto& p : f) max_f = std::max(max_f, p.degree());
    if (c.degree_bound > max_f) CHECK(!solve_linear_exact(certificate_system(f, c.degree_bound - 1)));
    auto again = find_certificate(f, cap);
    REQUIRE(std::holds_alternative<Certificate>(again));
    for (std::size_t k = 0; k < c.pairs.size(); ++k) CHECK(std::get<Certificate>(again).pairs[k].g == c.pairs[k].g);
  }
  CHECK(found > 30);
}

TEST_CASE("planted common zeros never yield a certificate") {
  Gen gen(83);
  for (int i = 0; i < 10; ++i) {
    // Polynomials vanishing at (a, b): p(u0 - a, u1 - b) with zero constant term.
    const Rational a = gen.rational_or_zero(3), b = gen.rational_or_zero(3);
    std::vector<Polynomial> f;
    for (int k = 0; k < 3; ++k) {
      Polynomial p = gen.poly(2, 2, 4, 0.6);
      const std::vector<FieldElement> zero{a, b};
      p -= Polynomial::constant(2, p.evaluate(zero));
      if (!p.is_zero()) f.push_back(p);
    }
    if (f.empty()) continue;
    for (const auto& p : f) CHECK(p.evaluate(std::vector<FieldElement>{a, b}).is_zero());
    int max_f = 0;
    for (const auto& p : f) max_f = std::max(max_f, p.degree());
    for (unsigned cap = static_cast<unsigned>(max_f); cap <= 6; ++cap) {
      CHECK(std::holds_alternative<NoCertificateAtCap>(find_certificate(f, cap)));
    }
  }
}

TEST_CASE("certificates over Q(sqrt 2)") {
  const std::vector<std::string> names{"u"};
  const std::vector<Polynomial> f{parse_polynomial("u - sqrt(2)", names), parse_polynomial("u + sqrt(2)", names)};
  const auto c = expect_certificate(f, 3);
  CHECK(verify_certificate(c));
}
