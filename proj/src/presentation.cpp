#include "locweil/presentation.hpp"

#include <algorithm>

#include "locweil/errors.hpp"

namespace locweil {

std::string to_string(GenerationStatus s) {
  switch (s) {
    case GenerationStatus::verified: return "verified";
    case GenerationStatus::unverified: return "unverified";
    case GenerationStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

GenerationStatus parse_generation_status(const std::string& text) {
  if (text == "verified") return GenerationStatus::verified;
  if (text == "unverified") return GenerationStatus::unverified;
  if (text == "inconclusive") return GenerationStatus::inconclusive;
  throw ParseError("unknown generation status \"" + text + "\"");
}

Field Divisor::field() const { return common_field(numerator.poly().field(), denominator.poly().field()); }

bool section_less(const Form& a, const Form& b) {
  const auto& ta = a.poly().terms();
  const auto& tb = b.poly().terms();
  auto ia = ta.begin();
  auto ib = tb.begin();
  for (; ia != ta.end() && ib != tb.end(); ++ia, ++ib) {
    if (int c = grevlex_compare(ia->first, ib->first); c != 0) return c > 0;
    if (auto c = ia->second <=> ib->second; c != 0) return c < 0;
  }
  return ia == ta.end() && ib != tb.end();
}

namespace {

void check_list(const std::vector<Form>& list, const char* name, std::size_t num_vars) {
  if (list.empty()) throw DomainError(std::string(name) + "-section list is empty");
  for (const auto& f : list) {
    if (f.is_zero()) throw DomainError(std::string("zero section in the ") + name + "-list");
    if (f.degree() != list.front().degree()) throw DomainError(std::string(name) + "-sections of mixed degrees");
    if (f.num_vars() != num_vars) throw DomainError(std::string(name) + "-section on a different projective space");
  }
}

GenerationStatus combine(GenerationStatus a, GenerationStatus b) {
  if (a == GenerationStatus::verified && b == GenerationStatus::verified) return GenerationStatus::verified;
  if (a == GenerationStatus::inconclusive || b == GenerationStatus::inconclusive) return GenerationStatus::inconclusive;
  return GenerationStatus::unverified;
}

std::vector<Form> products(const std::vector<Form>& a, const std::vector<Form>& b) {
  std::vector<Form> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

std::vector<Form> all_monomial_forms(std::size_t num_vars, unsigned degree) {
  std::vector<Form> out;
  for (const auto& m : monomials_of_degree(num_vars, degree)) {
    out.emplace_back(Polynomial::term(m, FieldElement(1)), static_cast<int>(degree));
  }
  return out;
}

}  // namespace

Presentation::Presentation(Divisor divisor, std::vector<Form> s, std::vector<Form> t, GenerationStatus s_status,
                           GenerationStatus t_status)
    : Presentation(std::move(divisor), std::move(s), std::move(t), s_status, t_status, true) {}

Presentation Presentation::unchecked(Divisor divisor, std::vector<Form> s, std::vector<Form> t,
                                     GenerationStatus s_status, GenerationStatus t_status) {
  return Presentation(std::move(divisor), std::move(s), std::move(t), s_status, t_status, false);
}

Presentation::Presentation(Divisor divisor, std::vector<Form> s, std::vector<Form> t, GenerationStatus s_status,
                           GenerationStatus t_status, bool check_degrees)
    : divisor_(std::move(divisor)), s_(std::move(s)), t_(std::move(t)), s_status_(s_status), t_status_(t_status) {
  if (divisor_.numerator.is_zero() || divisor_.denominator.is_zero()) {
    throw DomainError("divisor numerator and denominator must be nonzero forms");
  }
  const std::size_t nv = divisor_.numerator.num_vars();
  if (nv < 2) throw DomainError("presentations live on P^n with n >= 1");
  if (divisor_.denominator.num_vars() != nv) throw DomainError("divisor forms on different projective spaces");
  check_list(s_, "s", nv);
  check_list(t_, "t", nv);
  if (check_degrees && !degrees_compatible()) {
    throw DomainError("degree mismatch: a_L - a_M = " + std::to_string(deg_L() - deg_M()) +
                      " but deg F - deg G = " + std::to_string(divisor_.degree()));
  }
  std::sort(s_.begin(), s_.end(), section_less);
  std::sort(t_.begin(), t_.end(), section_less);
  (void)field();
}

Field Presentation::field() const {
  Field f = divisor_.field();
  for (const auto& x : s_) f = common_field(f, x.poly().field());
  for (const auto& x : t_) f = common_field(f, x.poly().field());
  return f;
}

Presentation Presentation::with_status(GenerationStatus s_status, GenerationStatus t_status) const {
  Presentation out(*this);
  out.s_status_ = s_status;
  out.t_status_ = t_status;
  return out;
}

Presentation make_hypersurface_presentation(const Form& f) {
  if (f.is_zero()) throw DomainError("hypersurface presentation of the zero form");
  if (f.degree() < 1) throw DomainError("hypersurface presentation needs degree >= 1");
  return make_monomial_presentation(f, Form::constant(f.num_vars(), FieldElement(1)), 0);
}

Presentation make_monomial_presentation(const Form& f, const Form& g, unsigned twist) {
  if (f.is_zero() || g.is_zero()) throw DomainError("divisor forms must be nonzero");
  const int a_l = f.degree() - g.degree() + static_cast<int>(twist);
  if (a_l < 0) throw DomainError("twist too small: the s-bundle would have negative degree");
  const std::size_t nv = f.num_vars();
  return Presentation(Divisor{f, g}, all_monomial_forms(nv, static_cast<unsigned>(a_l)),
                      all_monomial_forms(nv, twist), GenerationStatus::verified, GenerationStatus::verified);
}

Presentation make_principal_presentation(const Form& f, const Form& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("principal presentation of a zero form");
  if (f.degree() != g.degree()) {
    throw DomainError("principal presentation needs equal degrees, got " + std::to_string(f.degree()) + " and " +
                      std::to_string(g.degree()));
  }
  const Form one = Form::constant(f.num_vars(), FieldElement(1));
  return Presentation(Divisor{f, g}, {one}, {one}, GenerationStatus::verified, GenerationStatus::verified);
}

Presentation sum_presentations(const Presentation& a, const Presentation& b) {
  if (a.num_vars() != b.num_vars()) throw DomainError("sum of presentations on different projective spaces");
  common_field(a.field(), b.field());
  Divisor d{a.divisor().numerator * b.divisor().numerator, a.divisor().denominator * b.divisor().denominator};
  return Presentation(std::move(d), products(a.s(), b.s()), products(a.t(), b.t()),
                      combine(a.s_status(), b.s_status()), combine(a.t_status(), b.t_status()));
}

std::optional<FieldElement> divisor_ratio(const Divisor& a, const Divisor& b) {
  const Form lhs = a.numerator * b.denominator;
  const Form rhs = b.numerator * a.denominator;
  if (lhs.num_vars() != rhs.num_vars() || lhs.degree() != rhs.degree()) return std::nullopt;
  const Monomial& m = rhs.poly().leading_monomial();
  const FieldElement alpha = lhs.poly().coefficient(m) / rhs.poly().leading_coefficient();
  if (alpha.is_zero()) return std::nullopt;
  if (!(lhs.poly() - rhs.poly().scaled(alpha)).is_zero()) return std::nullopt;
  return alpha;
}

DifferencePresentation difference_presentation(const Presentation& a, const Presentation& b) {
  if (a.num_vars() != b.num_vars()) throw DomainError("presentations on different projective spaces");
  auto alpha = divisor_ratio(a.divisor(), b.divisor());
  if (!alpha) throw DomainError("presentations of different divisors");
  const std::size_t nv = a.num_vars();
  Divisor zero{Form::constant(nv, *alpha), Form::constant(nv, FieldElement(1))};
  Presentation p(std::move(zero), products(a.s(), b.t()), products(a.t(), b.s()),
                 combine(a.s_status(), b.t_status()), combine(a.t_status(), b.s_status()));
  return {std::move(p), *alpha};
}

ValidationReport validate(const Presentation& p, const ValidationOptions& options) {
  ValidationReport report;
  report.expected_degree = p.divisor().degree();
  report.presented_degree = p.deg_L() - p.deg_M();
  report.degree_compatible = report.expected_degree == report.presented_degree;
  report.s_report = generation_check(p.s(), options.generation_cap, options.limits);
  report.t_report = generation_check(p.t(), options.generation_cap, options.limits);
  return report;
}

Presentation with_checked_generation(const Presentation& p, const ValidationOptions& options) {
  auto status = [&options](const std::vector<Form>& list, GenerationStatus current) {
    if (current == GenerationStatus::verified) return current;
    return generation_check(list, options.generation_cap, options.limits).generated()
               ? GenerationStatus::verified
               : GenerationStatus::inconclusive;
  };
  return p.with_status(status(p.s(), p.s_status()), status(p.t(), p.t_status()));
}

}  // namespace locweil
