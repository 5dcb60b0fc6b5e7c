#include "locweil/poly.hpp"

#include <algorithm>
#include <numeric>

#include "locweil/errors.hpp"

namespace locweil {

// --- Monomial ----------------------------------------------------------------

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  Monomial m(num_vars);
  m.exponents_.at(index) = power;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0u); }

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] += b.exponents_[i];
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] -= b.exponents_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) {
    out.exponents_[i] = std::max(a.exponents_[i], b.exponents_[i]);
  }
  return out;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// --- Polynomial ----------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t num_vars, const FieldElement& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  return term(Monomial::variable(num_vars, index), FieldElement(1));
}

Polynomial Polynomial::term(const Monomial& m, const FieldElement& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

int Polynomial::degree() const {
  // Grevlex is degree-compatible, so the leading monomial has maximal degree.
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Field Polynomial::field() const {
  Field f;
  for (const auto& [m, c] : terms_) f = common_field(f, c.field());
  return f;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const FieldElement& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement() : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (m.num_vars() != num_vars_) throw DomainError("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw DomainError("polynomials in " + std::to_string(num_vars_) + " and " +
                      std::to_string(other.num_vars_) + " variables");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_ring(rhs);
  Polynomial out(lhs.num_vars_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out(num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& mono, const FieldElement& c) const {
  Polynomial out(num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m * mono, coeff * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(num_vars_, FieldElement(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coefficient().inverse());
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars_) {
    throw DomainError("evaluation point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                      std::to_string(num_vars_) + " variables");
  }
  std::vector<std::vector<FieldElement>> powers(num_vars_);
  auto power_of = [&](std::size_t var, Exponent e) -> const FieldElement& {
    auto& table = powers[var];
    if (table.empty()) table.emplace_back(1);
    while (table.size() <= e) table.push_back(table.back() * point[var]);
    return table[e];
  };
  FieldElement sum;
  for (const auto& [m, c] : terms_) {
    FieldElement value = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m[i] != 0) value *= power_of(i, m[i]);
    }
    sum += value;
  }
  return sum;
}

namespace {

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    FieldElement magnitude = c;
    if ((c.is_rational() && c.a() < 0) || (c.a() == 0 && c.b() < 0)) {
      negative = true;
      magnitude = -c;
    }
    std::string coeff = magnitude.to_string();
    if (!magnitude.is_rational() && magnitude.a() != 0) coeff = "(" + coeff + ")";
    std::string piece;
    if (m.is_one()) {
      piece = coeff;
    } else if (magnitude.is_one()) {
      piece = monomial_string(m, names);
    } else {
      piece = coeff + "*" + monomial_string(m, names);
    }
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars_; ++i) names.push_back("x" + std::to_string(i));
  return to_string(names);
}

// --- Form ----------------------------------------------------------------------

Form::Form(Polynomial p, int degree) : poly_(std::move(p)), degree_(degree) {
  if (degree_ < 0) throw DomainError("form degree must be nonnegative");
  for (const auto& [m, c] : poly_.terms()) {
    if (static_cast<int>(m.degree()) != degree_) {
      throw DomainError("polynomial is not homogeneous of degree " + std::to_string(degree_));
    }
  }
}

Form::Form(Polynomial p) : poly_(std::move(p)) {
  if (poly_.is_zero()) throw DomainError("the zero form has no degree");
  if (!poly_.is_homogeneous()) throw DomainError("polynomial is not homogeneous");
  degree_ = poly_.degree();
}

Form operator+(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) throw DomainError("adding forms of different degrees");
  return Form(a.poly_ + b.poly_, a.degree_);
}

Form operator-(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) throw DomainError("subtracting forms of different degrees");
  return Form(a.poly_ - b.poly_, a.degree_);
}

Polynomial dehomogenize(const Form& f, std::size_t chart) {
  const std::size_t n1 = f.num_vars();
  if (chart >= n1) throw DomainError("chart index out of range");
  Polynomial out(n1 - 1);
  for (const auto& [m, c] : f.poly().terms()) {
    std::vector<Exponent> e;
    e.reserve(n1 - 1);
    for (std::size_t i = 0; i < n1; ++i) {
      if (i != chart) e.push_back(m[i]);
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

LogValue gauss_norm(const Polynomial& p, const PlaceExtension& w, int precision_bits) {
  if (p.is_zero()) throw DomainError("Gauss norm of the zero polynomial");
  // Select the coefficient of largest absolute value exactly, then take one log.
  const FieldElement* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (best == nullptr || compare_abs(c, *best, w) > 0) best = &c;
  }
  return extend_abs(*best, w, precision_bits);
}

std::size_t support_size(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("support of the zero polynomial");
  return p.terms().size();
}

namespace {

void enumerate(std::size_t num_vars, unsigned degree, std::size_t index, std::vector<Exponent>& current,
               std::vector<Monomial>& out) {
  if (index + 1 == num_vars) {
    current[index] = degree;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    current[index] = e;
    enumerate(num_vars, degree - e, index + 1, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> current(num_vars, 0);
  enumerate(num_vars, degree, 0, current, out);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = max_degree + 1; d-- > 0;) {
    auto layer = monomials_of_degree(num_vars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace locweil
