#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "locweil/log_value.hpp"
#include "locweil/numfield.hpp"

namespace locweil {

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  std::size_t num_vars() const { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<Exponent>& exponents() const { return exponents_; }
  unsigned degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

/// Graded reverse lexicographic comparison: negative when a < b.
int grevlex_compare(const Monomial& a, const Monomial& b);

/// Orders terms so that the grevlex-leading monomial comes first.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// Sparse polynomial with FieldElement coefficients; no zero coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, FieldElement, GrevlexDescending>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const FieldElement& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial term(const Monomial& m, const FieldElement& c);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Smallest field containing every coefficient.
  Field field() const;

  const Monomial& leading_monomial() const;
  const FieldElement& leading_coefficient() const;
  FieldElement coefficient(const Monomial& m) const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const FieldElement& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  /// Rendering in the polynomial grammar using the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;
  /// Uses x0..xn.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void require_same_ring(const Polynomial& other) const;

  std::size_t num_vars_;
  Terms terms_;
};

/// A homogeneous polynomial of a fixed degree in n+1 variables (a section of O(d) on P^n).
/// The zero form is representable but rejected wherever a section is required.
class Form {
 public:
  Form() = default;
  /// Throws DomainError if `p` has a term of degree != `degree`.
  Form(Polynomial p, int degree);
  /// Nonzero homogeneous polynomial; the degree is read off.
  explicit Form(Polynomial p);

  static Form constant(std::size_t num_vars, const FieldElement& c) {
    return Form(Polynomial::constant(num_vars, c), 0);
  }

  const Polynomial& poly() const { return poly_; }
  int degree() const { return degree_; }
  std::size_t num_vars() const { return poly_.num_vars(); }
  /// n for a form on P^n.
  std::size_t ambient_dimension() const { return poly_.num_vars() - 1; }
  bool is_zero() const { return poly_.is_zero(); }

  FieldElement evaluate(std::span<const FieldElement> point) const { return poly_.evaluate(point); }
  Form scaled(const FieldElement& c) const { return Form(poly_.scaled(c), degree_); }
  std::string to_string() const { return poly_.to_string(); }

  friend Form operator*(const Form& a, const Form& b) { return Form(a.poly_ * b.poly_, a.degree_ + b.degree_); }
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend bool operator==(const Form&, const Form&) = default;

 private:
  Polynomial poly_;
  int degree_ = 0;
};

/// Sets x_chart = 1; the remaining variables keep their relative order.
Polynomial dehomogenize(const Form& f, std::size_t chart);

/// log max |coefficient|_w.
LogValue gauss_norm(const Polynomial& p, const PlaceExtension& w, int precision_bits = kDefaultPrecision);

/// Number of monomials with nonzero coefficient.
std::size_t support_size(const Polynomial& p);

/// All monomials of the given degree in `num_vars` variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// All monomials of degree <= `max_degree`, grevlex descending.
std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, unsigned max_degree);

}  // namespace locweil
