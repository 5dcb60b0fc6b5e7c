#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locweil/factor.hpp"
#include "locweil/log_value.hpp"

namespace locweil {

using Rational = mpq_class;

/// num/den in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

bool is_squarefree(long d);

/// Coefficient field: Q (d == 0) or Q(sqrt d) with d squarefree, d != 0, 1.
struct Field {
  long d = 0;

  bool is_rational() const { return d == 0; }
  /// "Q" or "Q(sqrt d)"
  std::string to_string() const;
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;
};

/// Join of two coefficient fields; Q coerces into Q(sqrt d).
/// Throws DomainError for two different quadratic fields.
Field common_field(Field a, Field b);

/// a + b sqrt(d). Rationals carry d == 0 and b == 0.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational a, Rational b, long d);

  static FieldElement sqrt(long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }
  Field field() const { return Field{d_}; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  /// a^2 - d b^2
  Rational norm() const;
  FieldElement conjugate() const;
  FieldElement inverse() const;
  /// Same value tagged with field `f` (Q elements only gain a tag).
  FieldElement in_field(Field f) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  /// Values are equal; the Q/Q(sqrt d) tag is ignored when b == 0.
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  /// Total order on (a, b) used for canonical sorting.
  friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y);

  /// Rendering in the polynomial coefficient grammar, e.g. "3", "-1/2", "1 + 2*sqrt(-1)".
  std::string to_string() const;

 private:
  void join(const FieldElement& rhs);

  Rational a_;
  Rational b_;
  long d_ = 0;
};

class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws DomainError unless p is prime.
  static Place finite(const Integer& p);
  /// "inf" or "p=<prime>"
  static Place parse(std::string_view text);

  bool is_archimedean() const { return prime_ == 0; }
  const Integer& prime() const { return prime_; }
  /// Exponent of the support-size factor: 1 archimedean, 0 otherwise.
  int delta() const { return is_archimedean() ? 1 : 0; }
  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;
  friend bool operator<(const Place& x, const Place& y) { return x.prime_ < y.prime_; }

 private:
  Place() = default;
  Integer prime_ = 0;
};

enum class SplittingType { split, inert, ramified };
enum class SplitChoice { plus, minus };

std::string to_string(SplittingType t);

/// Behaviour of the prime p in Q(sqrt d).
SplittingType splitting_type(const Integer& p, long d);

/// A place w of Q(sqrt d) above a place v of Q. Over Q itself (d == 0) this is v.
///
/// For split primes the plus choice embeds sqrt d as the p-adic root congruent to
/// the smaller residue in [1, p-1] (p odd) or to 1 mod 4 (p = 2); minus is its
/// negative. At infinity with d > 0 the plus choice is the embedding sqrt d > 0;
/// for d < 0 the complex place is unique.
class PlaceExtension {
 public:
  PlaceExtension(Place base);  // NOLINT(google-explicit-constructor)
  PlaceExtension(Place base, long d, SplitChoice choice = SplitChoice::plus);

  const Place& base() const { return base_; }
  Field field() const { return Field{d_}; }
  int local_degree() const { return local_degree_; }
  SplitChoice split_choice() const { return choice_; }
  bool is_archimedean() const { return base_.is_archimedean(); }
  int delta() const { return base_.delta(); }
  std::string to_string() const;

  friend bool operator==(const PlaceExtension&, const PlaceExtension&) = default;

 private:
  Place base_;
  long d_ = 0;
  int local_degree_ = 1;
  SplitChoice choice_ = SplitChoice::plus;
};

/// Exponent of p in a nonzero rational (negative for denominators).
long ord_p(const Rational& value, const Integer& p);

/// log|value|_v for the normalized absolute value at v.
LogValue log_abs(const Rational& value, const Place& v, int precision_bits = kDefaultPrecision);

/// log|value|_w with |.|_w = |N_{F_w/Q_v}(.)|_v^{1/[F_w:Q_v]}.
LogValue extend_abs(const FieldElement& value, const PlaceExtension& w,
                    int precision_bits = kDefaultPrecision);

/// -log|value|_w / log p at a finite place; exact, possibly half-integral.
Rational valuation(const FieldElement& value, const PlaceExtension& w);

/// Sign of |x|_w - |y|_w, decided exactly for every place (zero is smallest).
int compare_abs(const FieldElement& x, const FieldElement& y, const PlaceExtension& w);

/// Sign of the real embedding of x chosen by w (archimedean, d > 0 or d == 0).
int embedded_sign(const FieldElement& x, const PlaceExtension& w);

/// p-adic root of x^2 = d modulo p^k selected by `choice` (p split in Q(sqrt d)).
Integer sqrt_mod_prime_power(const Integer& p, long d, unsigned k, SplitChoice choice);

struct ProductFormulaReport {
  bool holds = false;
  Rational value;
  std::vector<PrimePower> numerator;
  std::vector<PrimePower> denominator;
};

/// Checks |value| = prod_p p^{ord_p(value)} in exact integer arithmetic, which is
/// the statement sum_v log|value|_v = 0.
ProductFormulaReport product_formula_check(const Rational& value, const FactorLimits& limits = {});

/// The primes dividing some numerator or denominator of `values`, ascending.
std::vector<Place> relevant_finite_places(std::span<const Rational> values,
                                          const FactorLimits& limits = {});

}  // namespace locweil
