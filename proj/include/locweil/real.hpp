#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace locweil {

inline constexpr int kDefaultPrecision = 128;

/// Copyable RAII wrapper around an MPFR floating point value.
///
/// Binary operations round to the larger of the two operand precisions.
class Real {
 public:
  explicit Real(int precision_bits = kDefaultPrecision);
  Real(double value, int precision_bits);
  Real(const mpz_class& value, int precision_bits);
  Real(const mpq_class& value, int precision_bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Digits justified by the precision: floor(bits * log10 2).
  std::string to_string() const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

  friend Real log(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Real log(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);

/// Natural logarithm of a positive rational, computed as log(num) - log(den).
Real log_of(const mpq_class& positive, int precision_bits);

/// Significant decimal digits supported by `precision_bits`.
int decimal_digits(int precision_bits);

}  // namespace locweil
