#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "locweil/real.hpp"

namespace locweil {

/// A value of log|.|_v split into an exact part, sum of c_p * log p with
/// rational c_p, and an archimedean real part carried at a fixed precision.
///
/// Non-archimedean places only ever produce exact parts, so comparisons and
/// sums of their values never round.
class LogValue {
 public:
  explicit LogValue(int precision_bits = kDefaultPrecision);

  static LogValue prime_multiple(const mpz_class& prime, const mpq_class& coefficient,
                                 int precision_bits = kDefaultPrecision);
  static LogValue archimedean(Real value);

  const std::map<mpz_class, mpq_class>& exact() const { return exact_; }
  const Real& arch() const { return arch_; }
  int precision() const { return precision_; }
  bool has_arch() const { return !arch_.is_zero(); }
  bool is_zero() const { return exact_.empty() && arch_.is_zero(); }

  /// Coefficient of log p in the exact part (zero when absent).
  mpq_class coefficient(const mpz_class& prime) const;

  /// sum c_p log p + arch, evaluated at this value's precision.
  Real total() const;

  LogValue operator-() const;
  LogValue& operator+=(const LogValue& rhs);
  LogValue& operator-=(const LogValue& rhs);
  friend LogValue operator+(LogValue lhs, const LogValue& rhs) { return lhs += rhs; }
  friend LogValue operator-(LogValue lhs, const LogValue& rhs) { return lhs -= rhs; }
  LogValue scaled(const mpq_class& factor) const;

  /// Exact when the difference has no archimedean part and at most one prime;
  /// otherwise decided on the total at working precision.
  friend int compare(const LogValue& a, const LogValue& b);
  friend bool operator==(const LogValue& a, const LogValue& b);

  /// "1 * log 2", "0.4054651081081643819780131155~", "1/2 * log 3 - 0.69~" or "0".
  std::string render() const;

 private:
  void normalize();

  std::map<mpz_class, mpq_class> exact_;
  Real arch_;
  int precision_;
};

LogValue max(const LogValue& a, const LogValue& b);
LogValue min(const LogValue& a, const LogValue& b);
/// max(0, x)
LogValue log_plus(const LogValue& x);
LogValue abs(const LogValue& x);

}  // namespace locweil
