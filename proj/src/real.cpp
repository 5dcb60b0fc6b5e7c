#include "locweil/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "locweil/errors.hpp"

namespace locweil {

Real::Real(int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

void widen_to(mpfr_ptr target, mpfr_prec_t prec) {
  if (mpfr_get_prec(target) < prec) mpfr_prec_round(target, prec, MPFR_RNDN);
}

}  // namespace

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(value_, mpfr_get_prec(rhs.value_));
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(value_, mpfr_get_prec(rhs.value_));
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(value_, mpfr_get_prec(rhs.value_));
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real log_of(const mpq_class& positive, int precision_bits) {
  if (sgn(positive) <= 0) throw DomainError("log of a non-positive number");
  // Guard bits so that the subtraction does not eat the requested precision.
  const int work = precision_bits + 32;
  Real num(positive.get_num(), work);
  Real den(positive.get_den(), work);
  Real out = log(num) - log(den);
  mpfr_prec_round(out.get(), precision_bits, MPFR_RNDN);
  return out;
}

int decimal_digits(int precision_bits) {
  return std::max(1, static_cast<int>(std::floor(precision_bits * std::log10(2.0))));
}

std::string Real::to_string(int digits) const {
  if (is_zero()) return "0";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string Real::to_string() const { return to_string(decimal_digits(precision())); }

}  // namespace locweil
