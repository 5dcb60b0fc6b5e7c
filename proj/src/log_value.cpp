#include "locweil/log_value.hpp"

#include <algorithm>

namespace locweil {

LogValue::LogValue(int precision_bits) : arch_(precision_bits), precision_(precision_bits) {}

LogValue LogValue::prime_multiple(const mpz_class& prime, const mpq_class& coefficient,
                                  int precision_bits) {
  LogValue out(precision_bits);
  if (coefficient != 0) {
    mpq_class c(coefficient);
    c.canonicalize();
    out.exact_.emplace(prime, std::move(c));
  }
  return out;
}

LogValue LogValue::archimedean(Real value) {
  LogValue out(value.precision());
  out.arch_ = std::move(value);
  return out;
}

mpq_class LogValue::coefficient(const mpz_class& prime) const {
  auto it = exact_.find(prime);
  return it == exact_.end() ? mpq_class(0) : it->second;
}

Real LogValue::total() const {
  const int work = precision_ + 16;
  Real sum(work);
  for (const auto& [prime, c] : exact_) {
    sum += Real(c, work) * log(Real(prime, work));
  }
  sum += arch_;
  mpfr_prec_round(sum.get(), precision_, MPFR_RNDN);
  return sum;
}

void LogValue::normalize() {
  std::erase_if(exact_, [](const auto& entry) { return entry.second == 0; });
}

LogValue LogValue::operator-() const {
  LogValue out(*this);
  for (auto& [prime, c] : out.exact_) c = -c;
  out.arch_ = -out.arch_;
  return out;
}

LogValue& LogValue::operator+=(const LogValue& rhs) {
  for (const auto& [prime, c] : rhs.exact_) exact_[prime] += c;
  arch_ += rhs.arch_;
  precision_ = std::max(precision_, rhs.precision_);
  normalize();
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& rhs) { return *this += -rhs; }

LogValue LogValue::scaled(const mpq_class& factor) const {
  LogValue out(*this);
  for (auto& [prime, c] : out.exact_) c *= factor;
  out.arch_ *= Real(factor, precision_);
  out.normalize();
  return out;
}

int compare(const LogValue& a, const LogValue& b) {
  LogValue diff = a - b;
  if (!diff.has_arch()) {
    if (diff.exact_.empty()) return 0;
    if (diff.exact_.size() == 1) return sgn(diff.exact_.begin()->second);
  }
  return diff.total().sign();
}

bool operator==(const LogValue& a, const LogValue& b) {
  return a.exact_ == b.exact_ && a.arch_ == b.arch_;
}

std::string LogValue::render() const {
  std::string out;
  auto append = [&out](int sign, const std::string& magnitude) {
    if (out.empty()) {
      out = sign < 0 ? "-" + magnitude : magnitude;
    } else {
      out += sign < 0 ? " - " : " + ";
      out += magnitude;
    }
  };
  for (const auto& [prime, c] : exact_) {
    append(sgn(c), mpq_class(abs(c)).get_str() + " * log " + prime.get_str());
  }
  if (has_arch()) append(arch_.sign(), abs(arch_).to_string() + "~");
  return out.empty() ? "0" : out;
}

LogValue max(const LogValue& a, const LogValue& b) { return compare(a, b) >= 0 ? a : b; }
LogValue min(const LogValue& a, const LogValue& b) { return compare(a, b) <= 0 ? a : b; }

LogValue log_plus(const LogValue& x) {
  LogValue zero(x.precision());
  return compare(x, zero) > 0 ? x : zero;
}

LogValue abs(const LogValue& x) {
  LogValue zero(x.precision());
  return compare(x, zero) >= 0 ? x : -x;
}

}  // namespace locweil
