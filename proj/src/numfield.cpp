#include "locweil/numfield.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "locweil/errors.hpp"

namespace locweil {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long m = static_cast<unsigned long>(d < 0 ? -d : d);
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

namespace {

void require_quadratic(long d) {
  if (d == 1 || !is_squarefree(d)) {
    throw DomainError("Q(sqrt " + std::to_string(d) + ") is not a quadratic field: d must be squarefree and != 0, 1");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Field::to_string() const {
  return d == 0 ? "Q" : "Q(sqrt " + std::to_string(d) + ")";
}

Field Field::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "Q") return Field{};
  const std::string prefix = "Q(sqrt";
  if (compact.rfind(prefix, 0) != 0 || compact.back() != ')') {
    throw ParseError("field must be \"Q\" or \"Q(sqrt <d>)\", got \"" + std::string(text) + "\"");
  }
  std::string inner = compact.substr(prefix.size(), compact.size() - prefix.size() - 1);
  if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
  char* end = nullptr;
  const long d = std::strtol(inner.c_str(), &end, 10);
  if (inner.empty() || *end != '\0') throw ParseError("bad field discriminant \"" + inner + "\"");
  require_quadratic(d);
  return Field{d};
}

Field common_field(Field a, Field b) {
  if (a.d == 0) return b;
  if (b.d == 0 || a.d == b.d) return a;
  throw DomainError("incompatible coefficient fields " + a.to_string() + " and " + b.to_string());
}

// --- FieldElement ---------------------------------------------------------

FieldElement::FieldElement(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0) {
    if (b_ != 0) throw DomainError("irrational part requires a quadratic field");
  } else {
    require_quadratic(d_);
  }
}

FieldElement FieldElement::sqrt(long d) { return FieldElement(0, 1, d); }

Rational FieldElement::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

FieldElement FieldElement::conjugate() const {
  FieldElement out(*this);
  out.b_ = -out.b_;
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  const Rational n = norm();
  FieldElement out(*this);
  out.a_ = a_ / n;
  out.b_ = -b_ / n;
  return out;
}

FieldElement FieldElement::in_field(Field f) const {
  FieldElement out(*this);
  out.d_ = common_field(field(), f).d;
  return out;
}

void FieldElement::join(const FieldElement& rhs) { d_ = common_field(field(), rhs.field()).d; }

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  join(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  join(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  join(rhs);
  if (b_ == 0 && rhs.b_ == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  Rational a = a_ * rhs.a_ + Rational(d_) * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  if (rhs.b_ == 0) {
    if (rhs.a_ == 0) throw DomainError("division by zero");
    join(rhs);
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  return *this *= rhs.inverse();
}

std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
  if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string irr;
  if (b_ == 1) {
    irr = root;
  } else if (b_ == -1) {
    irr = "-" + root;
  } else {
    irr = b_.get_str() + "*" + root;
  }
  if (a_ == 0) return irr;
  if (irr.front() == '-') return a_.get_str() + " - " + irr.substr(1);
  return a_.get_str() + " + " + irr;
}

// --- places -----------------------------------------------------------------

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  Place out;
  out.prime_ = p;
  return out;
}

Place Place::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity") return infinity();
  if (text.rfind("p=", 0) == 0) {
    Integer p;
    const std::string digits(trim(text.substr(2)));
    if (digits.empty() || p.set_str(digits, 10) != 0) throw ParseError("bad prime in place \"" + std::string(text) + "\"");
    return finite(p);
  }
  throw ParseError("place must be \"inf\" or \"p=<prime>\", got \"" + std::string(text) + "\"");
}

std::string Place::to_string() const { return is_archimedean() ? "inf" : "p=" + prime_.get_str(); }

std::string to_string(SplittingType t) {
  switch (t) {
    case SplittingType::split: return "split";
    case SplittingType::inert: return "inert";
    case SplittingType::ramified: return "ramified";
  }
  return "?";
}

SplittingType splitting_type(const Integer& p, long d) {
  require_quadratic(d);
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  if (p == 2) {
    const long r4 = ((d % 4) + 4) % 4;
    if (r4 == 2 || r4 == 3) return SplittingType::ramified;
    return ((d % 8) + 8) % 8 == 1 ? SplittingType::split : SplittingType::inert;
  }
  const Integer dd(d);
  if (mpz_divisible_p(dd.get_mpz_t(), p.get_mpz_t())) return SplittingType::ramified;
  Integer residue = ((dd % p) + p) % p;
  return mpz_legendre(residue.get_mpz_t(), p.get_mpz_t()) == 1 ? SplittingType::split : SplittingType::inert;
}

PlaceExtension::PlaceExtension(Place base) : base_(std::move(base)) {}

PlaceExtension::PlaceExtension(Place base, long d, SplitChoice choice) : base_(std::move(base)), d_(d) {
  if (d_ == 0) return;
  require_quadratic(d_);
  bool split = false;
  if (base_.is_archimedean()) {
    split = d_ > 0;
  } else {
    split = splitting_type(base_.prime(), d_) == SplittingType::split;
  }
  local_degree_ = split ? 1 : 2;
  choice_ = split ? choice : SplitChoice::plus;
}

std::string PlaceExtension::to_string() const {
  if (d_ == 0) return base_.to_string();
  std::string out = base_.to_string() + " of " + field().to_string();
  if (local_degree_ == 1) out += choice_ == SplitChoice::plus ? " (+)" : " (-)";
  return out;
}

// --- valuations and absolute values ----------------------------------------

long ord_p(const Rational& value, const Integer& p) {
  if (value == 0) throw DomainError("ord_p of zero");
  if (p < 2) throw DomainError("ord_p needs a prime");
  long e = 0;
  Integer n = value.get_num();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++e;
  }
  Integer m = value.get_den();
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    --e;
  }
  return e;
}

LogValue log_abs(const Rational& value, const Place& v, int precision_bits) {
  if (value == 0) throw DomainError("log of zero");
  if (v.is_archimedean()) return LogValue::archimedean(log_of(abs(value), precision_bits));
  return LogValue::prime_multiple(v.prime(), -ord_p(value, v.prime()), precision_bits);
}

namespace {

Integer tonelli_shanks(const Integer& n, const Integer& p) {
  if (n == 0) return 0;
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  auto powm = [&p](const Integer& b, const Integer& e) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  if (s == 1) return powm(n, (p + 1) / 4);
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powm(z, q);
  Integer r = powm(n, (q + 1) / 2);
  Integer t = powm(n, q);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    r = (r * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return r;
}

Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

Integer power(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

constexpr unsigned kHenselCapDigits = 256;

Rational split_valuation(const FieldElement& x, const Integer& p, long d, SplitChoice choice) {
  const Integer m = lcm(x.a().get_den(), x.b().get_den());
  const Integer A = x.a().get_num() * (m / x.a().get_den());
  const Integer B = x.b().get_num() * (m / x.b().get_den());
  const Integer norm = A * A - Integer(d) * B * B;
  const long e = ord_p(Rational(norm), p);
  unsigned k = static_cast<unsigned>(e) + 4;
  while (true) {
    const Integer modulus = power(p, k);
    const Integer r = sqrt_mod_prime_power(p, d, k, choice);
    const Integer image = mod_nonneg(A + B * r, modulus);
    if (image != 0) return Rational(ord_p(Rational(image), p) - ord_p(Rational(m), p));
    if (k >= kHenselCapDigits) {
      throw ResourceError("Hensel lifting precision exhausted: valuation not determined at k = " +
                          std::to_string(k) + ", required k > " + std::to_string(e));
    }
    k = std::min(2 * k, kHenselCapDigits);
  }
}

void require_compatible(const FieldElement& x, const PlaceExtension& w) {
  if (!x.is_rational() && x.d() != w.field().d) {
    throw DomainError("element of " + x.field().to_string() + " at a place of " + w.field().to_string());
  }
}

}  // namespace

Integer sqrt_mod_prime_power(const Integer& p, long d, unsigned k, SplitChoice choice) {
  if (k == 0) return 0;
  if (splitting_type(p, d) != SplittingType::split) {
    throw DomainError(p.get_str() + " does not split in Q(sqrt " + std::to_string(d) + ")");
  }
  const Integer dd(d);
  if (p == 2) {
    // r^2 = d mod 2^(j+1), r = 1 mod 4, determined mod 2^j.
    Integer r = 1;
    for (unsigned j = 3; j <= k; ++j) {
      const Integer mod = power(2, j + 1);
      if (mod_nonneg(r * r - dd, mod) != 0) r += power(2, j - 1);
    }
    const Integer modulus = power(2, k);
    r = mod_nonneg(r, modulus);
    return choice == SplitChoice::plus ? r : mod_nonneg(-r, modulus);
  }
  Integer r = tonelli_shanks(mod_nonneg(dd, p), p);
  if (p - r < r) r = p - r;
  if (choice == SplitChoice::minus) r = p - r;
  const Integer modulus = power(p, k);
  for (int iter = 0; iter < 64; ++iter) {
    const Integer f = mod_nonneg(r * r - dd, modulus);
    if (f == 0) break;
    Integer inv;
    const Integer two_r = mod_nonneg(2 * r, modulus);
    mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), modulus.get_mpz_t());
    r = mod_nonneg(r - f * inv, modulus);
  }
  return r;
}

Rational valuation(const FieldElement& x, const PlaceExtension& w) {
  if (w.is_archimedean()) throw DomainError("valuation requested at an archimedean place");
  if (x.is_zero()) throw DomainError("log of zero");
  const Integer& p = w.base().prime();
  if (x.is_rational()) return Rational(ord_p(x.a(), p));
  require_compatible(x, w);
  if (w.local_degree() == 2) return make_rational(ord_p(x.norm(), p), 2);
  return split_valuation(x, p, w.field().d, w.split_choice());
}

namespace {

// Real embedding of x (d > 0), avoiding cancellation by dividing the norm by
// the conjugate when a and b*sqrt(d) have opposite signs.
Real real_embedding(const FieldElement& x, const PlaceExtension& w, int bits) {
  const int work = bits + 32;
  Real root = sqrt(Real(Integer(x.d()), work));
  if (w.split_choice() == SplitChoice::minus) root = -root;
  const Real a(x.a(), work);
  const Real b_root = Real(x.b(), work) * root;
  if (a.sign() * b_root.sign() >= 0) return a + b_root;
  const Real n(x.norm(), work);
  Real conj = a - b_root;
  Real out(work);
  mpfr_div(out.get(), n.get(), conj.get(), MPFR_RNDN);
  return out;
}

}  // namespace

LogValue extend_abs(const FieldElement& x, const PlaceExtension& w, int precision_bits) {
  if (x.is_zero()) throw DomainError("log of zero");
  require_compatible(x, w);
  if (!w.is_archimedean()) {
    return LogValue::prime_multiple(w.base().prime(), -valuation(x, w), precision_bits);
  }
  if (x.is_rational()) return log_abs(x.a(), w.base(), precision_bits);
  if (x.d() < 0) {
    Real half = log_of(x.norm(), precision_bits + 8);
    mpfr_div_2ui(half.get(), half.get(), 1, MPFR_RNDN);
    mpfr_prec_round(half.get(), precision_bits, MPFR_RNDN);
    return LogValue::archimedean(std::move(half));
  }
  Real value = log(abs(real_embedding(x, w, precision_bits)));
  mpfr_prec_round(value.get(), precision_bits, MPFR_RNDN);
  return LogValue::archimedean(std::move(value));
}

int embedded_sign(const FieldElement& x, const PlaceExtension& w) {
  if (x.is_rational()) return sgn(x.a());
  if (!w.is_archimedean() || x.d() < 0) throw DomainError("no real embedding for this place");
  const int sa = sgn(x.a());
  int sb = sgn(x.b());
  if (w.split_choice() == SplitChoice::minus) sb = -sb;
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b*sqrt(d) of opposite signs: the larger square wins.
  const Rational a2 = x.a() * x.a();
  const Rational bd2 = Rational(x.d()) * x.b() * x.b();
  return a2 > bd2 ? sa : sb;
}

int compare_abs(const FieldElement& x, const FieldElement& y, const PlaceExtension& w) {
  if (x.is_zero() || y.is_zero()) return (x.is_zero() ? 0 : 1) - (y.is_zero() ? 0 : 1);
  require_compatible(x, w);
  require_compatible(y, w);
  if (!w.is_archimedean()) return cmp(valuation(y, w), valuation(x, w));
  if (x.is_rational() && y.is_rational()) return cmp(abs(x.a()), abs(y.a()));
  if (w.field().d < 0) return cmp(x.norm(), y.norm());
  return embedded_sign(x * x - y * y, w);
}

// --- product formula ---------------------------------------------------------

ProductFormulaReport product_formula_check(const Rational& value, const FactorLimits& limits) {
  if (value == 0) throw DomainError("product formula needs a nonzero value");
  ProductFormulaReport report;
  report.value = value;
  report.numerator = factor_integer(value.get_num(), limits);
  report.denominator = factor_integer(value.get_den(), limits);
  auto rebuild = [](const std::vector<PrimePower>& factors) {
    Integer acc = 1;
    for (const auto& f : factors) acc *= power(f.prime, static_cast<unsigned long>(f.exponent));
    return acc;
  };
  report.holds = rebuild(report.numerator) == abs(value.get_num()) &&
                 rebuild(report.denominator) == value.get_den();
  return report;
}

std::vector<Place> relevant_finite_places(std::span<const Rational> values, const FactorLimits& limits) {
  std::set<Integer> primes;
  for (const Rational& v : values) {
    if (v == 0) throw DomainError("relevant places of zero are undefined");
    for (const auto& f : factor_integer(v.get_num(), limits)) primes.insert(f.prime);
    for (const auto& f : factor_integer(v.get_den(), limits)) primes.insert(f.prime);
  }
  std::vector<Place> out;
  out.reserve(primes.size());
  for (const auto& p : primes) out.push_back(Place::finite(p));
  return out;
}

}  // namespace locweil
