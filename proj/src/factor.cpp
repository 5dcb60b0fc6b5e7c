#include "locweil/factor.hpp"

#include <algorithm>
#include <map>

#include "locweil/errors.hpp"

namespace locweil {
namespace {

const std::vector<unsigned long>& small_primes(unsigned long bound) {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kSieveLimit = 1000000;
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  if (bound > 1000000) throw ResourceError("trial division bound above 10^6 is not supported");
  return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 when the
// iteration budget runs out.
Integer rho_factor(const Integer& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    auto step = [&](Integer& v) {
      v = (v * v + c) % n;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t batch = std::min(m, r - k);
        for (std::uint64_t i = 0; i < batch; ++i) {
          step(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += batch;
        if (budget <= batch) {
          budget = 0;
          break;
        }
        budget -= batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void factor_cofactor(const Integer& n, std::map<Integer, long>& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = rho_factor(n, budget);
  if (d == 0) {
    throw ResourceError("factorization effort cap exceeded; unfactored part " + n.get_str());
  }
  factor_cofactor(d, out, budget);
  factor_cofactor(n / d, out, budget);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<PrimePower> factor_integer(const Integer& n, const FactorLimits& limits) {
  if (n == 0) throw DomainError("cannot factor zero");
  Integer rest = abs(n);
  std::map<Integer, long> found;
  for (unsigned long p : small_primes(limits.trial_bound)) {
    if (p > limits.trial_bound) break;
    if (Integer(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[Integer(p)];
    }
  }
  std::uint64_t budget = limits.rho_iterations;
  factor_cofactor(rest, found, budget);
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (auto& [prime, exponent] : found) out.push_back({prime, exponent});
  return out;
}

}  // namespace locweil
