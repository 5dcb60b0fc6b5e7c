#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace locweil {

using Integer = mpz_class;

struct PrimePower {
  Integer prime;
  long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Effort limits for integer factorization. Exceeding them is reported as a
/// ResourceError naming the unfactored cofactor; a wrong answer is never returned.
struct FactorLimits {
  unsigned long trial_bound = 1000000;
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
};

bool is_prime(const Integer& n);

/// Factor |n| (n != 0) into prime powers sorted by prime. Units give an empty list.
std::vector<PrimePower> factor_integer(const Integer& n, const FactorLimits& limits = {});

}  // namespace locweil
