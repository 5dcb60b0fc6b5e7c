#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locweil/poly.hpp"

namespace locweil {

struct GroebnerLimits {
  std::size_t max_pairs = 50000;
  unsigned max_degree = 128;
};

/// Reduced grevlex Groebner basis: monic generators sorted by leading monomial,
/// leading monomials pairwise non-dividing.
struct GroebnerBasis {
  std::size_t num_vars = 0;
  std::vector<Polynomial> generators;
  bool reduced = false;
  std::size_t pairs_processed = 0;

  bool is_unit_ideal() const { return generators.size() == 1 && generators.front().is_constant(); }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger with the normal selection strategy (smallest lcm degree first) and
/// the coprime-leading-monomial criterion. Zero inputs are ignored; an all-zero
/// list produces the zero ideal (empty basis).
GroebnerBasis buchberger(std::vector<Polynomial> generators, const GroebnerLimits& limits = {});

/// The fully reduced remainder of f; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

enum class GenerationVerdict { generated, common_zero_possible };

std::string to_string(GenerationVerdict v);

struct GenerationReport {
  GenerationVerdict verdict = GenerationVerdict::common_zero_possible;
  unsigned cap = 0;
  /// For each variable x_i, the least N <= cap with x_i^N in the ideal (nullopt if none).
  std::vector<std::optional<unsigned>> pure_powers;

  bool generated() const { return verdict == GenerationVerdict::generated; }
};

/// a*(k+1) + n for k+1 sections of degree a on P^n.
unsigned default_generation_cap(int degree, std::size_t section_count, std::size_t ambient_dimension);

/// Sections have no common zero on P^n iff every x_i has a power in their ideal.
/// Below the cap the verdict `generated` is a proof; otherwise it is inconclusive.
GenerationReport generation_check(std::span<const Form> sections, std::optional<unsigned> cap = std::nullopt,
                                  const GroebnerLimits& limits = {});

}  // namespace locweil
