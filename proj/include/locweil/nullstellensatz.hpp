#pragma once

#include <span>
#include <variant>
#include <vector>

#include "locweil/linsolve.hpp"
#include "locweil/log_value.hpp"
#include "locweil/poly.hpp"

namespace locweil {

struct CertificatePair {
  Polynomial f;
  Polynomial g;
};

/// Witness 1 = sum f_i g_i. `degree_bound` is max deg(f_i g_i) over the nonzero g_i.
struct Certificate {
  std::vector<CertificatePair> pairs;
  int degree_bound = 0;

  std::size_t num_vars() const { return pairs.empty() ? 0 : pairs.front().f.num_vars(); }
};

struct NoCertificateAtCap {
  unsigned cap = 0;
};

using CertificateResult = std::variant<Certificate, NoCertificateAtCap>;

/// sum deg f_i + number of variables.
unsigned default_certificate_cap(std::span<const Polynomial> f);

/// Coefficient-matching system for sum f_i g_i = 1 with deg g_i <= degree - deg f_i.
/// Unknowns are laid out per f_i, each block ordered by increasing monomial.
LinearSystem certificate_system(std::span<const Polynomial> f, unsigned degree);

/// Sweeps the target degree from max deg f_i to `cap` and returns the first solution.
CertificateResult find_certificate(std::span<const Polynomial> f, unsigned cap);

/// Exact check of the identity and of the recorded degree bound.
bool verify_certificate(const Certificate& c);

/// max_i log |g_i|_w (Gauss norm) over the nonzero g_i.
LogValue certificate_size(const Certificate& c, const PlaceExtension& w, int precision_bits = kDefaultPrecision);

}  // namespace locweil
