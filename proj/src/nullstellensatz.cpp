#include "locweil/nullstellensatz.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "locweil/errors.hpp"

namespace locweil {
namespace {

struct Unknown {
  std::size_t generator;
  Monomial monomial;
};

std::vector<Unknown> unknown_layout(std::span<const Polynomial> f, unsigned degree) {
  std::vector<Unknown> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int room = static_cast<int>(degree) - f[i].degree();
    if (room < 0) continue;
    auto monos = monomials_up_to_degree(f[i].num_vars(), static_cast<unsigned>(room));
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) out.push_back({i, *it});
  }
  return out;
}

void require_valid_family(std::span<const Polynomial> f) {
  if (f.empty()) throw DomainError("certificate search needs at least one polynomial");
  for (const auto& p : f) {
    if (p.is_zero()) throw DomainError("certificate search: zero polynomial in family");
    if (p.num_vars() != f.front().num_vars()) throw DomainError("certificate search: mixed polynomial rings");
  }
}

int max_degree(std::span<const Polynomial> f) {
  int d = 0;
  for (const auto& p : f) d = std::max(d, p.degree());
  return d;
}

LinearSystem build_system(std::span<const Polynomial> f, unsigned degree, const std::vector<Unknown>& unknowns) {
  const std::size_t nv = f.front().num_vars();
  const auto row_monos = monomials_up_to_degree(nv, degree);
  std::map<Monomial, std::size_t, GrevlexDescending> row_of;
  // Constant monomial first so that the rhs row is row 0.
  for (auto it = row_monos.rbegin(); it != row_monos.rend(); ++it) row_of.emplace(*it, row_of.size());
  LinearSystem system(row_monos.size(), unknowns.size());
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    for (const auto& [m, c] : f[u.generator].terms()) system.at(row_of.at(m * u.monomial), col) = c;
  }
  system.rhs(row_of.at(Monomial(nv))) = FieldElement(1);
  return system;
}

}  // namespace

unsigned default_certificate_cap(std::span<const Polynomial> f) {
  unsigned total = 0;
  for (const auto& p : f) total += static_cast<unsigned>(std::max(0, p.degree()));
  return total + static_cast<unsigned>(f.empty() ? 0 : f.front().num_vars());
}

LinearSystem certificate_system(std::span<const Polynomial> f, unsigned degree) {
  require_valid_family(f);
  return build_system(f, degree, unknown_layout(f, degree));
}

CertificateResult find_certificate(std::span<const Polynomial> f, unsigned cap) {
  require_valid_family(f);
  const int start = max_degree(f);
  if (static_cast<int>(cap) < start) {
    throw DomainError("certificate cap " + std::to_string(cap) + " is below the largest degree " +
                      std::to_string(start));
  }
  const std::size_t nv = f.front().num_vars();
  for (unsigned degree = static_cast<unsigned>(start); degree <= cap; ++degree) {
    const auto unknowns = unknown_layout(f, degree);
    const auto solution = solve_linear_exact(build_system(f, degree, unknowns));
    if (!solution) continue;
    Certificate cert;
    for (const auto& p : f) cert.pairs.push_back({p, Polynomial(nv)});
    for (std::size_t col = 0; col < unknowns.size(); ++col) {
      cert.pairs[unknowns[col].generator].g.add_term(unknowns[col].monomial, (*solution)[col]);
    }
    cert.degree_bound = 0;
    for (const auto& [fi, gi] : cert.pairs) {
      if (!gi.is_zero()) cert.degree_bound = std::max(cert.degree_bound, fi.degree() + gi.degree());
    }
    return cert;
  }
  return NoCertificateAtCap{cap};
}

bool verify_certificate(const Certificate& c) {
  if (c.pairs.empty()) return false;
  const std::size_t nv = c.pairs.front().f.num_vars();
  Polynomial sum(nv);
  int degree = 0;
  for (const auto& [f, g] : c.pairs) {
    if (f.num_vars() != nv || g.num_vars() != nv) return false;
    const Polynomial product = f * g;
    if (!product.is_zero()) degree = std::max(degree, product.degree());
    sum += product;
  }
  return sum == Polynomial::constant(nv, FieldElement(1)) && degree == c.degree_bound;
}

LogValue certificate_size(const Certificate& c, const PlaceExtension& w, int precision_bits) {
  std::optional<LogValue> best;
  for (const auto& pair : c.pairs) {
    if (pair.g.is_zero()) continue;
    LogValue size = gauss_norm(pair.g, w, precision_bits);
    best = best ? max(*best, size) : size;
  }
  if (!best) throw DomainError("certificate has no nonzero multipliers");
  return *best;
}

}  // namespace locweil
