#include "locweil/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "locweil/errors.hpp"

namespace locweil {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_monomial(l / f.leading_monomial(), f.leading_coefficient().inverse());
  Polynomial b = g.times_monomial(l / g.leading_monomial(), g.leading_coefficient().inverse());
  return a - b;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  Polynomial remainder(f.num_vars());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const FieldElement lc = p.leading_coefficient();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
      continue;
    }
    p -= divisor->times_monomial(lm / divisor->leading_monomial(), lc / divisor->leading_coefficient());
  }
  return remainder;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.num_vars() != gb.num_vars) throw DomainError("normal_form: polynomial ring mismatch");
  return normal_form(f, std::span<const Polynomial>(gb.generators));
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool pair_before(const CriticalPair& a, const CriticalPair& b) {
  const unsigned da = a.lcm.degree();
  const unsigned db = b.lcm.degree();
  if (da != db) return da < db;
  if (int c = grevlex_compare(a.lcm, b.lcm); c != 0) return c < 0;
  return std::tie(a.j, a.i) < std::tie(b.j, b.i);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.num_vars(); ++k) {
    if (a[k] != 0 && b[k] != 0) return false;
  }
  return true;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g) {
  // Drop generators whose leading monomial is divisible by another's.
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&p](const Polynomial& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // The leading term survives: no other leading monomial divides it.
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators, const GroebnerLimits& limits) {
  if (generators.empty()) throw DomainError("buchberger needs at least one generator");
  GroebnerBasis out;
  out.num_vars = generators.front().num_vars();
  std::vector<Polynomial> basis;
  for (auto& g : generators) {
    if (g.num_vars() != out.num_vars) throw DomainError("buchberger: generators live in different rings");
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });

  auto unit = [&out]() {
    out.generators = {Polynomial::constant(out.num_vars, FieldElement(1))};
    out.reduced = true;
    return out;
  };
  for (const auto& g : basis) {
    if (g.is_constant()) return unit();
  }

  std::vector<CriticalPair> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
    }
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
    const CriticalPair pair = *it;
    pairs.erase(it);
    if (++out.pairs_processed > limits.max_pairs) {
      throw ResourceError("Groebner effort cap exceeded: " + std::to_string(limits.max_pairs) +
                          " pairs processed, basis size " + std::to_string(basis.size()) + ", " +
                          std::to_string(pairs.size()) + " pairs pending");
    }
    if (coprime(basis[pair.i].leading_monomial(), basis[pair.j].leading_monomial())) continue;
    Polynomial h = normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) return unit();
    if (h.degree() > static_cast<int>(limits.max_degree)) {
      throw ResourceError("Groebner effort cap exceeded: intermediate degree " + std::to_string(h.degree()) +
                          " > " + std::to_string(limits.max_degree) + " after " +
                          std::to_string(out.pairs_processed) + " pairs");
    }
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, lcm(basis[i].leading_monomial(), h.leading_monomial())});
    }
    basis.push_back(std::move(h));
  }

  out.generators = basis.empty() ? std::vector<Polynomial>{} : reduce_basis(std::move(basis));
  out.reduced = true;
  return out;
}

std::string to_string(GenerationVerdict v) {
  return v == GenerationVerdict::generated ? "generated" : "common_zero_possible";
}

unsigned default_generation_cap(int degree, std::size_t section_count, std::size_t ambient_dimension) {
  return static_cast<unsigned>(degree) * static_cast<unsigned>(section_count) +
         static_cast<unsigned>(ambient_dimension);
}

GenerationReport generation_check(std::span<const Form> sections, std::optional<unsigned> cap,
                                  const GroebnerLimits& limits) {
  if (sections.empty()) throw DomainError("generation_check needs at least one section");
  const int a = sections.front().degree();
  const std::size_t nv = sections.front().num_vars();
  for (const auto& s : sections) {
    if (s.is_zero()) throw DomainError("generation_check: zero section");
    if (s.degree() != a) throw DomainError("generation_check: sections of mixed degrees");
    if (s.num_vars() != nv) throw DomainError("generation_check: sections on different projective spaces");
  }
  GenerationReport report;
  report.cap = cap.value_or(default_generation_cap(a, sections.size(), nv - 1));
  if (a == 0) {
    // Nonzero constants never vanish.
    report.verdict = GenerationVerdict::generated;
    report.pure_powers.assign(nv, 0u);
    return report;
  }
  std::vector<Polynomial> gens;
  for (const auto& s : sections) gens.push_back(s.poly());
  const GroebnerBasis gb = buchberger(std::move(gens), limits);
  bool all = true;
  for (std::size_t i = 0; i < nv; ++i) {
    std::optional<unsigned> found;
    // A homogeneous ideal generated in degree a has nothing below degree a.
    for (unsigned n = static_cast<unsigned>(a); n <= report.cap; ++n) {
      const Polynomial power = Polynomial::term(Monomial::variable(nv, i, n), FieldElement(1));
      if (normal_form(power, gb).is_zero()) {
        found = n;
        break;
      }
    }
    if (!found) all = false;
    report.pure_powers.push_back(found);
  }
  report.verdict = all ? GenerationVerdict::generated : GenerationVerdict::common_zero_possible;
  return report;
}

}  // namespace locweil
