#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's own algorithms: factorization is
// naive trial division, valuations are repeated division, gcds are Euclid on dense
// coefficient vectors.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "locweil/numfield.hpp"
#include "locweil/poly.hpp"

namespace testing_support {

using locweil::FieldElement;
using locweil::Form;
using locweil::Integer;
using locweil::Monomial;
using locweil::Polynomial;
using locweil::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  long nonzero(long bound) {
    long v = 0;
    while (v == 0) v = integer(-bound, bound);
    return v;
  }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound) {
    Rational q(nonzero(bound), integer(1, bound));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long bound) { return rational(bound); }
  Rational rational_or_zero(long bound) {
    Rational q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }

  /// Random form of the given degree with a handful of rational coefficients.
  Form form(std::size_t num_vars, unsigned degree, long coeff_bound = 5, double density = 0.6) {
    const auto monomials = locweil::monomials_of_degree(num_vars, degree);
    for (;;) {
      Polynomial p(num_vars);
      for (const auto& m : monomials) {
        if (std::uniform_real_distribution<double>(0, 1)(rng_) < density) {
          p.add_term(m, FieldElement(rational_or_zero(coeff_bound)));
        }
      }
      if (!p.is_zero()) return Form(p, static_cast<int>(degree));
    }
  }

  /// Random polynomial of degree <= max_degree.
  Polynomial poly(std::size_t num_vars, unsigned max_degree, long coeff_bound = 6, double density = 0.5) {
    const auto monomials = locweil::monomials_up_to_degree(num_vars, max_degree);
    for (;;) {
      Polynomial p(num_vars);
      for (const auto& m : monomials) {
        if (std::uniform_real_distribution<double>(0, 1)(rng_) < density) {
          p.add_term(m, FieldElement(rational_or_zero(coeff_bound)));
        }
      }
      if (!p.is_zero()) return p;
    }
  }

  std::vector<FieldElement> integer_point(std::size_t num_vars, long bound) {
    for (;;) {
      std::vector<FieldElement> x;
      bool nonzero_seen = false;
      for (std::size_t i = 0; i < num_vars; ++i) {
        x.emplace_back(integer(-bound, bound));
        nonzero_seen = nonzero_seen || !x.back().is_zero();
      }
      if (nonzero_seen) return x;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Naive trial-division factorization of |n| as (prime, exponent) pairs.
inline std::vector<std::pair<Integer, long>> naive_factor(Integer n) {
  std::vector<std::pair<Integer, long>> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Exponent of p in a nonzero rational, by repeated division.
inline long naive_ord(const Rational& q, const Integer& p) {
  long e = 0;
  Integer num = q.get_num(), den = q.get_den();
  while (num % p == 0) {
    num /= p;
    ++e;
  }
  while (den % p == 0) {
    den /= p;
    --e;
  }
  return e;
}

/// Dense univariate polynomial over Q, coefficient i multiplies t^i.
using Dense = std::vector<Rational>;

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense dense_mod(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

inline Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Binary forms in (x0, x1) have a common zero on P^1 iff they all vanish at [0:1]
/// or the gcd of their dehomogenizations at x0 = 1 is nonconstant.
inline bool binary_forms_have_common_zero(const std::vector<Form>& forms) {
  bool all_vanish_at_infinity = true;
  Dense g;
  for (const auto& f : forms) {
    const unsigned a = static_cast<unsigned>(f.degree());
    // value at [0:1] is the coefficient of x1^a
    if (!f.poly().coefficient(Monomial(std::vector<locweil::Exponent>{0, a})).is_zero()) {
      all_vanish_at_infinity = false;
    }
    Dense d(a + 1);
    for (const auto& [m, c] : f.poly().terms()) d[m[1]] = c.a();
    g = g.empty() ? d : dense_gcd(g, d);
    trim(g);
  }
  return all_vanish_at_infinity || g.size() > 1;
}

/// sum_v log(max_j |x_j|_v / |x_0|_v) for a primitive integer point with x_0 != 0,
/// straight from the definition of the places. Finite parts are exact; the
/// archimedean term is a long double.
struct HeightOracle {
  std::vector<std::pair<Integer, Rational>> finite;  ///< prime -> coefficient of log p
  long double archimedean = 0;
};

inline HeightOracle height_oracle(const std::vector<Integer>& x) {
  HeightOracle out;
  Integer biggest = 0;
  for (const auto& c : x) biggest = std::max<Integer>(biggest, abs(c));
  out.archimedean = std::log(static_cast<long double>(biggest.get_d())) -
                    std::log(static_cast<long double>(Integer(abs(x[0])).get_d()));
  // At p: max_j |x_j|_p = p^{-min ord}; |x0|_p = p^{-ord x0}. Contribution (ord x0 - min ord) log p.
  for (const auto& [p, e] : naive_factor(x[0])) {
    long min_ord = e;
    for (const auto& c : x) {
      if (c != 0) min_ord = std::min(min_ord, naive_ord(Rational(c), p));
    }
    if (e - min_ord != 0) out.finite.emplace_back(p, Rational(e - min_ord));
  }
  return out;
}

}  // namespace testing_support
