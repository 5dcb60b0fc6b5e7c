#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locweil/groebner.hpp"
#include "locweil/poly.hpp"

namespace locweil {

enum class GenerationStatus { verified, unverified, inconclusive };

std::string to_string(GenerationStatus s);
GenerationStatus parse_generation_status(const std::string& text);

/// D = div(F) - div(G) on P^n, with meromorphic section F/G.
struct Divisor {
  Form numerator;
  Form denominator;

  int degree() const { return numerator.degree() - denominator.degree(); }
  std::size_t ambient_dimension() const { return numerator.ambient_dimension(); }
  Field field() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// A presentation (s_D; O(a_L), s; O(a_M), t) of a divisor on P^n. Section lists
/// are kept in canonical order so that equal presentations compare equal.
class Presentation {
 public:
  /// Enforces nonzero sections of one degree per list on the divisor's P^n and
  /// a_L - a_M = deg F - deg G.
  Presentation(Divisor divisor, std::vector<Form> s, std::vector<Form> t,
               GenerationStatus s_status = GenerationStatus::unverified,
               GenerationStatus t_status = GenerationStatus::unverified);

  /// Same as the constructor but without the degree-compatibility check, for
  /// external input that `validate` is about to inspect.
  static Presentation unchecked(Divisor divisor, std::vector<Form> s, std::vector<Form> t,
                                GenerationStatus s_status = GenerationStatus::unverified,
                                GenerationStatus t_status = GenerationStatus::unverified);

  const Divisor& divisor() const { return divisor_; }
  int deg_L() const { return s_.front().degree(); }
  int deg_M() const { return t_.front().degree(); }
  const std::vector<Form>& s() const { return s_; }
  const std::vector<Form>& t() const { return t_; }
  GenerationStatus s_status() const { return s_status_; }
  GenerationStatus t_status() const { return t_status_; }
  std::size_t ambient_dimension() const { return divisor_.ambient_dimension(); }
  std::size_t num_vars() const { return ambient_dimension() + 1; }
  Field field() const;
  bool degrees_compatible() const { return deg_L() - deg_M() == divisor_.degree(); }

  Presentation with_status(GenerationStatus s_status, GenerationStatus t_status) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Presentation(Divisor divisor, std::vector<Form> s, std::vector<Form> t, GenerationStatus s_status,
               GenerationStatus t_status, bool check_degrees);

  Divisor divisor_;
  std::vector<Form> s_;
  std::vector<Form> t_;
  GenerationStatus s_status_;
  GenerationStatus t_status_;
};

/// Canonical section order: leading monomials grevlex-descending, then the term
/// sequences compared monomial by monomial and coefficient by coefficient.
bool section_less(const Form& a, const Form& b);

/// (F; O(d), all degree-d monomials; O, (1)).
Presentation make_hypersurface_presentation(const Form& f);

/// Divisor F/G presented with all monomials of degree deg F - deg G + twist over all
/// monomials of degree `twist`. Twist 0 with G = 1 is the hypersurface presentation.
Presentation make_monomial_presentation(const Form& f, const Form& g, unsigned twist);

/// (F/G; O, 1; O, 1) for F, G of equal degree; lambda = -log|F/G|.
Presentation make_principal_presentation(const Form& f, const Form& g);

Presentation sum_presentations(const Presentation& a, const Presentation& b);

struct DifferencePresentation {
  Presentation presentation;  ///< of the zero divisor, with s_D = alpha
  FieldElement alpha;         ///< s_{1D} / s_{2D}
};

/// D1 - D2 = (alpha; L1 M2, s1 t2; M1 L2, t1 s2). Throws DomainError if the two
/// presentations are of different divisors.
DifferencePresentation difference_presentation(const Presentation& a, const Presentation& b);

/// alpha with F1 G2 = alpha F2 G1, or nullopt when the forms are not proportional.
std::optional<FieldElement> divisor_ratio(const Divisor& a, const Divisor& b);

struct ValidationReport {
  bool degree_compatible = false;
  int expected_degree = 0;  ///< deg F - deg G
  int presented_degree = 0; ///< a_L - a_M
  GenerationReport s_report;
  GenerationReport t_report;

  bool ok() const { return degree_compatible && s_report.generated() && t_report.generated(); }
};

struct ValidationOptions {
  std::optional<unsigned> generation_cap;
  GroebnerLimits limits;
};

ValidationReport validate(const Presentation& p, const ValidationOptions& options = {});

/// p with both statuses replaced by the outcome of generation_check.
Presentation with_checked_generation(const Presentation& p, const ValidationOptions& options = {});

}  // namespace locweil
