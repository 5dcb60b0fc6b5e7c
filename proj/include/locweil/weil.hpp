#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locweil/log_value.hpp"
#include "locweil/nullstellensatz.hpp"
#include "locweil/presentation.hpp"

namespace locweil {

/// A point of P^n over Q or Q(sqrt d), stored as its canonical representative:
/// coprime integers with the first nonzero coordinate positive over Q, first
/// nonzero coordinate equal to 1 over Q(sqrt d).
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<FieldElement> coords);

  /// "[2:3:-1]" with entries in the coefficient grammar.
  static ProjectivePoint parse(std::string_view text);

  const std::vector<FieldElement>& coords() const { return coords_; }
  std::size_t num_vars() const { return coords_.size(); }
  std::size_t ambient_dimension() const { return coords_.size() - 1; }
  Field field() const;
  bool is_rational() const { return field().is_rational(); }
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<FieldElement> coords_;
};

/// max_i min_j log |s_i / (t_j s_D)(x)|_w, with the min over t_j(x) != 0.
///
/// Equivalently log |s_i*(x) G(x) / (t_j*(x) F(x))|_w for the exact maximizers i*, j*
/// of |s_i(x)|_w and |t_j(x)|_w, which is how it is evaluated: a single log of an
/// exact field element, so the value is exact at finite places and invariant under
/// rescaling of the coordinates at every place.
LogValue local_weil(const Presentation& p, const ProjectivePoint& x, const PlaceExtension& w,
                    int precision_bits = kDefaultPrecision);

/// Same on raw (not canonicalized) coordinates.
LogValue local_weil(const Presentation& p, std::span<const FieldElement> coords, const PlaceExtension& w,
                    int precision_bits = kDefaultPrecision);

struct HeightRow {
  Place place;
  LogValue value;
};

struct HeightResult {
  std::vector<HeightRow> rows;  ///< infinity first, then primes ascending
  LogValue sum;                 ///< exact parts summed, archimedean part kept apart
  Real total;                   ///< sum folded into a real at the working precision
};

/// Sum of local_weil over infinity and every prime dividing one of s_i(x), t_j(x),
/// F(x), G(x); all other places contribute 0. Q-points and Q-presentations only.
HeightResult global_height(const Presentation& p, const ProjectivePoint& x, const FactorLimits& limits = {},
                           int precision_bits = kDefaultPrecision);

/// Smallest i with |x_i|_w = max_j |x_j|_w.
std::size_t point_chart_index(std::span<const FieldElement> coords, const PlaceExtension& w);
std::size_t point_chart_index(const ProjectivePoint& x, const PlaceExtension& w);

/// Bound data for one chart U_i of one direction.
struct ChartBoundData {
  std::size_t chart = 0;
  /// sum_l g_il h_il = 1 for the dehomogenized t-sections h_il.
  Certificate certificate;
  /// log max_l (#supp g_il)^delta |g_il|_w: sup of the multipliers on E_i.
  LogValue multiplier_bound;
  /// log of (#I)^delta times the above: sup |1/h_il|_w on E_il.
  LogValue inverse_bound;

  /// q_ikl = (s_k dehomogenized) * Y, Y standing for 1/h_il.
  struct Entry {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t support = 0;
    LogValue gauss;
    unsigned degree = 0;
    /// log+((#supp q)^delta |q|_w max(1, sup|1/h_il|)^deg q)
    LogValue value;
  };
  std::vector<Entry> entries;
  LogValue chart_max;
};

struct DirectionalBound {
  FieldElement alpha;
  /// |log |alpha|_w|
  LogValue alpha_term;
  std::vector<ChartBoundData> charts;
  /// max over (i, k, l) of the entry values
  LogValue sections_bound;
  /// sections_bound + alpha_term
  LogValue total;
};

struct ComparisonOptions {
  /// Per-chart certificate degree cap; default is the family's default_certificate_cap.
  std::optional<unsigned> certificate_cap;
  ValidationOptions validation;
  int precision_bits = kDefaultPrecision;
};

struct ComparisonBound {
  DirectionalBound forward;   ///< D1 - D2
  DirectionalBound backward;  ///< D2 - D1
  LogValue bound;             ///< max of the two directional totals
};

/// Effective constant B with |lambda_1 - lambda_2| <= B at w, built from the
/// difference presentations, per-chart Nullstellensatz certificates and Gauss-norm
/// bounds. Throws DomainError when the presentations differ or a t-list fails to
/// generate, ResourceError when no certificate exists below the cap.
ComparisonBound comparison_bound(const Presentation& p1, const Presentation& p2, const PlaceExtension& w,
                                 const ComparisonOptions& options = {});

struct PointComparison {
  ProjectivePoint point;
  LogValue lambda1;
  LogValue lambda2;
  LogValue difference;  ///< lambda1 - lambda2
  /// log |F(x) G(x)|_w - (deg F + deg G) log max_j |x_j|_w; very negative near supp(D).
  LogValue support_proximity;
};

struct ComparisonReport {
  LogValue bound;
  LogValue max_difference;
  bool pass = true;
  std::vector<PointComparison> points;
};

ComparisonReport verify_comparison(const Presentation& p1, const Presentation& p2, const PlaceExtension& w,
                                   std::span<const ProjectivePoint> points, const ComparisonOptions& options = {});

/// Same with a precomputed bound.
ComparisonReport verify_comparison(const Presentation& p1, const Presentation& p2, const PlaceExtension& w,
                                   std::span<const ProjectivePoint> points, const LogValue& bound,
                                   int precision_bits = kDefaultPrecision);

struct SampleSpec {
  std::size_t count = 50;
  /// of which this many are pushed toward supp(D) at the sampled place
  std::size_t near_support = 10;
  unsigned height = 1000;
  /// target |F G (x)|_w for near-support points: p^-depth, or 10^-depth at infinity
  unsigned depth = 8;
  std::uint64_t seed = 1;
};

/// Random Q-points off supp(D); near-support points are constructed on random
/// lines through a real root (infinity) or a Hensel-lifted root mod p^depth.
std::vector<ProjectivePoint> sample_points(const Presentation& p, const PlaceExtension& w, const SampleSpec& spec);

}  // namespace locweil
