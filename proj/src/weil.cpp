#include "locweil/weil.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "locweil/errors.hpp"
#include "locweil/parse.hpp"

namespace locweil {

// --- points -------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(std::vector<FieldElement> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DomainError("a point of P^n needs at least two coordinates");
  const auto first = std::find_if(coords_.begin(), coords_.end(), [](const FieldElement& c) { return !c.is_zero(); });
  if (first == coords_.end()) throw DomainError("all coordinates are zero");
  Field f;
  for (const auto& c : coords_) f = common_field(f, c.field());
  if (!f.is_rational()) {
    const FieldElement lead = *first;
    for (auto& c : coords_) c = (c / lead).in_field(f);
    return;
  }
  Integer den = 1;
  for (const auto& c : coords_) den = lcm(den, c.a().get_den());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : coords_) {
    ints.push_back(c.a().get_num() * (den / c.a().get_den()));
    g = gcd(g, ints.back());
  }
  if (sgn(first->a()) < 0) g = -g;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = FieldElement(Rational(ints[i] / g));
}

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("point must look like [x0:x1:...], got \"" + std::string(text) + "\"");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<FieldElement> coords;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ':' && depth == 0)) {
      coords.push_back(parse_coefficient(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  try {
    return ProjectivePoint(std::move(coords));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid point: ") + e.what());
  }
}

Field ProjectivePoint::field() const {
  Field f;
  for (const auto& c : coords_) f = common_field(f, c.field());
  return f;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ":";
    out += coords_[i].to_string();
  }
  return out + "]";
}

// --- local Weil functions -----------------------------------------------------

namespace {

Field coords_field(std::span<const FieldElement> coords) {
  Field f;
  for (const auto& c : coords) f = common_field(f, c.field());
  return f;
}

void require_place_for(Field f, const PlaceExtension& w) {
  if (!f.is_rational() && w.field() != f) {
    throw DomainError("values lie in " + f.to_string() + " but the place " + w.to_string() +
                      " is not a place of that field");
  }
}

std::size_t argmax_abs(std::span<const FieldElement> values, const PlaceExtension& w) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (compare_abs(values[i], values[best], w) > 0) best = i;
  }
  return best;
}

std::vector<FieldElement> evaluate_all(const std::vector<Form>& forms, std::span<const FieldElement> x) {
  std::vector<FieldElement> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.evaluate(x));
  return out;
}

LogValue log_count(std::size_t n, const PlaceExtension& w, int bits) {
  if (!w.is_archimedean() || n <= 1) return LogValue(bits);
  return LogValue::archimedean(log(Real(Integer(static_cast<unsigned long>(n)), bits)));
}

}  // namespace

LogValue local_weil(const Presentation& p, std::span<const FieldElement> x, const PlaceExtension& w,
                    int precision_bits) {
  if (x.size() != p.num_vars()) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, presentation lives on P^" +
                      std::to_string(p.ambient_dimension()));
  }
  require_place_for(common_field(p.field(), coords_field(x)), w);
  const FieldElement fx = p.divisor().numerator.evaluate(x);
  const FieldElement gx = p.divisor().denominator.evaluate(x);
  if (fx.is_zero()) throw DomainError("point lies in supp(D): F(x) = 0");
  if (gx.is_zero()) throw DomainError("point lies in supp(D): G(x) = 0");
  const auto s_values = evaluate_all(p.s(), x);
  const auto t_values = evaluate_all(p.t(), x);
  const FieldElement& s_best = s_values[argmax_abs(s_values, w)];
  const FieldElement& t_best = t_values[argmax_abs(t_values, w)];
  if (s_best.is_zero()) throw DomainError("s-sections do not generate at x: all vanish");
  if (t_best.is_zero()) throw DomainError("t-sections do not generate at x: all vanish");
  return extend_abs(s_best * gx / (t_best * fx), w, precision_bits);
}

LogValue local_weil(const Presentation& p, const ProjectivePoint& x, const PlaceExtension& w, int precision_bits) {
  return local_weil(p, std::span<const FieldElement>(x.coords()), w, precision_bits);
}

HeightResult global_height(const Presentation& p, const ProjectivePoint& x, const FactorLimits& limits,
                           int precision_bits) {
  if (!x.is_rational()) throw DomainError("global height is implemented for Q-points only");
  if (!p.field().is_rational()) throw DomainError("global height is implemented for presentations over Q");
  const auto& coords = x.coords();
  std::vector<Rational> values;
  auto collect = [&values](const FieldElement& v) {
    if (!v.is_zero()) values.push_back(v.a());
  };
  collect(p.divisor().numerator.evaluate(coords));
  collect(p.divisor().denominator.evaluate(coords));
  for (const auto& v : evaluate_all(p.s(), coords)) collect(v);
  for (const auto& v : evaluate_all(p.t(), coords)) collect(v);

  HeightResult out{{}, LogValue(precision_bits), Real(precision_bits)};
  std::vector<Place> places{Place::infinity()};
  for (auto& q : relevant_finite_places(values, limits)) places.push_back(std::move(q));
  for (const auto& v : places) {
    LogValue value = local_weil(p, x, PlaceExtension(v), precision_bits);
    out.sum += value;
    out.rows.push_back({v, std::move(value)});
  }
  out.total = out.sum.total();
  return out;
}

std::size_t point_chart_index(std::span<const FieldElement> coords, const PlaceExtension& w) {
  if (std::all_of(coords.begin(), coords.end(), [](const FieldElement& c) { return c.is_zero(); })) {
    throw DomainError("chart index of the zero vector");
  }
  return argmax_abs(coords, w);
}

std::size_t point_chart_index(const ProjectivePoint& x, const PlaceExtension& w) {
  return point_chart_index(std::span<const FieldElement>(x.coords()), w);
}

// --- comparison bound ----------------------------------------------------------

namespace {

void require_generating_t(const Presentation& d, const ComparisonOptions& options, const char* direction) {
  if (d.t_status() == GenerationStatus::verified) return;
  const auto report = generation_check(d.t(), options.validation.generation_cap, options.validation.limits);
  if (!report.generated()) {
    throw DomainError(std::string("generation failure in direction ") + direction +
                      ": t-sections not verified to generate up to power cap " + std::to_string(report.cap) +
                      "; the comparison bound is undefined");
  }
}

ChartBoundData chart_bound(const Presentation& d, std::size_t chart, const PlaceExtension& w,
                           const ComparisonOptions& options) {
  const int bits = options.precision_bits;
  ChartBoundData data;
  data.chart = chart;

  std::vector<Polynomial> h;
  h.reserve(d.t().size());
  int max_h_degree = 0;
  for (const auto& t : d.t()) {
    h.push_back(dehomogenize(t, chart));
    max_h_degree = std::max(max_h_degree, h.back().degree());
  }
  const unsigned cap = std::max(options.certificate_cap.value_or(default_certificate_cap(h)),
                                static_cast<unsigned>(max_h_degree));
  auto result = find_certificate(h, cap);
  if (std::holds_alternative<NoCertificateAtCap>(result)) {
    throw ResourceError("no Nullstellensatz certificate for the t-sections on chart " + std::to_string(chart) +
                        " up to degree cap " + std::to_string(cap) + "; raise the cap (--nsatz-cap)");
  }
  data.certificate = std::get<Certificate>(std::move(result));

  std::optional<LogValue> multiplier;
  for (const auto& pair : data.certificate.pairs) {
    if (pair.g.is_zero()) continue;
    LogValue g_bound = log_count(support_size(pair.g), w, bits) + gauss_norm(pair.g, w, bits);
    multiplier = multiplier ? max(*multiplier, g_bound) : g_bound;
  }
  data.multiplier_bound = *multiplier;
  data.inverse_bound = log_count(h.size(), w, bits) + data.multiplier_bound;
  const LogValue inverse_plus = log_plus(data.inverse_bound);

  data.chart_max = LogValue(bits);
  for (std::size_t k = 0; k < d.s().size(); ++k) {
    const Polynomial s_affine = dehomogenize(d.s()[k], chart);
    const std::size_t support = support_size(s_affine);
    const LogValue gauss = gauss_norm(s_affine, w, bits);
    const unsigned degree = static_cast<unsigned>(s_affine.degree()) + 1;
    const LogValue value = log_plus(log_count(support, w, bits) + gauss + inverse_plus.scaled(degree));
    data.chart_max = max(data.chart_max, value);
    for (std::size_t l = 0; l < h.size(); ++l) data.entries.push_back({k, l, support, gauss, degree, value});
  }
  return data;
}

DirectionalBound directional_bound(const DifferencePresentation& diff, const PlaceExtension& w,
                                   const ComparisonOptions& options, const char* direction) {
  const Presentation& d = diff.presentation;
  require_generating_t(d, options, direction);
  DirectionalBound out;
  out.alpha = diff.alpha;
  out.alpha_term = abs(extend_abs(diff.alpha, w, options.precision_bits));
  out.sections_bound = LogValue(options.precision_bits);
  for (std::size_t chart = 0; chart < d.num_vars(); ++chart) {
    out.charts.push_back(chart_bound(d, chart, w, options));
    out.sections_bound = max(out.sections_bound, out.charts.back().chart_max);
  }
  out.total = out.sections_bound + out.alpha_term;
  return out;
}

}  // namespace

ComparisonBound comparison_bound(const Presentation& p1, const Presentation& p2, const PlaceExtension& w,
                                 const ComparisonOptions& options) {
  require_place_for(common_field(p1.field(), p2.field()), w);
  ComparisonBound out;
  out.forward = directional_bound(difference_presentation(p1, p2), w, options, "D1 - D2");
  out.backward = directional_bound(difference_presentation(p2, p1), w, options, "D2 - D1");
  out.bound = max(out.forward.total, out.backward.total);
  return out;
}

ComparisonReport verify_comparison(const Presentation& p1, const Presentation& p2, const PlaceExtension& w,
                                   std::span<const ProjectivePoint> points, const LogValue& bound,
                                   int precision_bits) {
  ComparisonReport report;
  report.bound = bound;
  report.max_difference = LogValue(precision_bits);
  const Form support = p1.divisor().numerator * p1.divisor().denominator;
  for (const auto& x : points) {
    PointComparison pc{x, local_weil(p1, x, w, precision_bits), local_weil(p2, x, w, precision_bits),
                       LogValue(precision_bits), LogValue(precision_bits)};
    pc.difference = pc.lambda1 - pc.lambda2;
    const FieldElement& biggest = x.coords()[point_chart_index(x, w)];
    pc.support_proximity = extend_abs(support.evaluate(x.coords()), w, precision_bits) -
                           extend_abs(biggest, w, precision_bits).scaled(support.degree());
    const LogValue magnitude = abs(pc.difference);
    report.max_difference = max(report.max_difference, magnitude);
    if (compare(magnitude, bound) > 0) report.pass = false;
    report.points.push_back(std::move(pc));
  }
  return report;
}

ComparisonReport verify_comparison(const Presentation& p1, const Presentation& p2, const PlaceExtension& w,
                                   std::span<const ProjectivePoint> points, const ComparisonOptions& options) {
  const ComparisonBound b = comparison_bound(p1, p2, w, options);
  return verify_comparison(p1, p2, w, points, b.bound, options.precision_bits);
}

// --- sampling ------------------------------------------------------------------

namespace {

bool off_support(const Presentation& p, std::span<const FieldElement> x) {
  return !p.divisor().numerator.evaluate(x).is_zero() && !p.divisor().denominator.evaluate(x).is_zero();
}

std::vector<FieldElement> on_line(const std::vector<Integer>& a, const std::vector<Integer>& b, const Rational& t) {
  std::vector<FieldElement> x;
  for (std::size_t j = 0; j < a.size(); ++j) x.emplace_back(Rational(a[j]) + t * Rational(b[j]));
  return x;
}

// |H(x)| <= 10^-depth * max|x_j|^deg H
bool archimedean_close(const Polynomial& h, const std::vector<FieldElement>& x, unsigned depth) {
  Rational biggest = 0;
  for (const auto& c : x) biggest = std::max<Rational>(biggest, abs(c.a()));
  Rational scale = 1;
  for (int i = 0; i < h.degree(); ++i) scale *= biggest;
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, depth);
  return abs(h.evaluate(x).a()) * Rational(ten_power) <= scale;
}

std::optional<std::vector<FieldElement>> near_root_archimedean(const Polynomial& h, std::mt19937_64& rng,
                                                               unsigned height, unsigned depth) {
  const std::size_t nv = h.num_vars();
  std::uniform_int_distribution<long> coord(-static_cast<long>(height), static_cast<long>(height));
  std::vector<Integer> a(nv), b(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    a[j] = coord(rng);
    b[j] = coord(rng);
  }
  auto phi_sign = [&](const Rational& t) { return sgn(h.evaluate(on_line(a, b, t)).a()); };
  // Scan t in [-8, 8] for a sign change.
  std::optional<std::pair<Rational, Rational>> bracket;
  Rational prev_t(-8);
  int prev_sign = phi_sign(prev_t);
  for (int step = -31; step <= 32 && !bracket; ++step) {
    Rational t(step, 4);
    t.canonicalize();
    const int s = phi_sign(t);
    if (s != 0 && prev_sign != 0 && s != prev_sign) bracket = std::make_pair(prev_t, t);
    prev_t = t;
    prev_sign = s;
  }
  if (!bracket) return std::nullopt;
  auto [lo, hi] = *bracket;
  const int lo_sign = phi_sign(lo);
  for (int iter = 0; iter < 400; ++iter) {
    Rational mid = (lo + hi) / 2;
    const int s = phi_sign(mid);
    if (s == 0) return std::nullopt;  // exact rational root: the point is in the support
    if (s == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
    auto x = on_line(a, b, mid);
    if (archimedean_close(h, x, depth)) return x;
  }
  return std::nullopt;
}

std::optional<std::vector<FieldElement>> near_root_padic(const Polynomial& h_in, const Integer& p,
                                                         std::mt19937_64& rng, unsigned height, unsigned depth) {
  // Clear denominators so that phi(t) is an integer for integer t.
  Integer den = 1;
  for (const auto& [m, c] : h_in.terms()) den = lcm(den, c.a().get_den());
  const Polynomial h = h_in.scaled(FieldElement(Rational(den)));
  const std::size_t nv = h.num_vars();
  std::uniform_int_distribution<long> coord(-static_cast<long>(height), static_cast<long>(height));
  std::vector<Integer> a(nv), b(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    a[j] = coord(rng);
    b[j] = coord(rng);
  }
  auto phi = [&](const Integer& t) { return h.evaluate(on_line(a, b, Rational(t))).a().get_num(); };
  // Depth-first search over p-adic digits of a root of phi; clustered roots mod p need
  // backtracking. The evaluation budget keeps degenerate lines (phi = 0 mod p) cheap.
  long budget = 4000;
  std::function<std::optional<Integer>(const Integer&, const Integer&, unsigned)> lift =
      [&](const Integer& t, const Integer& modulus, unsigned k) -> std::optional<Integer> {
    if (k == depth) return t;
    const Integer next_modulus = modulus * p;
    for (Integer c = 0; c < p && budget > 0; ++c) {
      const Integer candidate = t + c * modulus;
      --budget;
      if (!mpz_divisible_p(phi(candidate).get_mpz_t(), next_modulus.get_mpz_t())) continue;
      if (auto root = lift(candidate, next_modulus, k + 1)) return root;
    }
    return std::nullopt;
  };
  const auto root = lift(Integer(0), Integer(1), 0);
  if (!root) return std::nullopt;
  const Integer& t = *root;
  auto x = on_line(a, b, Rational(t));
  const bool primitive = std::any_of(x.begin(), x.end(), [&p](const FieldElement& c) {
    return !mpz_divisible_p(c.a().get_num().get_mpz_t(), p.get_mpz_t());
  });
  if (!primitive) return std::nullopt;
  return x;
}

}  // namespace

std::vector<ProjectivePoint> sample_points(const Presentation& p, const PlaceExtension& w, const SampleSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const std::size_t nv = p.num_vars();
  std::vector<ProjectivePoint> out;

  const Form support = p.divisor().numerator * p.divisor().denominator;
  const bool can_approach = support.degree() > 0 && support.poly().field().is_rational() &&
                            (w.is_archimedean() || w.base().prime() <= 10000);
  std::size_t near_target = can_approach ? std::min(spec.near_support, spec.count) : 0;
  for (int attempt = 0; near_target > 0 && attempt < 400; ++attempt) {
    auto x = w.is_archimedean() ? near_root_archimedean(support.poly(), rng, 16, spec.depth)
                                : near_root_padic(support.poly(), w.base().prime(), rng, 16, spec.depth);
    if (!x || !off_support(p, *x)) continue;
    out.emplace_back(std::move(*x));
    --near_target;
  }

  std::uniform_int_distribution<long> coord(-static_cast<long>(spec.height), static_cast<long>(spec.height));
  for (int attempt = 0; out.size() < spec.count && attempt < 100000; ++attempt) {
    std::vector<FieldElement> x;
    for (std::size_t j = 0; j < nv; ++j) x.emplace_back(coord(rng));
    if (std::all_of(x.begin(), x.end(), [](const FieldElement& c) { return c.is_zero(); })) continue;
    if (!off_support(p, x)) continue;
    out.emplace_back(std::move(x));
  }
  return out;
}

}  // namespace locweil
