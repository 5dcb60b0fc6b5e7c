#include "locweil/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "locweil/errors.hpp"
#include "locweil/groebner.hpp"
#include "locweil/nullstellensatz.hpp"
#include "locweil/parse.hpp"
#include "locweil/presentation.hpp"
#include "locweil/serialize.hpp"
#include "locweil/weil.hpp"

namespace locweil {

namespace {

struct JobConfig {
  int precision_bits = kDefaultPrecision;
  std::optional<unsigned> nsatz_cap;
  std::optional<unsigned> gb_cap;
  bool json = false;
  std::string field_text;
  std::string embedding = "plus";

  GroebnerLimits groebner_limits() const {
    GroebnerLimits limits;
    if (gb_cap) limits.max_pairs = *gb_cap;
    return limits;
  }
};

int default_precision() {
  const char* env = std::getenv("LOCWEIL_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0') throw ParseError(std::string("LOCWEIL_PRECISION is not an integer: \"") + env + "\"");
  return static_cast<int>(bits);
}

// "x0*x1" -> 2 variables; a hint from the point or --n can only enlarge it.
std::size_t count_projective_vars(const std::vector<std::string>& texts, std::size_t hint) {
  std::size_t count = hint;
  for (const auto& name : infer_variables(texts)) {
    if (name.size() < 2 || name[0] != 'x') throw ParseError("projective forms use variables x0, x1, ...; got " + name);
    count = std::max<std::size_t>(count, std::stoul(name.substr(1)) + 1);
  }
  return std::max<std::size_t>(count, 2);
}

// hyper:F | monomial:F,G,e | principal:F,G | @file.json | {...}
Presentation load_presentation(const std::string& spec, std::size_t vars_hint) {
  if (spec.empty()) throw ParseError("empty presentation");
  if (spec.front() == '@') return presentation_from_json(read_json_file(spec.substr(1)));
  if (spec.front() == '{') {
    try {
      return presentation_from_json(Json::parse(spec));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("inline presentation is not valid JSON: ") + e.what(), e.byte);
    }
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ParseError("presentation must be hyper:F, monomial:F,G,e, principal:F,G, @file.json or JSON");
  }
  const std::string kind = spec.substr(0, colon);
  const auto parts = split_list(std::string_view(spec).substr(colon + 1));
  auto forms_of = [&](std::size_t count) {
    const std::vector<std::string> texts(parts.begin(), parts.begin() + static_cast<long>(count));
    const std::size_t nv = count_projective_vars(texts, vars_hint);
    std::vector<Form> forms;
    for (const auto& t : texts) forms.push_back(parse_form(t, nv));
    return forms;
  };
  if (kind == "hyper") {
    if (parts.size() != 1) throw ParseError("hyper: takes exactly one form");
    return make_hypersurface_presentation(forms_of(1)[0]);
  }
  if (kind == "principal") {
    if (parts.size() != 2) throw ParseError("principal: takes two forms F,G");
    const auto forms = forms_of(2);
    return make_principal_presentation(forms[0], forms[1]);
  }
  if (kind == "monomial") {
    if (parts.size() != 3) throw ParseError("monomial: takes F,G,twist");
    const auto forms = forms_of(2);
    unsigned twist = 0;
    try {
      std::size_t used = 0;
      twist = static_cast<unsigned>(std::stoul(parts[2], &used));
      if (used != parts[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ParseError("twist must be a non-negative integer, got \"" + parts[2] + "\"");
    }
    return make_monomial_presentation(forms[0], forms[1], twist);
  }
  throw ParseError("unknown presentation kind \"" + kind + "\"");
}

PlaceExtension resolve_place(const std::string& text, Field field, const JobConfig& config) {
  if (!config.field_text.empty()) field = common_field(field, Field::parse(config.field_text));
  const Place base = Place::parse(text);
  if (field.is_rational()) return PlaceExtension(base);
  SplitChoice choice = SplitChoice::plus;
  if (config.embedding == "minus") {
    choice = SplitChoice::minus;
  } else if (config.embedding != "plus") {
    throw ParseError("embedding must be plus or minus");
  }
  return PlaceExtension(base, field.d, choice);
}

LogValue exact_part(const LogValue& v) { return v - LogValue::archimedean(v.arch()); }

std::string render_total(const Real& total, bool exact_zero) {
  return exact_zero ? "0" : total.to_string() + "~";
}

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
}

// --- commands --------------------------------------------------------------------

int cmd_lambda(const JobConfig& config, const std::string& spec, const std::string& point_text,
               const std::string& place_text, std::ostream& out) {
  const auto x = ProjectivePoint::parse(point_text);
  const auto p = load_presentation(spec, x.num_vars());
  const auto w = resolve_place(place_text, common_field(p.field(), x.field()), config);
  const LogValue value = local_weil(p, x, w, config.precision_bits);
  if (config.json) {
    out << Json{{"place", w.to_string()}, {"point", to_json(x)}, {"lambda", to_json(value)}}.dump(2) << '\n';
  } else {
    out << value.render() << '\n';
    print_rows(out, {{"place", w.to_string()},
                     {"point", x.to_string()},
                     {"exact", exact_part(value).render()},
                     {"arch", LogValue::archimedean(value.arch()).render()}});
  }
  return kExitOk;
}

int cmd_height(const JobConfig& config, const std::string& spec, const std::string& point_text, std::ostream& out) {
  const auto x = ProjectivePoint::parse(point_text);
  const auto p = load_presentation(spec, x.num_vars());
  const auto h = global_height(p, x, {}, config.precision_bits);
  if (config.json) {
    Json rows = Json::array();
    for (const auto& r : h.rows) rows.push_back({{"place", r.place.to_string()}, {"value", to_json(r.value)}});
    out << Json{{"point", to_json(x)}, {"rows", rows}, {"sum", to_json(h.sum)}, {"total", h.total.to_double()}}.dump(2)
        << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& r : h.rows) rows.emplace_back(r.place.to_string(), r.value.render());
    rows.emplace_back("sum", h.sum.render());
    rows.emplace_back("total", render_total(h.total, h.sum.is_zero()));
    print_rows(out, rows);
  }
  return kExitOk;
}

Json bound_json(const ComparisonBound& b, std::size_t num_vars, int bits) {
  const auto names = affine_names(num_vars - 1);
  auto direction = [&](const DirectionalBound& d) {
    Json charts = Json::array();
    for (const auto& c : d.charts) {
      charts.push_back({{"chart", c.chart},
                        {"certificate", to_json(c.certificate, names, bits)},
                        {"multiplier_bound", to_json(c.multiplier_bound)},
                        {"inverse_bound", to_json(c.inverse_bound)},
                        {"chart_max", to_json(c.chart_max)}});
    }
    return Json{{"alpha", d.alpha.to_string()},
                {"alpha_term", to_json(d.alpha_term)},
                {"sections_bound", to_json(d.sections_bound)},
                {"total", to_json(d.total)},
                {"charts", charts}};
  };
  return Json{{"forward", direction(b.forward)}, {"backward", direction(b.backward)}, {"bound", to_json(b.bound)}};
}

struct PairInputs {
  Presentation p1;
  Presentation p2;
  PlaceExtension w;
};

PairInputs load_pair(const JobConfig& config, const std::string& s1, const std::string& s2,
                     const std::string& place_text, std::size_t vars_hint) {
  auto p1 = load_presentation(s1, vars_hint);
  auto p2 = load_presentation(s2, std::max(vars_hint, p1.num_vars()));
  if (p1.num_vars() != p2.num_vars()) p1 = load_presentation(s1, p2.num_vars());
  auto w = resolve_place(place_text, common_field(p1.field(), p2.field()), config);
  return {std::move(p1), std::move(p2), std::move(w)};
}

ComparisonOptions comparison_options(const JobConfig& config) {
  ComparisonOptions options;
  options.certificate_cap = config.nsatz_cap;
  options.validation.limits = config.groebner_limits();
  options.precision_bits = config.precision_bits;
  return options;
}

int cmd_bound(const JobConfig& config, const std::string& s1, const std::string& s2, const std::string& place_text,
              std::size_t vars_hint, std::ostream& out) {
  const auto in = load_pair(config, s1, s2, place_text, vars_hint);
  const auto b = comparison_bound(in.p1, in.p2, in.w, comparison_options(config));
  if (config.json) {
    out << bound_json(b, in.p1.num_vars(), config.precision_bits).dump(2) << '\n';
    return kExitOk;
  }
  auto rows_for = [](const char* label, const DirectionalBound& d, std::vector<std::pair<std::string, std::string>>& rows) {
    rows.emplace_back(std::string(label) + " alpha", d.alpha.to_string());
    rows.emplace_back(std::string(label) + " |log|alpha||", d.alpha_term.render());
    for (const auto& c : d.charts) {
      rows.emplace_back(std::string(label) + " chart " + std::to_string(c.chart),
                        c.chart_max.render() + "  (certificate degree " +
                            std::to_string(c.certificate.degree_bound) + ")");
    }
    rows.emplace_back(std::string(label) + " total", d.total.render());
  };
  std::vector<std::pair<std::string, std::string>> rows;
  rows_for("D1-D2", b.forward, rows);
  rows_for("D2-D1", b.backward, rows);
  rows.emplace_back("B", b.bound.render());
  print_rows(out, rows);
  return kExitOk;
}

int cmd_compare(const JobConfig& config, const std::string& s1, const std::string& s2, const std::string& place_text,
                std::size_t vars_hint, const SampleSpec& spec, const std::vector<std::string>& point_texts,
                std::ostream& out) {
  const auto in = load_pair(config, s1, s2, place_text, vars_hint);
  std::vector<ProjectivePoint> points;
  for (const auto& t : point_texts) {
    // CLI11 strips the brackets of "[a:b]" when filling a vector option.
    points.push_back(ProjectivePoint::parse(t.starts_with('[') ? t : "[" + t + "]"));
  }
  if (points.empty()) points = sample_points(in.p1, in.w, spec);
  const auto b = comparison_bound(in.p1, in.p2, in.w, comparison_options(config));
  const auto report = verify_comparison(in.p1, in.p2, in.w, points, b.bound, config.precision_bits);
  if (config.json) {
    Json pts = Json::array();
    for (const auto& pc : report.points) {
      pts.push_back({{"point", to_json(pc.point)},
                     {"lambda1", to_json(pc.lambda1)},
                     {"lambda2", to_json(pc.lambda2)},
                     {"difference", to_json(pc.difference)},
                     {"support_proximity", to_json(pc.support_proximity)}});
    }
    out << Json{{"place", in.w.to_string()},
                {"bound", bound_json(b, in.p1.num_vars(), config.precision_bits)},
                {"max_difference", to_json(report.max_difference)},
                {"pass", report.pass},
                {"points", pts}}
               .dump(2)
        << '\n';
  } else {
    print_rows(out, {{"place", in.w.to_string()},
                     {"B", b.bound.render()},
                     {"points", std::to_string(report.points.size())},
                     {"max |l1 - l2|", report.max_difference.render()},
                     {"result", report.pass ? "PASS" : "FAIL"}});
  }
  return report.pass ? kExitOk : kExitCheckFailed;
}

int cmd_certify(const JobConfig& config, const std::string& list, const std::string& vars_text,
                std::optional<unsigned> cap, std::ostream& out) {
  const auto texts = split_list(list);
  if (texts.empty()) throw ParseError("empty polynomial list");
  std::vector<std::string> vars = vars_text.empty() ? infer_variables(texts) : split_list(vars_text);
  if (vars.empty()) vars = {"u0"};
  std::vector<Polynomial> f;
  for (const auto& t : texts) f.push_back(parse_polynomial(t, vars));
  const unsigned degree_cap = cap.value_or(config.nsatz_cap.value_or(default_certificate_cap(f)));
  const auto result = find_certificate(f, degree_cap);
  if (const auto* none = std::get_if<NoCertificateAtCap>(&result)) {
    throw ResourceError("no certificate of degree <= " + std::to_string(none->cap) +
                        "; either the family has a common zero or the cap is too small (raise --cap)");
  }
  const auto& c = std::get<Certificate>(result);
  if (config.json) {
    out << to_json(c, vars, config.precision_bits).dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    rows.emplace_back("g" + std::to_string(i), c.pairs[i].g.to_string(vars));
  }
  rows.emplace_back("degree_bound", std::to_string(c.degree_bound));
  rows.emplace_back("verified", verify_certificate(c) ? "yes" : "NO");
  print_rows(out, rows);
  return kExitOk;
}

int cmd_check_gen(const JobConfig& config, const std::string& list, std::size_t vars_hint,
                  std::optional<unsigned> cap, std::ostream& out) {
  const auto texts = split_list(list);
  if (texts.empty()) throw ParseError("empty section list");
  const std::size_t nv = count_projective_vars(texts, vars_hint);
  std::vector<Form> sections;
  for (const auto& t : texts) sections.push_back(parse_form(t, nv));
  for (const auto& s : sections) {
    if (s.degree() != sections.front().degree()) throw DomainError("sections must share one degree");
  }
  const auto report = generation_check(sections, cap, config.groebner_limits());
  if (config.json) {
    Json powers = Json::array();
    for (const auto& p : report.pure_powers) powers.push_back(p ? Json(*p) : Json(nullptr));
    out << Json{{"generated", report.generated()},
                {"verdict", to_string(report.verdict)},
                {"cap", report.cap},
                {"pure_powers", powers}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << (report.generated() ? "GENERATED" : "NOT GENERATED") << '\n';
  std::vector<std::pair<std::string, std::string>> rows;
  const auto names = projective_names(nv);
  for (std::size_t i = 0; i < report.pure_powers.size(); ++i) {
    const auto& p = report.pure_powers[i];
    rows.emplace_back(names[i], p ? names[i] + "^" + std::to_string(*p) + " in ideal" : "no power up to cap");
  }
  rows.emplace_back("cap", std::to_string(report.cap));
  print_rows(out, rows);
  return kExitOk;
}

int cmd_product_formula(const JobConfig& config, const std::string& text, std::ostream& out) {
  const FieldElement value = parse_coefficient(text);
  if (!value.is_rational()) throw DomainError("product-formula takes a rational number");
  if (value.is_zero()) throw DomainError("product formula is undefined at 0");
  const auto report = product_formula_check(value.a());
  const Rational q = value.a();
  std::vector<Place> places{Place::infinity()};
  for (const auto& v : relevant_finite_places(std::span<const Rational>(&q, 1))) places.push_back(v);
  if (config.json) {
    Json rows = Json::array();
    for (const auto& v : places) {
      rows.push_back({{"place", v.to_string()}, {"value", to_json(log_abs(q, v, config.precision_bits))}});
    }
    out << Json{{"value", q.get_str()}, {"holds", report.holds}, {"rows", rows}}.dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& v : places) rows.emplace_back(v.to_string(), log_abs(q, v, config.precision_bits).render());
    rows.emplace_back("result", report.holds ? "OK" : "FAIL");
    print_rows(out, rows);
  }
  return report.holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Weil functions and comparison bounds on projective space", "locweil"};
  app.fallthrough();
  app.require_subcommand(1);

  JobConfig config;
  std::optional<int> precision_flag;
  app.add_option("--precision", precision_flag, "Working precision in bits (default $LOCWEIL_PRECISION or 128)");
  app.add_option("--nsatz-cap", config.nsatz_cap, "Degree cap for Nullstellensatz certificates")
      ->check(CLI::PositiveNumber);
  app.add_option("--gb-cap", config.gb_cap, "Pair budget for Buchberger's algorithm")->check(CLI::PositiveNumber);
  app.add_flag("--json", config.json, "Emit JSON instead of a table");
  app.add_option("--field", config.field_text, "Coefficient field, Q or \"Q(sqrt d)\"");
  app.add_option("--embedding", config.embedding, "Place above a split prime or real place: plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));

  std::string spec1, spec2, point, place, list, vars, number;
  std::size_t n = 0;
  std::optional<unsigned> cap;
  SampleSpec sample;
  std::vector<std::string> points;

  auto* lambda = app.add_subcommand("lambda", "Local Weil function of a presentation at a point and place");
  lambda->add_option("presentation", spec1, "hyper:F, monomial:F,G,e, principal:F,G, @file.json")->required();
  lambda->add_option("point", point, "Point such as [2:3]")->required();
  lambda->add_option("place", place, "inf or p=<prime>")->required();

  auto* height = app.add_subcommand("height", "Global height as a sum of local Weil functions (Q only)");
  height->add_option("presentation", spec1)->required();
  height->add_option("point", point)->required();

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("presentation1", spec1)->required();
    sub->add_option("presentation2", spec2)->required();
    sub->add_option("place", place)->required();
    sub->add_option("--n", n, "Dimension of the ambient P^n when the forms do not show it");
  };
  auto* bound = app.add_subcommand("bound", "Effective bound B for |lambda1 - lambda2| at a place");
  add_pair(bound);

  auto* compare = app.add_subcommand("compare", "Bound B together with sampled differences");
  add_pair(compare);
  compare->add_option("--samples", sample.count, "Number of sampled points");
  compare->add_option("--near", sample.near_support, "How many samples approach the support");
  compare->add_option("--height", sample.height, "Coordinate bound for random points");
  compare->add_option("--depth", sample.depth, "Closeness exponent for near-support samples");
  compare->add_option("--seed", sample.seed, "Random seed");
  compare->add_option("--point", points, "Explicit point (repeatable); disables sampling");

  auto* certify = app.add_subcommand("certify", "Nullstellensatz certificate 1 = sum f_i g_i");
  certify->add_option("polynomials", list, "List such as \"(u, 1-u)\"")->required();
  certify->add_option("--vars", vars, "Variable names, e.g. \"u,v\"");
  certify->add_option("--cap", cap, "Degree cap (overrides --nsatz-cap)");

  auto* check_gen = app.add_subcommand("check-gen", "Do homogeneous sections generate (no common zero on P^n)?");
  check_gen->add_option("sections", list, "List such as \"(x0^2, x0*x1)\"")->required();
  check_gen->add_option("--n", n, "Dimension of P^n");
  check_gen->add_option("--cap", cap, "Power cap N for x_i^N in the ideal");

  auto* product = app.add_subcommand("product-formula", "Check the product formula for a nonzero rational");
  product->add_option("value", number)->required();

  std::vector<const char*> argv{"locweil"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    config.precision_bits = precision_flag.value_or(default_precision());
    if (config.precision_bits < 53) throw ParseError("precision must be at least 53 bits");
    const std::size_t vars_hint = n == 0 ? 0 : n + 1;
    if (*lambda) return cmd_lambda(config, spec1, point, place, out);
    if (*height) return cmd_height(config, spec1, point, out);
    if (*bound) return cmd_bound(config, spec1, spec2, place, vars_hint, out);
    if (*compare) return cmd_compare(config, spec1, spec2, place, vars_hint, sample, points, out);
    if (*certify) return cmd_certify(config, list, vars, cap, out);
    if (*check_gen) return cmd_check_gen(config, list, vars_hint, cap, out);
    if (*product) return cmd_product_formula(config, number, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "effort cap reached: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitParse;
}

}  // namespace locweil
