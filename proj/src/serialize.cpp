#include "locweil/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "locweil/errors.hpp"
#include "locweil/parse.hpp"

namespace locweil {

namespace {

// nlohmann's own exceptions become ParseError so the CLI maps them to the parse exit code.
template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid ") + what + ": " + e.what());
  }
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("not a rational number: \"" + text + "\"");
  q.canonicalize();
  if (q.get_den() == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return q;
}

}  // namespace

Json to_json(const LogValue& v) {
  Json exact = Json::object();
  for (const auto& [p, c] : v.exact()) exact[p.get_str()] = c.get_str();
  return Json{{"exact", exact}, {"arch", v.arch().to_string()}, {"total", v.total().to_double()}};
}

LogValue log_value_from_json(const Json& j, int precision_bits) {
  return guarded("log value", [&] {
    Real arch(precision_bits);
    const std::string arch_text = j.at("arch").get<std::string>();
    if (mpfr_set_str(arch.get(), arch_text.c_str(), 10, MPFR_RNDN) != 0) {
      throw ParseError("not a decimal number: \"" + arch_text + "\"");
    }
    LogValue out = LogValue::archimedean(std::move(arch));
    for (const auto& [p, c] : j.at("exact").items()) {
      const Integer prime(p);
      if (!is_prime(prime)) throw ParseError("exact part keyed by a non-prime: " + p);
      out += LogValue::prime_multiple(prime, parse_rational(c.get<std::string>()), precision_bits);
    }
    return out;
  });
}

Json to_json(const Presentation& p) {
  auto forms = [](const std::vector<Form>& list) {
    Json arr = Json::array();
    for (const auto& f : list) arr.push_back(f.to_string());
    return arr;
  };
  return Json{
      {"n", p.ambient_dimension()},
      {"field", p.field().to_string()},
      {"divisor", {{"numerator", p.divisor().numerator.to_string()},
                   {"denominator", p.divisor().denominator.to_string()}}},
      {"deg_L", p.deg_L()},
      {"s", forms(p.s())},
      {"deg_M", p.deg_M()},
      {"t", forms(p.t())},
      {"generation_status", {{"s", to_string(p.s_status())}, {"t", to_string(p.t_status())}}},
  };
}

Presentation presentation_from_json(const Json& j) {
  return guarded("presentation", [&] {
    const auto n = j.at("n").get<std::size_t>();
    if (n < 1) throw ParseError("ambient dimension n must be at least 1");
    const Field declared = Field::parse(j.at("field").get<std::string>());
    auto read_forms = [n](const Json& arr) {
      std::vector<Form> out;
      for (const auto& item : arr) out.push_back(parse_form(item.get<std::string>(), n + 1));
      return out;
    };
    Divisor divisor{parse_form(j.at("divisor").at("numerator").get<std::string>(), n + 1),
                    parse_form(j.at("divisor").at("denominator").get<std::string>(), n + 1)};
    auto s = read_forms(j.at("s"));
    auto t = read_forms(j.at("t"));
    GenerationStatus s_status = GenerationStatus::unverified;
    GenerationStatus t_status = GenerationStatus::unverified;
    if (j.contains("generation_status")) {
      s_status = parse_generation_status(j["generation_status"].at("s").get<std::string>());
      t_status = parse_generation_status(j["generation_status"].at("t").get<std::string>());
    }
    Presentation p(std::move(divisor), std::move(s), std::move(t), s_status, t_status);
    if (j.contains("deg_L") && j["deg_L"].get<int>() != p.deg_L()) {
      throw ParseError("deg_L does not match the degree of the s-sections");
    }
    if (j.contains("deg_M") && j["deg_M"].get<int>() != p.deg_M()) {
      throw ParseError("deg_M does not match the degree of the t-sections");
    }
    if (!p.field().is_rational() && p.field() != declared) {
      throw ParseError("coefficients lie in " + p.field().to_string() + ", declared " + declared.to_string());
    }
    return p;
  });
}

Json to_json(const Certificate& c, const std::vector<std::string>& variables, int precision_bits) {
  Json pairs = Json::array();
  std::vector<Rational> coefficients;
  Field field;
  for (const auto& pair : c.pairs) {
    field = common_field(field, common_field(pair.f.field(), pair.g.field()));
    pairs.push_back({{"f", pair.f.to_string(variables)}, {"g", pair.g.to_string(variables)}});
    for (const auto& [m, coeff] : pair.g.terms()) {
      coefficients.push_back(coeff.a());
      coefficients.push_back(coeff.b());
    }
  }
  std::erase(coefficients, Rational(0));
  Json sizes = Json::object();
  auto at = [&field](const Place& v) {
    return field.is_rational() ? PlaceExtension(v) : PlaceExtension(v, field.d);
  };
  sizes["inf"] = to_json(certificate_size(c, at(Place::infinity()), precision_bits));
  for (const auto& place : relevant_finite_places(coefficients)) {
    sizes[place.to_string()] = to_json(certificate_size(c, at(place), precision_bits));
  }
  return Json{{"variables", variables}, {"pairs", pairs}, {"degree_bound", c.degree_bound}, {"sizes", sizes}};
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    const auto variables = j.at("variables").get<std::vector<std::string>>();
    Certificate c;
    for (const auto& pair : j.at("pairs")) {
      c.pairs.push_back({parse_polynomial(pair.at("f").get<std::string>(), variables),
                         parse_polynomial(pair.at("g").get<std::string>(), variables)});
    }
    c.degree_bound = j.at("degree_bound").get<int>();
    return c;
  });
}

Json to_json(const ProjectivePoint& x) { return x.to_string(); }

ProjectivePoint point_from_json(const Json& j) {
  return guarded("point", [&] { return ProjectivePoint::parse(j.get<std::string>()); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("\"" + path + "\" is not valid JSON: " + e.what(), e.byte);
  }
}

}  // namespace locweil
