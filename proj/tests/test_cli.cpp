#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "locweil/cli.hpp"
#include "locweil/parse.hpp"
#include "locweil/serialize.hpp"

using namespace locweil;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("lambda") {
  auto r = run({"lambda", "hyper:x0", "[2:3]", "p=2"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "1 * log 2");
  r = run({"lambda", "hyper:x0", "[2:3]", "inf"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out).rfind("0.405465", 0) == 0);
  CHECK(first_line(r.out).back() == '~');
  r = run({"lambda", "hyper:x0", "[1:0]", "inf"});
  CHECK(first_line(r.out) == "0");
  r = run({"lambda", "hyper:x0", "[0:1]", "inf"});
  CHECK(r.code == kExitDomain);
  CHECK(contains(r.err, "supp"));
  CHECK(run({"lambda", "hyper:x0 +", "[2:3]", "inf"}).code == kExitParse);
  CHECK(run({"lambda", "hyper:x0", "[2:3", "inf"}).code == kExitParse);
  CHECK(run({"lambda", "hyper:x0", "[2:3]", "p=4"}).code == kExitDomain);
  CHECK(run({"lambda", "hyper:x0", "[2:3]"}).code == kExitParse);
}

TEST_CASE("lambda over Q(sqrt d)") {
  auto plus = run({"--field", "Q(sqrt -1)", "lambda", "hyper:x0 - sqrt(-1)*x1", "[2:-1]", "p=5"});
  auto minus = run({"--field", "Q(sqrt -1)", "--embedding", "minus", "lambda", "hyper:x0 - sqrt(-1)*x1", "[2:-1]",
                    "p=5"});
  CHECK(plus.code == kExitOk);
  CHECK(minus.code == kExitOk);
  CHECK(first_line(plus.out) != first_line(minus.out));
  CHECK(run({"--embedding", "sideways", "lambda", "hyper:x0", "[2:3]", "inf"}).code == kExitParse);
}

TEST_CASE("height") {
  auto r = run({"height", "hyper:x0", "[2:3]"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "total  1.09861228866810969"));
  r = run({"height", "hyper:x0", "[1:1]"});
  CHECK(contains(r.out, "total  0\n"));
  r = run({"height", "hyper:x0", "[1:0]"});
  CHECK(contains(r.out, "inf    0\n"));
  CHECK(contains(r.out, "total  0\n"));
  CHECK(!contains(r.out, "p="));
  CHECK(run({"height", "hyper:x0", "[1:sqrt(2)]"}).code == kExitDomain);
}

TEST_CASE("compare and bound") {
  auto r = run({"compare", "hyper:x0", "hyper:x0", "inf"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "max |l1 - l2|  0\n"));
  CHECK(contains(r.out, "PASS"));

  r = run({"compare", "hyper:x0", "hyper:2*x0", "p=2"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "max |l1 - l2|  1 * log 2"));
  CHECK(contains(r.out, "PASS"));

  r = run({"compare", "hyper:x0", "hyper:x1", "inf"});
  CHECK(r.code == kExitDomain);
  CHECK(contains(r.err, "different divisors"));

  r = run({"--nsatz-cap", "5", "compare", "{\"n\":1,\"field\":\"Q\",\"divisor\":{\"numerator\":\"1\",\"denominator\":\"1\"},"
           "\"s\":[\"x0^5\",\"x1^5\"],\"t\":[\"x1^5\",\"(x0 + x1)^5\"]}",
           "principal:1,1", "inf", "--n", "1"});
  CHECK(r.code == kExitResource);
  CHECK(contains(r.err, "--nsatz-cap"));

  r = run({"compare", "monomial:x0,1,0", "monomial:x0,1,1", "p=3", "--point", "[2:3]", "--point", "[9:1]"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "points         2"));

  r = run({"bound", "hyper:x0", "hyper:2*x0", "inf"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "D1-D2 alpha"));
  CHECK(contains(r.out, "1/2"));
  CHECK(contains(r.out, "\nB "));
}

TEST_CASE("bound and compare JSON carry certificates verbatim") {
  auto r = run({"--json", "bound", "hyper:x0^2 - x1*x2", "monomial:x0^2 - x1*x2,1,1", "p=2"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  const auto& chart = j["forward"]["charts"][0];
  const Certificate c = certificate_from_json(chart["certificate"]);
  CHECK(verify_certificate(c));
  CHECK(chart["certificate"]["variables"] == Json::array({"u0", "u1"}));

  r = run({"compare", "--json", "hyper:x0", "hyper:2*x0", "inf", "--samples", "5", "--near", "2"});
  REQUIRE(r.code == kExitOk);
  const Json k = Json::parse(r.out);
  CHECK(k["pass"] == true);
  CHECK(k["points"].size() == 5);
  CHECK(k["bound"]["forward"]["alpha"] == "1/2");
}

TEST_CASE("certify") {
  auto r = run({"certify", "(u, 1-u)"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "g0            1\n"));
  CHECK(contains(r.out, "g1            1\n"));
  CHECK(contains(r.out, "degree_bound  1\n"));
  r = run({"certify", "(u^2, 1-u)", "--cap", "4"});
  CHECK(contains(r.out, "g1            u + 1\n"));
  r = run({"certify", "(u, u^2)", "--cap", "6"});
  CHECK(r.code == kExitResource);
  r = run({"certify", "(u, 1-u"});
  CHECK(r.code == kExitParse);
  r = run({"certify", "(w - 1, v*w - 1, v - 2)", "--vars", "v,w"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("certificate JSON round-trips") {
  const std::vector<std::string> inputs{"(u, 1-u)", "(u0^2 + u1^2 - 1, u0 - 2, u1)", "(2*u^2, 3 - u)",
                                        "(u - sqrt(2), u + sqrt(2))"};
  for (const auto& in : inputs) {
    auto r = run({"--json", "certify", in});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    const Certificate c = certificate_from_json(j);
    CHECK(verify_certificate(c));
    CHECK(to_json(c, j["variables"].get<std::vector<std::string>>()) == j);
    CHECK(j["sizes"].contains("inf"));
  }
  auto r = run({"--json", "certify", "(2*u^2, 3 - u)"});
  const Json j = Json::parse(r.out);
  CHECK(j["sizes"].contains("p=3"));
}

TEST_CASE("check-gen") {
  auto r = run({"check-gen", "(x0^2, x0*x1)"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "NOT GENERATED");
  r = run({"check-gen", "(x0, x1)"});
  CHECK(first_line(r.out) == "GENERATED");
  r = run({"--json", "check-gen", "(x0^2, x1^2, x2^2)"});
  CHECK(Json::parse(r.out)["generated"] == true);
  CHECK(run({"check-gen", "(x0, x1^2)"}).code == kExitDomain);
  CHECK(run({"check-gen", "(x0, x1 + 1)"}).code == kExitParse);
  // The dimension hint adds variables the forms do not mention.
  r = run({"check-gen", "(x0, x1)", "--n", "2"});
  CHECK(first_line(r.out) == "NOT GENERATED");
}

TEST_CASE("product-formula") {
  auto r = run({"product-formula", "-6/35"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "OK"));
  CHECK(contains(r.out, "1 * log 7\n"));
  CHECK(contains(r.out, "-1 * log 2\n"));
  CHECK(run({"product-formula", "−6/35"}).code == kExitOk);
  CHECK(run({"product-formula", "1000000"}).code == kExitOk);
  CHECK(run({"product-formula", "0"}).code == kExitDomain);
  CHECK(run({"product-formula", "1/"}).code == kExitParse);
  r = run({"--json", "product-formula", "1"});
  CHECK(Json::parse(r.out)["holds"] == true);
}

TEST_CASE("precision: flag, environment, validation") {
  auto digits = [](const std::string& line) { return line.size(); };
  const auto base = run({"lambda", "hyper:x0", "[2:3]", "inf"});
  const auto more = run({"--precision", "256", "lambda", "hyper:x0", "[2:3]", "inf"});
  CHECK(digits(first_line(more.out)) > digits(first_line(base.out)));
  setenv("LOCWEIL_PRECISION", "64", 1);
  const auto env = run({"lambda", "hyper:x0", "[2:3]", "inf"});
  const auto flag = run({"--precision", "256", "lambda", "hyper:x0", "[2:3]", "inf"});
  unsetenv("LOCWEIL_PRECISION");
  CHECK(digits(first_line(env.out)) < digits(first_line(base.out)));
  CHECK(first_line(flag.out) == first_line(more.out));
  CHECK(run({"--precision", "20", "lambda", "hyper:x0", "[2:3]", "inf"}).code == kExitParse);
  CHECK(run({"--nsatz-cap", "0", "certify", "(u, 1-u)"}).code == kExitParse);
}

TEST_CASE("file-based presentations") {
  const auto path = std::filesystem::temp_directory_path() / "locweil_test_presentation.json";
  {
    std::ofstream out(path);
    out << R"({"n": 1, "field": "Q", "divisor": {"numerator": "x0", "denominator": "1"},
               "deg_L": 1, "s": ["x0", "x1"], "deg_M": 0, "t": ["1"],
               "generation_status": {"s": "verified", "t": "verified"}})";
  }
  const auto r = run({"lambda", "@" + path.string(), "[2:3]", "p=2"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "1 * log 2");
  std::filesystem::remove(path);
  CHECK(run({"lambda", "@/nonexistent/file.json", "[2:3]", "p=2"}).code == kExitParse);
  CHECK(run({"lambda", "{not json", "[2:3]", "p=2"}).code == kExitParse);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"lambda", "sphere:x0", "[2:3]", "inf"}).code == kExitParse);
}
