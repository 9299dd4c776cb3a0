#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monodec/error.hpp"
#include "monodec/report.hpp"
#include "support.hpp"

using namespace monodec;

namespace {

AnalysisRequest regex_request(const std::string& regex) {
  AnalysisRequest req;
  req.regex = regex;
  return req;
}

AnalysisRequest dfa_request(const std::string& name) {
  AnalysisRequest req;
  req.dfa_path = support::data_path(name + ".json");
  return req;
}

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

bool contains(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST_CASE("period lists") {
  CHECK(parse_periods("2,2") == std::vector<std::size_t>{2, 2});
  CHECK(parse_periods("3") == std::vector<std::size_t>{3});
  for (const char* bad : {"", "0", "2,", "a", "-1", "2,,2"})
    CHECK(error_of([&] { parse_periods(bad); }) == ErrorKind::InvalidPeriod);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(0.0) == "0.0");
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(brace_list({"e", "[0,0,1]"}) == "{e,[0,0,1]}");
  CHECK(brace_list({}) == "{}");
}

TEST_CASE("exactly one source") {
  AnalysisRequest none;
  CHECK(error_of([&] { load_source(none); }) == ErrorKind::InvalidArgument);
  AnalysisRequest both = regex_request("a");
  both.dfa_path = support::data_path("a3.json");
  CHECK(error_of([&] { load_source(both); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("alphabet handling") {
  auto src = load_source(regex_request("a(a|b)*"));
  CHECK(src.dfa.alphabet() == std::vector<std::string>{"a", "b"});

  auto only_a = regex_request("a*");
  only_a.alphabet = "ab";
  CHECK(load_source(only_a).dfa.alphabet_size() == 2);

  auto mismatch = dfa_request("a3");
  mismatch.alphabet = "abc";
  CHECK(error_of([&] { load_source(mismatch); }) == ErrorKind::AlphabetMismatch);

  auto missing = regex_request("ac");
  missing.alphabet = "ab";
  CHECK(error_of([&] { load_source(missing); }) == ErrorKind::AlphabetMismatch);
}

TEST_CASE("letter subsets from the request") {
  auto req = dfa_request("a1");
  req.gammas = {"a", "b"};
  auto src = load_source(req);
  auto m = transition_monoid(src.minimal);
  auto gammas = parse_gammas(req, m);
  REQUIRE(gammas.size() == 2);
  CHECK(gammas[0] == LetterSet{0});
  CHECK(parse_gammas(dfa_request("a1"), m) == std::vector<LetterSet>{{0, 1}});
}

TEST_CASE("analysis of the third language") {
  auto req = regex_request("a((a|b)(a|b))*|b(a|b)*");
  req.gammas = {"a,b"};
  auto rep = analyze(req);
  const auto& j = rep.json;
  CHECK(j["monoid"]["order"] == 5);
  CHECK(j["signature"]["periods"] == nlohmann::ordered_json::array({2}));
  CHECK(j["decomposition"]["K"] == 3);
  CHECK(j["residual_monoids"].size() == 2);
  CHECK(j["block_languages"].size() == 3);
  auto acc = j["probability"]["accumulation"];
  REQUIRE(acc.size() == 2);
  CHECK(std::abs(acc[0]["mu"].get<double>() - 0.5) < 1e-6);
  CHECK(std::abs(acc[1]["mu"].get<double>() - 1.0) < 1e-6);
  CHECK(j["probability"]["zero_one"]["basic"] == "oscillating");
  CHECK(j["wreath"]["equivariant"] == true);

  CHECK(contains(rep.text, "monoid order: 5\n"));
  CHECK(contains(rep.text, "K: 3\n"));
  CHECK(contains(rep.text, "r=0: no; r=1: yes (witness {e})"));
  CHECK(contains(rep.text, "accumulation: (0.5"));
}

TEST_CASE("analysis of the first language with two subsets") {
  auto req = dfa_request("a1");
  req.gammas = {"a", "b"};
  auto rep = analyze(req);
  CHECK(rep.json["signature"]["periods"] == nlohmann::ordered_json::array({2, 2}));
  CHECK(rep.json["decomposition"]["K"] == 1);
  CHECK(rep.json["residual_monoids"].empty());
}

TEST_CASE("trivial period warns and still succeeds") {
  auto rep = analyze(regex_request("(a|b)*"));
  bool warned = false;
  for (const auto& w : rep.json["warnings"]) warned |= contains(w.get<std::string>(), "PeriodTrivial");
  CHECK(warned);
  CHECK(contains(rep.text, "warning: PeriodTrivial"));
}

TEST_CASE("analysis is deterministic") {
  for (const char* regex : {"a((a|b)(a|b))*|b(a|b)*", "(ab|c)*", "(a|b)*aa(a|b)*|((a|b)(a|b))*"}) {
    auto a = analyze(regex_request(regex));
    auto b = analyze(regex_request(regex));
    CHECK(a.json.dump() == b.json.dump());
    CHECK(a.text == b.text);
  }
}

TEST_CASE("probability report") {
  auto req = dfa_request("a3");
  req.length = 2;
  auto src = load_source(req);
  auto m = transition_monoid(src.minimal);
  auto rep = probability_report(src, m, nullptr, req);
  CHECK(rep.text.ends_with("2 1/2\n"));
  auto series = rep.json["mu_series"];
  REQUIRE(series.size() == 3);
  CHECK(series[2]["num"] == "1");
  CHECK(series[2]["den"] == "2");
  CHECK(rep.json["period"] == 2);
  CHECK(rep.json["sinks"].size() == 2);
}

TEST_CASE("zero-one report line") {
  auto req = dfa_request("a3");
  auto src = load_source(req);
  auto m = transition_monoid(src.minimal);
  auto dec = canonical_decomposition(m, build_signature(m, parse_gammas(req, m)));
  auto rep = zero_one_report(src, m, &dec, req);
  CHECK(rep.text == "basic: oscillating; r=0: no; r=1: yes (witness {e})\n");
  CHECK(rep.json["residual"].size() == 3);

  auto a1 = dfa_request("a1");
  a1.gammas = {"a", "b"};
  auto s1 = load_source(a1);
  auto m1 = transition_monoid(s1.minimal);
  auto d1 = canonical_decomposition(m1, build_signature(m1, parse_gammas(a1, m1)));
  auto out = zero_one_report(s1, m1, &d1, a1);
  CHECK(contains(out.text, "residual: needs a single maximal period"));
}

TEST_CASE("monoid and decomposition reports") {
  auto req = dfa_request("a3");
  auto src = load_source(req);
  auto m = transition_monoid(src.minimal);
  auto mono = monoid_report(src, m);
  CHECK(mono.json["order"] == 5);
  CHECK_FALSE(mono.text.empty());
  auto dec = canonical_decomposition(m, build_signature(m, parse_gammas(req, m)));
  auto de = decomposition_report(src, dec);
  CHECK(de.json["checks"]["homomorphism_on_classes"] == true);
  CHECK(de.json["checks"]["injective"] == true);
  CHECK(contains(de.text, "on padded coordinates no"));
}
