#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodec/decomposition.hpp"
#include "monodec/dfa.hpp"
#include "monodec/monoid.hpp"
#include "monodec/period.hpp"
#include "monodec/probability.hpp"

namespace monodec {

/// One analysis request as given on the command line.
struct AnalysisRequest {
  std::optional<std::string> regex;
  std::optional<std::string> dfa_path;
  std::string alphabet;                              // overrides the letters of the regex
  std::vector<std::string> gammas;                   // "a,b"; empty means the whole alphabet
  std::optional<std::vector<std::size_t>> periods;
  std::size_t length = 10;                           // exact series up to this length
  double tol = kDefaultTolerance;
  std::size_t cap = kDefaultIterationCap;
};

/// "2,2" -> {2, 2}. Error{InvalidPeriod} for anything but positive integers.
std::vector<std::size_t> parse_periods(const std::string& text);

struct Source {
  std::string description;   // "regex ..." or "dfa PATH"
  Dfa dfa;                   // as given, unreachable states removed
  Dfa minimal;
  std::vector<std::string> warnings;
};

/// Exactly one of regex / dfa_path must be set (Error{InvalidArgument}).
Source load_source(const AnalysisRequest& request);

std::vector<LetterSet> parse_gammas(const AnalysisRequest& request, const SyntacticMonoid& m);

/// "{e,[0,0,1]}"
std::string brace_list(const std::vector<std::string>& items);
/// Shortest round-trip decimal; integral values keep a ".0".
std::string format_double(double x);
std::string format_rational(const Rational& q);

/// Text and JSON views of one pipeline stage. The JSON views nest the
/// per-module documents unchanged.
struct Report {
  nlohmann::ordered_json json;
  std::string text;
};

Report monoid_report(const Source& src, const SyntacticMonoid& m);
Report period_report(const SyntacticMonoid& m, const PeriodSignature& sig);
Report probability_report(const Source& src, const SyntacticMonoid& m,
                          const CanonicalDecomposition* dec, const AnalysisRequest& request);
Report zero_one_report(const Source& src, const SyntacticMonoid& m,
                       const CanonicalDecomposition* dec, const AnalysisRequest& request);
Report decomposition_report(const Source& src, const CanonicalDecomposition& dec);

/// The full pipeline: monoid, periods, decomposition, residual monoids and
/// block languages, probabilities, zero-one verdicts and the wreath divisor.
Report analyze(const AnalysisRequest& request);

}  // namespace monodec
