// monodec: syntactic monoids, periods and decompositions of regular languages.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "monodec/error.hpp"
#include "monodec/oracle.hpp"
#include "monodec/report.hpp"

using namespace monodec;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
  AnalysisRequest request;
  std::string periods;
  std::string dot_path;
  bool json = false;
};

void add_common(CLI::App* cmd, Options& opt) {
  auto* regex = cmd->add_option("--regex", opt.request.regex, "regular expression over [a-z0-9], '&' for the empty word");
  auto* dfa = cmd->add_option("--dfa", opt.request.dfa_path, "automaton in JSON")->check(CLI::ExistingFile);
  regex->excludes(dfa);
  cmd->add_option("--alphabet", opt.request.alphabet, "alphabet, e.g. \"ab\"");
  cmd->add_option("--gamma", opt.request.gammas, "letter subset \"a,b\" (repeatable)");
  cmd->add_option("--periods", opt.periods, "periods \"2,2\", one per subset");
  cmd->add_flag("--json", opt.json, "JSON output");
  cmd->add_option("--dot", opt.dot_path, "write the Cayley graph in DOT");
  cmd->add_option("--length", opt.request.length, "exact probabilities up to this length");
  cmd->add_option("--tol", opt.request.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", opt.request.cap, "largest length iterated")->check(CLI::PositiveNumber);
}

void write_dot(const Options& opt, const SyntacticMonoid& m) {
  if (opt.dot_path.empty()) return;
  std::ofstream out(opt.dot_path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.dot_path);
  std::vector<std::string> names;
  for (Element x = 0; x < m.order(); ++x) names.push_back(m.monoid.name(x));
  out << to_dot(cayley_graph(m), names);
}

void emit(const Options& opt, const Report& rep) {
  if (opt.json)
    std::cout << rep.json.dump() << "\n";
  else
    std::cout << rep.text;
}

struct Pipeline {
  Source src;
  SyntacticMonoid m;

  explicit Pipeline(const AnalysisRequest& request)
      : src(load_source(request)), m(transition_monoid(src.minimal)) {
    for (const auto& w : src.warnings) std::cerr << "warning: " << w << "\n";
  }

  PeriodSignature signature(const AnalysisRequest& request) const {
    return build_signature(m, parse_gammas(request, m), request.periods);
  }
};

int run_oracle(const Options& opt) {
  Pipeline p(opt.request);
  const Dfa& dfa = p.src.dfa;
  oracle::OracleBudget budget;
  for (std::size_t len = 0; len <= std::min(opt.request.length, budget.max_word_length); ++len) {
    auto mu = oracle::mu_enumerate(dfa, len, budget);
    std::cout << "mu " << len << " " << format_rational(mu) << "\n";
  }
  for (const auto& gamma : parse_gammas(opt.request, p.m)) {
    std::vector<bool> counted(p.m.symbols.size(), false);
    std::vector<std::string> letters;
    for (Letter a : gamma) {
      counted[a] = true;
      letters.push_back(p.m.symbols[a]);
    }
    std::cout << "cycle_gcd " << brace_list(letters) << " "
              << oracle::cycle_gcd(p.m.monoid, p.m.eta, counted, budget) << "\n";
  }
  const std::size_t period = max_period(p.m, full_letter_set(p.m.symbols.size()));
  for (std::size_t r = 0; r < period; ++r)
    for (const auto& word : all_words(dfa.alphabet_size(), r)) {
      const std::string w = dfa.decode(word);
      std::cout << "lw \"" << w << "\" " << brace_list(oracle::lw_enumerate(dfa, w, period, 1)) << "\n";
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syntactic monoid analysis of regular languages"};
  app.require_subcommand(1);
  Options opt;
  auto* analyze_cmd = app.add_subcommand("analyze", "run the whole pipeline");
  auto* monoid_cmd = app.add_subcommand("monoid", "syntactic monoid");
  auto* period_cmd = app.add_subcommand("period", "maximum periods and residual classes");
  auto* prob_cmd = app.add_subcommand("prob", "exact probabilities by length");
  auto* decompose_cmd = app.add_subcommand("decompose", "canonical semidirect decomposition");
  auto* zero_one_cmd = app.add_subcommand("zero-one", "zero-one verdicts");
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference values");
  oracle_cmd->group("");
  for (auto* cmd : {analyze_cmd, monoid_cmd, period_cmd, prob_cmd, decompose_cmd, zero_one_cmd, oracle_cmd})
    add_common(cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (!opt.periods.empty()) opt.request.periods = parse_periods(opt.periods);
    const AnalysisRequest& req = opt.request;

    if (*analyze_cmd) {
      Report rep = analyze(req);
      if (!opt.dot_path.empty()) write_dot(opt, Pipeline(req).m);
      emit(opt, rep);
      return 0;
    }
    if (*oracle_cmd) return run_oracle(opt);

    Pipeline p(req);
    if (*monoid_cmd) {
      write_dot(opt, p.m);
      emit(opt, monoid_report(p.src, p.m));
    } else if (*period_cmd) {
      emit(opt, period_report(p.m, p.signature(req)));
    } else if (*prob_cmd) {
      emit(opt, probability_report(p.src, p.m, nullptr, req));
    } else if (*decompose_cmd) {
      emit(opt, decomposition_report(p.src, canonical_decomposition(p.m, p.signature(req))));
    } else if (*zero_one_cmd) {
      CanonicalDecomposition dec = canonical_decomposition(p.m, p.signature(req));
      emit(opt, zero_one_report(p.src, p.m, &dec, req));
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_internal() ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
