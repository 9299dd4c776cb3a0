#include "monodec/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "monodec/error.hpp"
#include "monodec/regex.hpp"

namespace monodec {

namespace {

using Json = nlohmann::ordered_json;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string group_name(const ResidualSpace& g) {
  std::string out;
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (i) out += " x ";
    out += "C" + std::to_string(g.periods()[i]);
  }
  return out;
}

std::string element_set(const FiniteMonoid& m, const std::vector<Element>& xs) {
  std::vector<std::string> names;
  for (Element x : xs) names.push_back(m.name(x));
  return brace_list(names);
}

std::string letter_set(const PeriodSignature& sig, const LetterSet& gamma) {
  std::vector<std::string> letters;
  for (Letter a : gamma) letters.push_back(sig.symbols[a]);
  return brace_list(letters);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool maximal_whole_alphabet(const PeriodSignature& sig) {
  return sig.whole_alphabet() && sig.periods[0] == sig.max_periods[0];
}

std::string accumulation_text(const Accumulation& acc) {
  std::string out = "(";
  for (std::size_t r = 0; r < acc.points.size(); ++r) {
    if (r) out += ", ";
    out += format_double(acc.points[r].mu);
  }
  out += ")";
  if (!acc.all_converged()) out += " [not converged]";
  return out;
}

Json accumulation_json(const Accumulation& acc) {
  Json out = Json::array();
  for (const auto& p : acc.points) out.push_back({{"r", p.r}, {"mu", p.mu}, {"converged", p.converged}});
  return out;
}

Json sinks_json(const std::vector<Sink>& sinks, const Dfa& dfa) {
  Json out = Json::array();
  for (const auto& s : sinks) {
    std::vector<std::string> states;
    for (auto v : s.vertices) states.push_back(dfa.state_name(v));
    out.push_back({{"states", states}, {"period", s.period}});
  }
  return out;
}

std::string sinks_text(const std::vector<Sink>& sinks, const Dfa& dfa) {
  std::string out;
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    std::vector<std::string> states;
    for (auto v : sinks[i].vertices) states.push_back(dfa.state_name(v));
    if (i) out += "; ";
    out += brace_list(states) + " period " + std::to_string(sinks[i].period);
  }
  return out;
}

Json residual_json(const std::vector<ResidualZeroOne>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts)
    out.push_back({{"w", v.w},
                   {"r", v.r},
                   {"verdict", v.is_zero_or_one},
                   {"witness", v.witness_names},
                   {"mu_lw", v.mu_lw}});
  return out;
}

// "r=0: no; r=1: yes (witness {e})", one entry per residue. A residue is
// "yes" when every w in it has a witness of the same kind.
std::string residual_text(const std::vector<ResidualZeroOne>& verdicts, std::size_t period) {
  std::string out;
  for (std::size_t r = 0; r < period; ++r) {
    bool all = true, first = true, kind = false;
    std::string witness;
    for (const auto& v : verdicts) {
      if (v.r != r) continue;
      if (!v.is_zero_or_one || (!first && v.witness_accepting != kind)) all = false;
      if (first) {
        kind = v.witness_accepting;
        witness = brace_list(v.witness_names);
        first = false;
      }
    }
    if (r) out += "; ";
    out += "r=" + std::to_string(r) + ": " + (all ? "yes (witness " + witness + ")" : std::string("no"));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> parse_periods(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || value == 0)
      throw Error(ErrorKind::InvalidPeriod, "bad period list \"" + text + "\"");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Source load_source(const AnalysisRequest& request) {
  if (request.regex.has_value() == request.dfa_path.has_value())
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --regex and --dfa");
  if (request.regex) {
    Regex ast = parse_regex(*request.regex);
    std::string alphabet = request.alphabet.empty() ? letters_of(ast) : request.alphabet;
    if (alphabet.empty()) throw Error(ErrorKind::InvalidArgument, "empty alphabet, pass --alphabet");
    Dfa dfa = regex_to_dfa(ast, alphabet);
    return {"regex " + *request.regex, dfa, dfa, {}};
  }
  std::vector<std::string> warnings;
  Dfa dfa = load_dfa(read_file(*request.dfa_path), &warnings);
  if (!request.alphabet.empty()) {
    std::vector<std::string> given;
    for (char c : request.alphabet) given.emplace_back(1, c);
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != dfa.alphabet())
      throw Error(ErrorKind::AlphabetMismatch, "--alphabet differs from the automaton's alphabet");
  }
  Dfa minimal = minimize(dfa);
  return {"dfa " + *request.dfa_path, dfa, minimal, warnings};
}

std::vector<LetterSet> parse_gammas(const AnalysisRequest& request, const SyntacticMonoid& m) {
  std::vector<LetterSet> out;
  for (const auto& g : request.gammas) out.push_back(parse_letter_set(g, m.symbols));
  if (out.empty()) out.push_back(full_letter_set(m.symbols.size()));
  return out;
}

std::string brace_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "}";
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string out(buf, ec == std::errc() ? end : buf);
  if (out.find_first_of(".eni") == std::string::npos) out += ".0";
  return out;
}

std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Report monoid_report(const Source& src, const SyntacticMonoid& m) {
  Report rep;
  rep.json = Json::parse(monoid_to_json(m));
  std::ostringstream text;
  text << "order: " << m.order() << "\n";
  text << "elements:";
  for (Element x = 0; x < m.order(); ++x) text << " " << m.monoid.name(x);
  text << "\ngenerators:";
  for (std::size_t a = 0; a < m.symbols.size(); ++a)
    text << " " << m.symbols[a] << "=" << m.monoid.name(m.eta[a]);
  std::vector<Element> accepting;
  for (Element x = 0; x < m.order(); ++x)
    if (m.accepting_image[x]) accepting.push_back(x);
  text << "\naccepting: " << element_set(m.monoid, accepting) << "\n";
  auto zero = find_zero(m.monoid);
  text << "zero: " << (zero ? m.monoid.name(*zero) : std::string("none")) << "\n";
  text << "commutative: " << yes_no(m.monoid.is_commutative()) << "\n";
  (void)src;
  rep.text = text.str();
  return rep;
}

Report period_report(const SyntacticMonoid& m, const PeriodSignature& sig) {
  Report rep;
  rep.json = Json::parse(signature_to_json(sig));
  rep.json["max_periods"] = sig.max_periods;
  rep.json["warnings"] = sig.warnings;
  std::ostringstream text;
  for (std::size_t i = 0; i < sig.gammas.size(); ++i)
    text << "gamma " << letter_set(sig, sig.gammas[i]) << ": max period " << sig.max_periods[i]
         << ", period " << sig.periods[i] << "\n";
  text << "classes:";
  for (std::size_t r = 0; r < sig.classes.size(); ++r)
    text << " " << sig.space.label(r) << "=" << element_set(m.monoid, sig.classes[r]);
  text << "\n";
  for (const auto& w : sig.warnings) text << "warning: " << w << "\n";
  rep.text = text.str();
  return rep;
}

Report probability_report(const Source& src, const SyntacticMonoid& m,
                          const CanonicalDecomposition* dec, const AnalysisRequest& request) {
  (void)dec;
  Report rep;
  std::ostringstream text;
  Json series = Json::array();
  const auto mus = mu_series(src.dfa, request.length);
  for (std::size_t len = 0; len < mus.size(); ++len) {
    series.push_back({{"len", len},
                      {"num", boost::multiprecision::numerator(mus[len]).str()},
                      {"den", boost::multiprecision::denominator(mus[len]).str()}});
    text << len << " " << format_rational(mus[len]) << "\n";
  }
  const std::size_t period = max_period(m, full_letter_set(m.symbols.size()));
  const Accumulation acc = accumulation_points(src.dfa, period, request.tol, request.cap);
  const auto sinks = sink_periods(digraph_of(src.dfa));
  rep.json["mu_series"] = series;
  rep.json["period"] = period;
  rep.json["accumulation"] = accumulation_json(acc);
  Json dups = Json::array();
  for (auto [r, s] : acc.duplicates) dups.push_back({r, s});
  rep.json["duplicates"] = dups;
  rep.json["sinks"] = sinks_json(sinks, src.dfa);
  rep.text = text.str();
  return rep;
}

Report zero_one_report(const Source& src, const SyntacticMonoid& m,
                       const CanonicalDecomposition* dec, const AnalysisRequest& request) {
  Report rep;
  const BasicZeroOne basic = zero_one_basic(m, src.dfa, request.tol, request.cap);
  rep.json["basic"] = to_string(basic.verdict);
  std::string text = "basic: " + to_string(basic.verdict);
  if (dec && maximal_whole_alphabet(dec->signature)) {
    const auto verdicts = zero_one_residuals(*dec, src.dfa, request.tol, request.cap);
    rep.json["residual"] = residual_json(verdicts);
    text += "; " + residual_text(verdicts, dec->signature.periods[0]);
  } else {
    rep.json["residual"] = Json::array();
    text += "; residual: needs a single maximal period over the whole alphabet";
  }
  rep.text = text + "\n";
  return rep;
}

Report decomposition_report(const Source& src, const CanonicalDecomposition& dec) {
  (void)src;
  Report rep;
  const CanonicalReport check = verify_canonical(dec);
  rep.json = Json::parse(decomposition_to_json(dec, check.ok()));
  rep.json["checks"] = {{"homomorphism_on_classes", check.homomorphism_on_classes},
                        {"homomorphism", check.homomorphism},
                        {"injective", check.injective},
                        {"residual_condition", check.residual_condition}};
  const auto& m = dec.monoid.monoid;
  const ResidualSpace& g = dec.group();
  std::ostringstream text;
  text << "K: " << dec.K << "\n";
  text << "G: " << group_name(g) << "\n";
  for (std::size_t r = 0; r < g.size(); ++r)
    text << "theta" << g.label(r) << ": " << element_set(m, dec.theta[r]) << "\n";
  for (Element t = 0; t < m.order(); ++t) {
    text << "Can(" << m.name(t) << ") = (";
    for (std::size_t r = 0; r < g.size(); ++r) {
      if (r) text << ", ";
      text << "f" << g.label(r) << "=" << dec.f(t, r).to_string();
    }
    text << "; " << g.label(dec.can[t].residual) << ")\n";
  }
  text << "canonical: homomorphism on classes " << yes_no(check.homomorphism_on_classes)
       << ", on padded coordinates " << yes_no(check.homomorphism) << ", injective "
       << yes_no(check.injective) << ", residual condition " << yes_no(check.residual_condition)
       << "\n";
  rep.text = text.str();
  return rep;
}

Report analyze(const AnalysisRequest& request) {
  Source src = load_source(request);
  SyntacticMonoid m = transition_monoid(src.minimal);
  PeriodSignature sig = build_signature(m, parse_gammas(request, m), request.periods);
  CanonicalDecomposition dec = canonical_decomposition(m, sig);

  Report out;
  std::ostringstream text;
  Json& doc = out.json;
  std::vector<std::string> warnings = src.warnings;
  warnings.insert(warnings.end(), sig.warnings.begin(), sig.warnings.end());

  doc["source"] = src.description;
  doc["alphabet"] = m.symbols;
  doc["states"] = src.dfa.num_states();
  doc["minimal_states"] = src.minimal.num_states();
  doc["warnings"] = warnings;
  text << "source: " << src.description << "\n";
  text << "alphabet: " << brace_list(m.symbols) << "\n";
  text << "states: " << src.dfa.num_states() << " (minimal " << src.minimal.num_states() << ")\n";
  for (const auto& w : warnings) text << "warning: " << w << "\n";

  Report mono = monoid_report(src, m);
  doc["monoid"] = mono.json;
  std::vector<std::string> names;
  for (Element x = 0; x < m.order(); ++x) names.push_back(m.monoid.name(x));
  doc["elements"] = names;
  text << "monoid " << mono.text;

  Report per = period_report(m, sig);
  Json signature = per.json;
  signature.erase("warnings");
  doc["signature"] = signature;
  text << per.text.substr(0, per.text.find("warning:"));

  Report de = decomposition_report(src, dec);
  doc["decomposition"] = de.json;
  text << de.text;

  Json residuals = Json::array();
  Json blocks = Json::array();
  if (sig.whole_alphabet()) {
    const std::size_t period = sig.periods[0];
    for (std::size_t r = 0; r < period; ++r) {
      ResidualMonoid t = residual_monoid(dec, r);
      std::vector<std::string> elems;
      for (Element x = 0; x < t.monoid.order(); ++x) elems.push_back(t.monoid.name(x));
      residuals.push_back({{"r", r}, {"order", t.monoid.order()}, {"elements", elems}});
      text << "T_" << r << ": order " << t.monoid.order() << " " << brace_list(elems) << "\n";
    }
    for (std::size_t r = 0; r < period; ++r)
      for (const auto& word : all_words(m.symbols.size(), r)) {
        const std::string w = src.minimal.decode(word);
        LwRecognizer rec = lw_recognizer(dec, w);
        SyntacticMonoid lw = syntactic_monoid_of_lw(src.minimal, w, period);
        DiagramReport diagram = check_diagram(rec, lw);
        if (!diagram.ok())
          throw Error(ErrorKind::VerificationFailure,
                      "T_" + std::to_string(r) + " does not map onto the monoid of L_w for w=\"" + w + "\"");
        std::vector<std::string> accepting;
        for (Element x = 0; x < rec.accepting.size(); ++x)
          if (rec.accepting[x]) accepting.push_back(rec.residual.monoid.name(x));
        blocks.push_back({{"w", w},
                          {"r", r},
                          {"accepting", accepting},
                          {"lw_monoid_order", lw.order()},
                          {"psi", diagram.psi}});
        text << "L_w w=\"" << w << "\": S=" << brace_list(accepting) << ", monoid order "
             << lw.order() << ", psi onto: yes\n";
      }
  }
  doc["residual_monoids"] = residuals;
  doc["block_languages"] = blocks;

  Report prob = probability_report(src, m, &dec, request);
  const std::size_t p_sigma = prob.json["period"].get<std::size_t>();
  Accumulation acc = accumulation_points(src.dfa, p_sigma, request.tol, request.cap);
  text << "period over the alphabet: " << p_sigma << "\n";
  text << "accumulation: " << accumulation_text(acc);
  if (!acc.duplicates.empty()) text << ", " << acc.distinct() << " distinct";
  text << "\n";
  text << "sinks: " << sinks_text(sink_periods(digraph_of(src.dfa)), src.dfa) << "\n";

  Report zo = zero_one_report(src, m, &dec, request);
  prob.json["zero_one"] = zo.json;
  text << "zero-one " << zo.text;

  Json consistency = Json::array();
  if (maximal_whole_alphabet(sig)) {
    for (std::size_t r = 0; r < sig.periods[0]; ++r) {
      Consistency c = mu_consistency(dec, src.dfa, r, kLimitTolerance, request.tol, request.cap);
      if (!c.ok)
        throw Error(ErrorKind::VerificationFailure,
                    "mu_" + std::to_string(r) + " differs from the average of its block limits");
      consistency.push_back({{"r", r}, {"mu_r", c.mu_r}, {"average", c.average}, {"ok", c.ok}});
    }
  }
  prob.json["consistency"] = consistency;
  doc["probability"] = prob.json;
  text << "exact:";
  for (const auto& item : prob.json["mu_series"])
    text << " " << item["num"].get<std::string>() << "/" << item["den"].get<std::string>();
  text << "\n";

  WreathEmbedding wreath = wreath_divisor(dec);
  doc["wreath"] = {{"K", wreath.K},
                   {"G", wreath.G.periods()},
                   {"equivariant", wreath.equivariant},
                   {"phi_bijective", wreath.phi_bijective},
                   {"g_divides", wreath.g_divides}};
  text << "wreath: M divides (T_" << wreath.K << ", " << wreath.K << ") wr (" << group_name(wreath.G)
       << "), equivariant " << yes_no(wreath.equivariant) << ", phi bijective "
       << yes_no(wreath.phi_bijective) << ", G divides M " << yes_no(wreath.g_divides) << "\n";
  out.text = text.str();
  return out;
}

}  // namespace monodec
