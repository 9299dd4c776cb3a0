#include "monodec/period.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "json.hpp"
#include "monodec/error.hpp"

namespace monodec {

LetterSet parse_letter_set(std::string_view text, std::span<const std::string> symbols) {
  LetterSet out;
  std::size_t pos = 0;
  const bool separated = text.find(',') != std::string_view::npos;
  while (pos < text.size()) {
    std::string_view sym;
    if (separated) {
      auto comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      sym = text.substr(pos, comma - pos);
      pos = comma + 1;
    } else {
      sym = text.substr(pos, 1);
      ++pos;
    }
    if (sym.empty()) continue;
    auto it = std::find(symbols.begin(), symbols.end(), sym);
    if (it == symbols.end())
      throw Error(ErrorKind::UnknownSymbol, "letter '" + std::string(sym) + "' is not in the alphabet");
    out.push_back(static_cast<Letter>(it - symbols.begin()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "letter subset must be non-empty");
  return out;
}

LetterSet full_letter_set(std::size_t alphabet_size) {
  LetterSet out(alphabet_size);
  for (Letter a = 0; a < alphabet_size; ++a) out[a] = a;
  return out;
}

ResidualSpace::ResidualSpace(std::vector<std::size_t> periods) : periods_(std::move(periods)) {
  size_ = 1;
  for (auto p : periods_) {
    if (p == 0) throw Error(ErrorKind::InvalidPeriod, "periods must be positive");
    size_ *= p;
  }
}

std::size_t ResidualSpace::index(const ResidualVector& r) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < periods_.size(); ++i) idx = idx * periods_[i] + r[i] % periods_[i];
  return idx;
}

ResidualVector ResidualSpace::vector(std::size_t index) const {
  ResidualVector r(periods_.size());
  for (std::size_t i = periods_.size(); i-- > 0;) {
    r[i] = index % periods_[i];
    index /= periods_[i];
  }
  return r;
}

std::size_t ResidualSpace::add(std::size_t a, std::size_t b) const {
  ResidualVector ra = vector(a), rb = vector(b);
  for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = (ra[i] + rb[i]) % periods_[i];
  return index(ra);
}

std::string ResidualSpace::label(std::size_t index) const {
  auto r = vector(index);
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

ResidualVector residual_of_word(std::span<const Letter> word, std::span<const LetterSet> gammas,
                                std::span<const std::size_t> periods) {
  if (gammas.size() != periods.size())
    throw Error(ErrorKind::InvalidArgument, "one period per letter subset is required");
  ResidualVector r(gammas.size(), 0);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (periods[i] == 0) throw Error(ErrorKind::InvalidPeriod, "periods must be positive");
    std::size_t count = 0;
    for (Letter a : word)
      if (std::binary_search(gammas[i].begin(), gammas[i].end(), a)) ++count;
    r[i] = count % periods[i];
  }
  return r;
}

ResidualVector residual_of_word(std::string_view word, std::span<const std::string> symbols,
                                std::span<const LetterSet> gammas,
                                std::span<const std::size_t> periods) {
  LetterWord letters;
  for (char c : word) {
    auto it = std::find(symbols.begin(), symbols.end(), std::string(1, c));
    if (it == symbols.end())
      throw Error(ErrorKind::UnknownSymbol, std::string("symbol '") + c + "' is not in the alphabet");
    letters.push_back(static_cast<Letter>(it - symbols.begin()));
  }
  return residual_of_word(std::span<const Letter>(letters), gammas, periods);
}

Digraph weighted_cayley(const SyntacticMonoid& m, const LetterSet& gamma) {
  Digraph g;
  g.vertices = m.order();
  for (Element x = 0; x < m.order(); ++x)
    for (Letter a = 0; a < m.eta.size(); ++a) {
      const bool counted = std::binary_search(gamma.begin(), gamma.end(), a);
      g.edges.push_back({x, m.monoid.multiply(x, m.eta[a]), counted ? 1 : 0});
    }
  return g;
}

namespace {

void check_gamma(const LetterSet& gamma, std::size_t alphabet_size) {
  if (gamma.empty()) throw Error(ErrorKind::InvalidArgument, "letter subset must be non-empty");
  for (Letter a : gamma)
    if (a >= alphabet_size) throw Error(ErrorKind::UnknownSymbol, "letter subset leaves the alphabet");
}

}  // namespace

std::size_t max_period(const SyntacticMonoid& m, const LetterSet& gamma) {
  check_gamma(gamma, m.eta.size());
  Digraph g = weighted_cayley(m, gamma);
  auto gcd = closed_walk_gcd(g, strongly_connected_components(g));
  if (gcd == 0)
    throw Error(ErrorKind::InternalNoPositiveCycle, "no closed walk carries a letter of the subset");
  return static_cast<std::size_t>(gcd);
}

bool PeriodSignature::whole_alphabet() const {
  return gammas.size() == 1 && gammas[0].size() == symbols.size();
}

PeriodSignature build_signature(const SyntacticMonoid& m, std::vector<LetterSet> gammas,
                                std::optional<std::vector<std::size_t>> periods) {
  if (gammas.empty()) throw Error(ErrorKind::InvalidArgument, "at least one letter subset is required");
  for (auto& g : gammas) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    check_gamma(g, m.eta.size());
  }

  PeriodSignature sig;
  sig.symbols = m.symbols;
  for (const auto& g : gammas) sig.max_periods.push_back(max_period(m, g));
  if (periods) {
    if (periods->size() != gammas.size())
      throw Error(ErrorKind::InvalidPeriod, "one period per letter subset is required");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      std::size_t p = (*periods)[i];
      if (p == 0 || sig.max_periods[i] % p != 0)
        throw Error(ErrorKind::InvalidPeriod,
                    "period " + std::to_string(p) + " does not divide the maximum period " +
                        std::to_string(sig.max_periods[i]));
    }
    sig.periods = *periods;
  } else {
    sig.periods = sig.max_periods;
  }
  sig.gammas = std::move(gammas);
  sig.space = ResidualSpace(sig.periods);
  if (std::all_of(sig.periods.begin(), sig.periods.end(), [](std::size_t p) { return p == 1; }))
    sig.warnings.push_back("PeriodTrivial: every period is 1, the decomposition is degenerate");

  // Residual of each letter, then BFS from the identity.
  std::vector<std::size_t> letter_residual;
  for (Letter a = 0; a < m.eta.size(); ++a) {
    LetterWord w{a};
    letter_residual.push_back(sig.space.index(residual_of_word(w, sig.gammas, sig.periods)));
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  sig.rho_bar.assign(m.order(), kUnset);
  sig.rho_bar[0] = 0;
  std::queue<Element> queue;
  queue.push(0);
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop();
    for (Letter a = 0; a < m.eta.size(); ++a) {
      Element y = m.monoid.multiply(x, m.eta[a]);
      std::size_t r = sig.space.add(sig.rho_bar[x], letter_residual[a]);
      if (sig.rho_bar[y] == kUnset) {
        sig.rho_bar[y] = r;
        queue.push(y);
      } else if (sig.rho_bar[y] != r) {
        throw Error(ErrorKind::VerificationFailure, "residual classes clash at element " + std::to_string(y));
      }
    }
  }
  sig.classes.assign(sig.space.size(), {});
  for (Element x = 0; x < m.order(); ++x) sig.classes[sig.rho_bar[x]].push_back(x);
  return sig;
}

bool classes_partition(const PeriodSignature& sig, std::size_t order) {
  std::vector<int> hits(order, 0);
  for (const auto& cls : sig.classes)
    for (Element x : cls) {
      if (x >= order) return false;
      ++hits[x];
    }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool rho_bar_is_homomorphism(const FiniteMonoid& m, const PeriodSignature& sig) {
  if (sig.rho_bar[FiniteMonoid::identity()] != 0) return false;
  for (Element x = 0; x < m.order(); ++x)
    for (Element y = 0; y < m.order(); ++y)
      if (sig.rho_bar[m.multiply(x, y)] != sig.space.add(sig.rho_bar[x], sig.rho_bar[y]))
        return false;
  return true;
}

bool rho_bar_is_surjective(const PeriodSignature& sig) {
  return std::all_of(sig.classes.begin(), sig.classes.end(),
                     [](const auto& cls) { return !cls.empty(); });
}

std::string signature_to_json(const PeriodSignature& sig) {
  nlohmann::ordered_json doc;
  auto gammas = nlohmann::ordered_json::array();
  for (const auto& g : sig.gammas) {
    std::vector<std::string> letters;
    for (Letter a : g) letters.push_back(sig.symbols[a]);
    gammas.push_back(letters);
  }
  doc["gammas"] = gammas;
  doc["periods"] = sig.periods;
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (std::size_t r = 0; r < sig.classes.size(); ++r) classes[sig.space.label(r)] = sig.classes[r];
  doc["classes"] = classes;
  return doc.dump();
}

std::vector<Sink> sink_periods(const Digraph& input) {
  Digraph g = input;
  for (auto& e : g.edges) e.weight = 1;
  Components comps = strongly_connected_components(g);
  std::vector<bool> has_exit(comps.count, false);
  for (const auto& e : g.edges)
    if (comps.id[e.from] != comps.id[e.to]) has_exit[comps.id[e.from]] = true;
  auto gcds = walk_gcd_per_component(g, comps);

  std::vector<Sink> sinks;
  std::map<std::size_t, std::size_t> by_component;
  for (std::size_t v = 0; v < g.vertices; ++v) {
    std::size_t k = comps.id[v];
    if (has_exit[k]) continue;
    auto [it, inserted] = by_component.emplace(k, sinks.size());
    if (inserted) sinks.push_back({{}, static_cast<std::size_t>(gcds[k])});
    sinks[it->second].vertices.push_back(v);
  }
  return sinks;
}

Digraph digraph_of(const CayleyGraph& cg, const std::vector<std::string>& names) {
  Digraph g;
  g.vertices = cg.vertices;
  for (const auto& e : cg.edges) g.edges.push_back({e.from, e.to, 1});
  g.labels = names;
  return g;
}

Digraph digraph_of(const Dfa& dfa) {
  Digraph g;
  g.vertices = dfa.num_states();
  for (State q = 0; q < dfa.num_states(); ++q)
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) g.edges.push_back({q, dfa.next(q, a), 1});
  g.labels = dfa.state_names();
  return g;
}

}  // namespace monodec
