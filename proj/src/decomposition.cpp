#include "monodec/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "json.hpp"
#include "monodec/error.hpp"

namespace monodec {

namespace {

std::vector<std::size_t> addition_table(const ResidualSpace& g) {
  std::vector<std::size_t> table(g.size() * g.size());
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) table[a * g.size() + b] = g.add(a, b);
  return table;
}

std::string residual_key(const ResidualSpace& g, std::size_t r) {
  std::string out;
  auto v = g.vector(r);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

void require_single_period_scope(const CanonicalDecomposition& dec) {
  if (!dec.signature.whole_alphabet())
    throw Error(ErrorKind::ScopeError,
                "residual monoids need a single period over the whole alphabet");
}

}  // namespace

CanElement can_multiply(const CanElement& a, const CanElement& b, const ResidualSpace& g,
                        std::size_t degree) {
  CanElement out;
  out.f.resize(a.f.size());
  out.residual = g.add(a.residual, b.residual);
  for (std::size_t y = 0; y < g.size(); ++y) {
    const std::size_t shifted = g.add(y, a.residual);
    for (std::size_t k = 0; k < degree; ++k)
      out.f[y * degree + k] = b.f[shifted * degree + a.f[y * degree + k]];
  }
  return out;
}

Transformation CanonicalDecomposition::f(Element t, std::size_t r) const {
  const auto& tab = can.at(t).f;
  return Transformation(std::vector<std::uint32_t>(tab.begin() + r * K, tab.begin() + (r + 1) * K));
}

CanonicalDecomposition canonical_decomposition(const SyntacticMonoid& m,
                                               const PeriodSignature& sig) {
  if (sig.rho_bar.size() != m.order())
    throw Error(ErrorKind::InvalidArgument, "signature was built for a different monoid");
  if (sig.space.size() > kMaxResidualGroup)
    throw Error(ErrorKind::TooLarge, "residual group of order " + std::to_string(sig.space.size()) +
                                         " exceeds " + std::to_string(kMaxResidualGroup));
  CanonicalDecomposition dec;
  dec.monoid = m;
  dec.signature = sig;
  dec.theta = sig.classes;
  for (const auto& cls : dec.theta) dec.K = std::max(dec.K, cls.size());

  dec.theta_inverse.assign(m.order(), 0);
  for (const auto& cls : dec.theta)
    for (std::size_t k = 0; k < cls.size(); ++k) dec.theta_inverse[cls[k]] = k;

  const ResidualSpace& g = sig.space;
  const std::size_t K = dec.K;
  dec.can.resize(m.order());
  for (Element t = 0; t < m.order(); ++t) {
    CanElement& c = dec.can[t];
    c.residual = sig.rho_bar[t];
    c.f.resize(g.size() * K);
    for (std::size_t r = 0; r < g.size(); ++r) {
      const std::size_t target = g.add(r, c.residual);
      const auto& from = dec.theta[r];
      for (std::size_t k = 0; k < K; ++k) {
        if (k < from.size()) {
          Element s = m.monoid.multiply(from[k], t);
          if (sig.rho_bar[s] != target)
            throw Error(ErrorKind::VerificationFailure, "right multiplication leaves the residual class");
          c.f[r * K + k] = static_cast<std::uint32_t>(dec.theta_inverse[s]);
        } else {
          c.f[r * K + k] = static_cast<std::uint32_t>(k);
        }
      }
    }
  }

  CanonicalReport report = verify_canonical(dec);
  if (!report.ok())
    throw Error(ErrorKind::VerificationFailure,
                std::string("canonical homomorphism check failed:") +
                    (report.homomorphism_on_classes ? "" : " homomorphism") +
                    (report.injective ? "" : " injectivity") +
                    (report.residual_condition ? "" : " residual"));
  return dec;
}

CanonicalReport verify_canonical(const CanonicalDecomposition& dec) {
  CanonicalReport report;
  const auto& m = dec.monoid.monoid;
  const ResidualSpace& g = dec.group();
  const std::size_t K = dec.K, G = g.size();
  const auto add = addition_table(g);

  bool full = dec.can.size() == m.order();
  bool live = full;
  if (full) {
    // Can(e) must be the identity of the semidirect product.
    const CanElement& e = dec.can[FiniteMonoid::identity()];
    if (e.residual != 0) full = live = false;
    for (std::size_t i = 0; i < e.f.size() && full; ++i)
      if (e.f[i] != i % K) full = live = false;
  }
  for (Element s = 0; s < m.order() && live; ++s) {
    const CanElement& a = dec.can[s];
    for (Element s2 = 0; s2 < m.order() && live; ++s2) {
      const CanElement& b = dec.can[s2];
      const CanElement& expected = dec.can[m.multiply(s, s2)];
      if (expected.residual != add[a.residual * G + b.residual]) {
        full = live = false;
        break;
      }
      for (std::size_t y = 0; y < G && live; ++y) {
        const std::size_t shifted = add[y * G + a.residual];
        const std::size_t size = dec.theta[y].size();
        for (std::size_t k = 0; k < K; ++k)
          if (b.f[shifted * K + a.f[y * K + k]] != expected.f[y * K + k]) {
            if (k < size) live = false;
            full = false;
          }
      }
    }
  }
  report.homomorphism = full;
  report.homomorphism_on_classes = live;

  std::set<CanElement> images(dec.can.begin(), dec.can.end());
  report.injective = images.size() == m.order();

  report.residual_condition = true;
  for (Letter a = 0; a < dec.monoid.eta.size(); ++a) {
    LetterWord w{a};
    auto rho = g.index(residual_of_word(w, dec.signature.gammas, dec.signature.periods));
    if (dec.can[dec.monoid.eta[a]].residual != rho) report.residual_condition = false;
  }
  return report;
}

bool fixed_points_have_zero_residual(const CanonicalDecomposition& dec) {
  const auto& m = dec.monoid.monoid;
  for (Element t = 0; t < m.order(); ++t)
    for (Element x = 0; x < m.order(); ++x)
      if (m.multiply(t, x) == t && dec.can[x].residual != 0) return false;
  return true;
}

std::string decomposition_to_json(const CanonicalDecomposition& dec, bool verified) {
  const ResidualSpace& g = dec.group();
  nlohmann::ordered_json doc;
  doc["K"] = dec.K;
  doc["G"] = g.periods();
  nlohmann::ordered_json theta = nlohmann::ordered_json::object();
  for (std::size_t r = 0; r < g.size(); ++r) theta[residual_key(g, r)] = dec.theta[r];
  doc["theta"] = theta;
  nlohmann::ordered_json can = nlohmann::ordered_json::object();
  for (Element t = 0; t < dec.can.size(); ++t) {
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (std::size_t r = 0; r < g.size(); ++r) f[residual_key(g, r)] = dec.f(t, r).image();
    can[std::to_string(t)] = {{"f", f}, {"r", g.vector(dec.can[t].residual)}};
  }
  doc["can"] = can;
  doc["verified"] = verified;
  return doc.dump();
}

ResidualMonoid residual_monoid(const CanonicalDecomposition& dec, std::size_t r) {
  require_single_period_scope(dec);
  const std::size_t period = dec.signature.periods[0];
  if (r >= period)
    throw Error(ErrorKind::ScopeError, "residual " + std::to_string(r) + " is not below the period");

  std::vector<Transformation> elements;
  std::map<Transformation, std::size_t> index;
  std::vector<std::size_t> element_of(dec.monoid.order(), ResidualMonoid::npos);
  for (Element t : dec.theta[0]) {
    Transformation tau = dec.f(t, r);
    auto [it, inserted] = index.emplace(tau, elements.size());
    if (inserted) elements.push_back(std::move(tau));
    element_of[t] = it->second;
  }
  if (elements.empty() || !elements[0].is_identity())
    throw Error(ErrorKind::VerificationFailure, "residual monoid lacks the identity");

  const std::size_t order = elements.size();
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      auto it = index.find(elements[i].then(elements[j]));
      if (it == index.end())
        throw Error(ErrorKind::VerificationFailure, "residual monoid is not closed under composition");
      table[i * order + j] = static_cast<std::uint32_t>(it->second);
    }
  std::vector<std::string> names{"e"};
  for (std::size_t i = 1; i < order; ++i) names.push_back(elements[i].to_string());

  ResidualMonoid out{r, std::move(elements),
                     FiniteMonoid(order, std::move(table), {}, std::move(names),
                                  FiniteMonoid::Check::Closure),
                     std::move(element_of)};
  return out;
}

LwRecognizer lw_recognizer(const CanonicalDecomposition& dec, std::span<const Letter> w) {
  require_single_period_scope(dec);
  const std::size_t period = dec.signature.periods[0];
  if (w.size() >= period)
    throw Error(ErrorKind::ScopeError, "prefix must be shorter than the period");
  const auto& m = dec.monoid;
  const std::size_t k = m.symbols.size();
  for (Letter a : w)
    if (a >= k) throw Error(ErrorKind::UnknownSymbol, "prefix leaves the alphabet");

  LwRecognizer rec;
  rec.w.assign(w.begin(), w.end());
  rec.r = w.size() % period;
  rec.period = period;
  rec.alphabet_size = k;
  rec.residual = residual_monoid(dec, rec.r);

  for (const auto& block : all_words(k, period)) {
    std::string name;
    for (Letter a : block) name += m.symbols[a];
    rec.blocks.push_back(std::move(name));
    Element t = m.image_of(block);
    std::size_t tau = rec.residual.element_of.at(t);
    if (tau == ResidualMonoid::npos)
      throw Error(ErrorKind::VerificationFailure, "block image has a non-zero residual");
    rec.block_images.push_back(tau);
  }

  // S = { tau : theta_r(tau(theta_r^{-1}(eta(w)))) in eta(L) }
  const Element ew = m.image_of(w);
  const std::size_t start = dec.theta_inverse[ew];
  const auto& cls = dec.theta[rec.r];
  for (const auto& tau : rec.residual.elements) {
    std::size_t k2 = tau(start);
    if (k2 >= cls.size())
      throw Error(ErrorKind::VerificationFailure, "residual transformation leaves its class");
    rec.accepting.push_back(m.accepting_image[cls[k2]]);
  }
  return rec;
}

LwRecognizer lw_recognizer(const CanonicalDecomposition& dec, std::string_view w) {
  LetterWord letters;
  for (char c : w) {
    auto it = std::find(dec.monoid.symbols.begin(), dec.monoid.symbols.end(), std::string(1, c));
    if (it == dec.monoid.symbols.end())
      throw Error(ErrorKind::UnknownSymbol, std::string("symbol '") + c + "' is not in the alphabet");
    letters.push_back(static_cast<Letter>(it - dec.monoid.symbols.begin()));
  }
  return lw_recognizer(dec, std::span<const Letter>(letters));
}

bool lw_member(const LwRecognizer& rec, std::span<const std::string> u) {
  std::size_t tau = 0;
  for (const auto& block : u) {
    auto it = std::lower_bound(rec.blocks.begin(), rec.blocks.end(), block);
    if (it == rec.blocks.end() || *it != block) {
      if (block.size() != rec.period)
        throw Error(ErrorKind::BlockLengthError,
                    "block \"" + block + "\" does not have length " + std::to_string(rec.period));
      throw Error(ErrorKind::UnknownSymbol, "block \"" + block + "\" uses unknown letters");
    }
    tau = rec.residual.monoid.multiply(tau, rec.block_images[it - rec.blocks.begin()]);
  }
  return rec.accepting[tau];
}

bool lw_member(const LwRecognizer& rec, std::span<const Letter> u) {
  if (u.size() % rec.period != 0)
    throw Error(ErrorKind::BlockLengthError, "word length is not a multiple of the period");
  // blocks are enumerated lexicographically, so a block's index is its base-|Sigma| value
  const std::size_t k = rec.alphabet_size;
  std::size_t tau = 0;
  for (std::size_t i = 0; i < u.size(); i += rec.period) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < rec.period; ++j) {
      if (u[i + j] >= k) throw Error(ErrorKind::UnknownSymbol, "letter out of range");
      idx = idx * k + u[i + j];
    }
    tau = rec.residual.monoid.multiply(tau, rec.block_images[idx]);
  }
  return rec.accepting[tau];
}

Dfa block_dfa(const Dfa& dfa, std::span<const Letter> w, std::size_t period) {
  if (period == 0) throw Error(ErrorKind::InvalidPeriod, "period must be positive");
  std::vector<std::string> symbols;
  std::vector<LetterWord> blocks = all_words(dfa.alphabet_size(), period);
  for (const auto& b : blocks) symbols.push_back(dfa.decode(b));
  std::vector<State> delta;
  for (State q = 0; q < dfa.num_states(); ++q)
    for (const auto& b : blocks) delta.push_back(dfa.run(q, b));
  return Dfa(std::move(symbols), dfa.state_names(), dfa.run(dfa.initial(), w), dfa.accepting(),
             std::move(delta));
}

SyntacticMonoid syntactic_monoid_of_lw(const Dfa& dfa, std::string_view w, std::size_t period,
                                       std::size_t cap) {
  LetterWord letters = dfa.encode(w);
  if (letters.size() >= period)
    throw Error(ErrorKind::ScopeError, "prefix must be shorter than the period");
  return transition_monoid(minimize(block_dfa(dfa, letters, period)), cap);
}

DiagramReport check_diagram(const LwRecognizer& rec, const SyntacticMonoid& lw_monoid) {
  DiagramReport report;
  const auto& tr = rec.residual.monoid;
  const auto& target = lw_monoid.monoid;

  std::vector<std::size_t> block_letter(rec.blocks.size());
  for (std::size_t b = 0; b < rec.blocks.size(); ++b) {
    auto it = std::find(lw_monoid.symbols.begin(), lw_monoid.symbols.end(), rec.blocks[b]);
    if (it == lw_monoid.symbols.end()) return report;
    block_letter[b] = static_cast<std::size_t>(it - lw_monoid.symbols.begin());
  }

  constexpr Element kUnset = static_cast<Element>(-1);
  report.psi.assign(tr.order(), kUnset);
  report.psi[0] = 0;
  report.well_defined = true;
  std::queue<Element> queue;
  queue.push(0);
  while (!queue.empty()) {
    Element tau = queue.front();
    queue.pop();
    for (std::size_t b = 0; b < rec.blocks.size(); ++b) {
      Element next = tr.multiply(tau, rec.block_images[b]);
      Element image = target.multiply(report.psi[tau], lw_monoid.eta[block_letter[b]]);
      if (report.psi[next] == kUnset) {
        report.psi[next] = image;
        queue.push(next);
      } else if (report.psi[next] != image) {
        report.well_defined = false;
      }
    }
  }
  report.eta_w_surjective =
      std::none_of(report.psi.begin(), report.psi.end(), [](Element e) { return e == kUnset; });
  std::vector<bool> hit(target.order(), false);
  for (Element e : report.psi)
    if (e != kUnset) hit[e] = true;
  report.surjective = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  report.homomorphism = report.well_defined && report.eta_w_surjective &&
                        hom_image_check(tr, target, report.psi);
  return report;
}

WreathPoint wreath_act(const WreathPoint& p, const CanElement& m, const ResidualSpace& g,
                       std::size_t degree) {
  std::vector<std::uint32_t> image(degree);
  for (std::size_t k = 0; k < degree; ++k) image[k] = m.f[p.c * degree + p.x(k)];
  return {Transformation(std::move(image)), g.add(p.c, m.residual)};
}

Element wreath_phi(const CanonicalDecomposition& dec, const WreathPoint& p) {
  const std::size_t start = dec.theta_inverse[FiniteMonoid::identity()];
  const std::size_t k = p.x(start);
  if (p.c >= dec.theta.size() || k >= dec.theta[p.c].size())
    throw Error(ErrorKind::VerificationFailure, "point lies outside the domain of phi");
  return dec.theta[p.c][k];
}

WreathEmbedding wreath_divisor(const CanonicalDecomposition& dec) {
  const auto& m = dec.monoid.monoid;
  WreathEmbedding emb;
  emb.K = dec.K;
  emb.G = dec.group();

  std::set<WreathPoint> domain;
  for (Element t = 0; t < m.order(); ++t) {
    WreathPoint p{dec.f(t, 0), dec.can[t].residual};
    emb.phi.push_back(wreath_phi(dec, p));
    domain.insert(p);
    emb.phi_domain.push_back(std::move(p));
    emb.psi_domain.push_back(dec.can[t]);
    emb.psi.push_back(t);
  }
  emb.phi_bijective = domain.size() == m.order();
  for (Element t = 0; t < m.order(); ++t)
    if (emb.phi[t] != t) emb.phi_bijective = false;

  emb.equivariant = true;
  for (Element t = 0; t < m.order() && emb.equivariant; ++t)
    for (Element s = 0; s < m.order(); ++s) {
      WreathPoint moved = wreath_act(emb.phi_domain[t], emb.psi_domain[s], emb.G, emb.K);
      if (wreath_phi(dec, moved) != m.multiply(emb.phi[t], emb.psi[s])) {
        emb.equivariant = false;
        break;
      }
    }
  emb.g_divides = rho_bar_is_surjective(dec.signature);

  if (!emb.equivariant || !emb.phi_bijective)
    throw Error(ErrorKind::VerificationFailure, "wreath product divisor check failed");
  return emb;
}

}  // namespace monodec
