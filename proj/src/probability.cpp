#include "monodec/probability.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "monodec/error.hpp"

namespace monodec {

namespace {

void check_iteration(double tol, std::size_t cap, std::size_t period) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (period == 0) throw Error(ErrorKind::InvalidPeriod, "period must be positive");
  if (cap < period) throw Error(ErrorKind::InvalidArgument, "iteration cap must be at least the period");
}

Eigen::MatrixXd float_matrix(const Dfa& dfa) {
  const auto n = static_cast<Eigen::Index>(dfa.num_states());
  const double share = 1.0 / static_cast<double>(dfa.alphabet_size());
  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(n, n);
  for (State q = 0; q < dfa.num_states(); ++q)
    for (Letter a = 0; a < dfa.alphabet_size(); ++a)
      pi(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(dfa.next(q, a))) += share;
  return pi;
}

Eigen::VectorXd accepting_vector(const Dfa& dfa) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dfa.num_states()));
  for (State q = 0; q < dfa.num_states(); ++q)
    if (dfa.is_accepting(q)) f(static_cast<Eigen::Index>(q)) = 1.0;
  return f;
}

Accumulation iterate_accumulation(const Dfa& dfa, std::size_t period, double tol, std::size_t cap) {
  check_iteration(tol, cap, period);
  const Eigen::MatrixXd pi = float_matrix(dfa);
  const Eigen::VectorXd f = accepting_vector(dfa);
  const std::size_t n = dfa.num_states();

  Accumulation acc;
  acc.period = period;
  acc.points.resize(period);
  std::vector<double> previous(period, 0.0);
  std::vector<bool> done(period, false);
  std::size_t remaining = period;

  Eigen::RowVectorXd dist = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(n));
  dist(static_cast<Eigen::Index>(dfa.initial())) = 1.0;
  for (std::size_t len = 0; len <= cap && remaining > 0; ++len) {
    if (len > 0) dist = dist * pi;
    const std::size_t r = len % period;
    if (done[r] || len < period) continue;
    const double mu = dist.dot(f);
    const std::size_t prev_len = len - period;
    if (prev_len >= period && prev_len >= n && std::abs(mu - previous[r]) < tol) {
      done[r] = true;
      acc.points[r].converged = true;
      --remaining;
    }
    acc.points[r].r = r;
    acc.points[r].mu = mu;
    previous[r] = mu;
  }
  for (std::size_t r = 0; r < period; ++r) acc.points[r].r = r;

  for (std::size_t r = 0; r < period; ++r)
    for (std::size_t s = r + 1; s < period; ++s)
      if (std::abs(acc.points[r].mu - acc.points[s].mu) < kLimitTolerance)
        acc.duplicates.emplace_back(r, s);
  return acc;
}

bool near(double x, double target) { return std::abs(x - target) < kLimitTolerance; }

void require_maximal_scope(const CanonicalDecomposition& dec) {
  const auto& sig = dec.signature;
  if (!sig.whole_alphabet())
    throw Error(ErrorKind::ScopeError, "zero-one analysis needs a single period over the whole alphabet");
  if (sig.periods[0] != sig.max_periods[0])
    throw Error(ErrorKind::ScopeError, "zero-one analysis needs the maximum period");
}

}  // namespace

BigInt count_words(const Dfa& dfa, std::size_t length) {
  std::vector<BigInt> counts(dfa.num_states());
  counts[dfa.initial()] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<BigInt> next(dfa.num_states());
    for (State q = 0; q < dfa.num_states(); ++q) {
      if (counts[q].is_zero()) continue;
      for (Letter a = 0; a < dfa.alphabet_size(); ++a) next[dfa.next(q, a)] += counts[q];
    }
    counts = std::move(next);
  }
  BigInt accepted = 0;
  for (State q = 0; q < dfa.num_states(); ++q)
    if (dfa.is_accepting(q)) accepted += counts[q];
  return accepted;
}

Rational mu_exact(const Dfa& dfa, std::size_t length) {
  BigInt total = boost::multiprecision::pow(BigInt(dfa.alphabet_size()), static_cast<unsigned>(length));
  return Rational(count_words(dfa, length), total);
}

std::vector<Rational> mu_series(const Dfa& dfa, std::size_t max_length) {
  std::vector<Rational> out;
  std::vector<BigInt> counts(dfa.num_states());
  counts[dfa.initial()] = 1;
  BigInt total = 1;
  for (std::size_t len = 0;; ++len) {
    BigInt accepted = 0;
    for (State q = 0; q < dfa.num_states(); ++q)
      if (dfa.is_accepting(q)) accepted += counts[q];
    out.emplace_back(accepted, total);
    if (len == max_length) break;
    std::vector<BigInt> next(dfa.num_states());
    for (State q = 0; q < dfa.num_states(); ++q)
      for (Letter a = 0; a < dfa.alphabet_size(); ++a) next[dfa.next(q, a)] += counts[q];
    counts = std::move(next);
    total *= dfa.alphabet_size();
  }
  return out;
}

MarkovChain markov_chain(const Dfa& dfa) {
  MarkovChain chain;
  chain.states = dfa.state_names();
  const std::size_t n = dfa.num_states();
  std::vector<std::size_t> letters(n * n, 0);
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) ++letters[q * n + dfa.next(q, a)];
  chain.matrix.reserve(n * n);
  for (auto c : letters) chain.matrix.emplace_back(BigInt(c), BigInt(dfa.alphabet_size()));
  return chain;
}

bool rows_stochastic(const MarkovChain& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (chain.at(i, j) < 0) return false;
      sum += chain.at(i, j);
    }
    if (sum != 1) return false;
  }
  return true;
}

Rational markov_mu(const MarkovChain& chain, const Dfa& dfa, std::size_t length) {
  const std::size_t n = chain.size();
  if (n != dfa.num_states()) throw Error(ErrorKind::InvalidArgument, "chain and automaton differ in size");
  std::vector<Rational> dist(n, Rational(0));
  dist[dfa.initial()] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (dist[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (chain.at(i, j) != 0) next[j] += dist[i] * chain.at(i, j);
    }
    dist = std::move(next);
  }
  Rational mu = 0;
  for (State q = 0; q < n; ++q)
    if (dfa.is_accepting(q)) mu += dist[q];
  return mu;
}

bool Accumulation::all_converged() const {
  return std::all_of(points.begin(), points.end(), [](const auto& p) { return p.converged; });
}

std::size_t Accumulation::distinct() const {
  std::vector<bool> repeated(points.size(), false);
  for (auto [r, s] : duplicates) repeated[s] = true;
  return static_cast<std::size_t>(std::count(repeated.begin(), repeated.end(), false));
}

Accumulation accumulation_points(const Dfa& dfa, std::size_t period, double tol, std::size_t cap) {
  check_iteration(tol, cap, period);
  SyntacticMonoid m = transition_monoid(minimize(dfa));
  const std::size_t max = max_period(m, full_letter_set(m.symbols.size()));
  if (period != max)
    throw Error(ErrorKind::InvalidPeriod, "accumulation points need the maximum period " +
                                              std::to_string(max) + ", got " + std::to_string(period));
  return iterate_accumulation(dfa, period, tol, cap);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "zero";
    case Verdict::One: return "one";
    case Verdict::Neither: return "neither";
    case Verdict::Oscillating: return "oscillating";
  }
  return "?";
}

BasicZeroOne zero_one_basic(const SyntacticMonoid& m, const Dfa& dfa, double tol, std::size_t cap) {
  BasicZeroOne out;
  const std::size_t period = max_period(m, full_letter_set(m.symbols.size()));
  out.accumulation = iterate_accumulation(dfa, period, tol, cap);
  out.zero = find_zero(m.monoid);
  const auto& points = out.accumulation.points;

  if (out.zero) {
    const bool one = m.accepting_image[*out.zero];
    out.verdict = one ? Verdict::One : Verdict::Zero;
    for (const auto& p : points)
      if (!near(p.mu, one ? 1.0 : 0.0))
        throw Error(ErrorKind::VerificationFailure,
                    "zero element present but the limit at r=" + std::to_string(p.r) + " is " +
                        std::to_string(p.mu));
    return out;
  }
  out.verdict = out.accumulation.distinct() == 1 ? Verdict::Neither : Verdict::Oscillating;
  if (out.verdict == Verdict::Neither && out.accumulation.all_converged() &&
      (near(points[0].mu, 0.0) || near(points[0].mu, 1.0)))
    throw Error(ErrorKind::VerificationFailure,
                "no zero element but the probability converges to " + std::to_string(points[0].mu));
  return out;
}

BlockLimit block_limit(const Dfa& dfa, std::string_view w, std::size_t period, double tol,
                       std::size_t cap) {
  check_iteration(tol, cap, period);
  const LetterWord prefix = dfa.encode(w);
  const Eigen::MatrixXd pi = float_matrix(dfa);
  Eigen::MatrixXd step = Eigen::MatrixXd::Identity(pi.rows(), pi.cols());
  for (std::size_t i = 0; i < period; ++i) step = step * pi;
  const Eigen::VectorXd f = accepting_vector(dfa);
  const std::size_t n = dfa.num_states();

  Eigen::RowVectorXd dist = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(n));
  dist(static_cast<Eigen::Index>(dfa.run(dfa.initial(), prefix))) = 1.0;
  BlockLimit out;
  double previous = dist.dot(f);
  out.mu = previous;
  for (std::size_t k = 1; prefix.size() + k * period <= cap; ++k) {
    dist = dist * step;
    out.mu = dist.dot(f);
    if (k >= 2 && (k - 1) * period >= n && std::abs(out.mu - previous) < tol) {
      out.converged = true;
      break;
    }
    previous = out.mu;
  }
  return out;
}

ResidualZeroOne zero_one_residual(const CanonicalDecomposition& dec, const Dfa& dfa,
                                  std::string_view w, double tol, std::size_t cap) {
  require_maximal_scope(dec);
  LwRecognizer rec = lw_recognizer(dec, w);
  const FiniteMonoid& t = rec.residual.monoid;

  ResidualZeroOne out;
  out.w = std::string(w);
  out.r = rec.r;
  for (Element tau = 0; tau < t.order(); ++tau) {
    auto ideal = principal_ideal(t, tau);
    const auto inside = static_cast<std::size_t>(
        std::count_if(ideal.begin(), ideal.end(), [&](Element x) { return rec.accepting[x]; }));
    if (inside != 0 && inside != ideal.size()) continue;
    if (out.is_zero_or_one && ideal.size() >= out.witness.size()) continue;
    out.is_zero_or_one = true;
    out.witness = std::move(ideal);
    out.witness_accepting = inside != 0;
  }
  for (Element x : out.witness) out.witness_names.push_back(t.name(x));

  const std::size_t period = dec.signature.periods[0];
  BlockLimit limit = block_limit(dfa, w, period, tol, cap);
  out.mu_lw = limit.mu;
  out.converged = limit.converged;

  if (out.is_zero_or_one && !near(out.mu_lw, out.witness_accepting ? 1.0 : 0.0))
    throw Error(ErrorKind::VerificationFailure,
                "ideal witness for w=\"" + out.w + "\" predicts " +
                    (out.witness_accepting ? "1" : "0") + " but the limit is " +
                    std::to_string(out.mu_lw));
  if (!out.is_zero_or_one && out.converged && (near(out.mu_lw, 0.0) || near(out.mu_lw, 1.0)))
    throw Error(ErrorKind::VerificationFailure,
                "no ideal witness for w=\"" + out.w + "\" but the limit is " + std::to_string(out.mu_lw));
  return out;
}

std::vector<ResidualZeroOne> zero_one_residuals(const CanonicalDecomposition& dec, const Dfa& dfa,
                                                double tol, std::size_t cap) {
  require_maximal_scope(dec);
  std::vector<ResidualZeroOne> out;
  const std::size_t period = dec.signature.periods[0];
  for (std::size_t r = 0; r < period; ++r)
    for (const auto& word : all_words(dfa.alphabet_size(), r))
      out.push_back(zero_one_residual(dec, dfa, dfa.decode(word), tol, cap));
  return out;
}

Consistency mu_consistency(const CanonicalDecomposition& dec, const Dfa& dfa, std::size_t r,
                           double check_tol, double tol, std::size_t cap) {
  require_maximal_scope(dec);
  const std::size_t period = dec.signature.periods[0];
  if (r >= period) throw Error(ErrorKind::ScopeError, "residual is not below the period");
  Consistency out;
  out.r = r;
  out.mu_r = iterate_accumulation(dfa, period, tol, cap).points[r].mu;
  const auto words = all_words(dfa.alphabet_size(), r);
  double sum = 0.0;
  for (const auto& word : words) sum += block_limit(dfa, dfa.decode(word), period, tol, cap).mu;
  out.average = sum / static_cast<double>(words.size());
  out.ok = std::abs(out.mu_r - out.average) < check_tol;
  return out;
}

}  // namespace monodec
