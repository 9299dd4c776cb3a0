#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monodec/decomposition.hpp"
#include "monodec/dfa.hpp"
#include "monodec/monoid.hpp"
#include "monodec/period.hpp"

namespace monodec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kDefaultIterationCap = 4096;
/// Two limits closer than this count as the same point, and a limit this
/// close to 0 or 1 counts as 0 or 1.
inline constexpr double kLimitTolerance = 1e-6;

/// |L cap Sigma^len| / |Sigma|^len by exact path counting.
Rational mu_exact(const Dfa& dfa, std::size_t length);
/// mu_exact for every length 0..max_length.
std::vector<Rational> mu_series(const Dfa& dfa, std::size_t max_length);
/// |L cap Sigma^len|.
BigInt count_words(const Dfa& dfa, std::size_t length);

/// Pi(q, q') = |{a : q -a-> q'}| / |Sigma|, row-major.
struct MarkovChain {
  std::vector<std::string> states;
  std::vector<Rational> matrix;

  std::size_t size() const noexcept { return states.size(); }
  const Rational& at(std::size_t i, std::size_t j) const { return matrix[i * size() + j]; }
};

MarkovChain markov_chain(const Dfa& dfa);
bool rows_stochastic(const MarkovChain& chain);
/// sum over accepting q of Pi^len(q0, q), in exact arithmetic.
Rational markov_mu(const MarkovChain& chain, const Dfa& dfa, std::size_t length);

struct AccumulationPoint {
  std::size_t r = 0;
  double mu = 0.0;
  bool converged = false;
};

struct Accumulation {
  std::size_t period = 1;
  std::vector<AccumulationPoint> points;
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;  // r < r' with equal limits

  bool all_converged() const;
  /// Number of distinct limits.
  std::size_t distinct() const;
};

/// For each r < P, iterates mu(r + kP), k = 1, 2, ..., until two successive
/// values differ by less than `tol` or r + kP exceeds `cap`. Comparisons start
/// once the length reaches the number of states. `P` must be the maximum
/// period with respect to the whole alphabet (Error{InvalidPeriod}).
Accumulation accumulation_points(const Dfa& dfa, std::size_t period,
                                 double tol = kDefaultTolerance,
                                 std::size_t cap = kDefaultIterationCap);

enum class Verdict { Zero, One, Neither, Oscillating };
std::string to_string(Verdict v);

struct BasicZeroOne {
  Verdict verdict = Verdict::Neither;
  std::optional<Element> zero;
  Accumulation accumulation;
};

/// Decided by the zero element of the monoid and checked against the limits;
/// a disagreement throws Error{VerificationFailure}.
BasicZeroOne zero_one_basic(const SyntacticMonoid& m, const Dfa& dfa,
                            double tol = kDefaultTolerance,
                            std::size_t cap = kDefaultIterationCap);

/// Verdict on mu_{L_w} from the principal ideals of T_r.
struct ResidualZeroOne {
  std::string w;
  std::size_t r = 0;
  bool is_zero_or_one = false;
  std::vector<Element> witness;       // principal ideal of T_r, empty if none
  std::vector<std::string> witness_names;
  bool witness_accepting = false;     // witness inside S_w (limit 1) or disjoint (limit 0)
  double mu_lw = 0.0;
  bool converged = false;
};

/// Needs a single maximal period over the whole alphabet and |w| < P
/// (Error{ScopeError}). Throws Error{VerificationFailure} when the ideal
/// verdict and the numeric limit of mu_{L_w} disagree.
ResidualZeroOne zero_one_residual(const CanonicalDecomposition& dec, const Dfa& dfa,
                                  std::string_view w, double tol = kDefaultTolerance,
                                  std::size_t cap = kDefaultIterationCap);

/// Every w in Sigma^r for r < P, in order of r then lexicographically.
std::vector<ResidualZeroOne> zero_one_residuals(const CanonicalDecomposition& dec, const Dfa& dfa,
                                                double tol = kDefaultTolerance,
                                                std::size_t cap = kDefaultIterationCap);

/// lim mu_{L_w}(k), iterating Pi^P from the state reached by w.
struct BlockLimit {
  double mu = 0.0;
  bool converged = false;
};
BlockLimit block_limit(const Dfa& dfa, std::string_view w, std::size_t period,
                       double tol = kDefaultTolerance, std::size_t cap = kDefaultIterationCap);

struct Consistency {
  std::size_t r = 0;
  double mu_r = 0.0;
  double average = 0.0;  // sum over w in Sigma^r of mu_{L_w} / |Sigma|^r
  bool ok = false;
};

/// Compares mu_r with the average of the block limits over Sigma^r.
Consistency mu_consistency(const CanonicalDecomposition& dec, const Dfa& dfa, std::size_t r,
                           double check_tol = kLimitTolerance, double tol = kDefaultTolerance,
                           std::size_t cap = kDefaultIterationCap);

}  // namespace monodec
