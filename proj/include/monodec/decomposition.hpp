#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monodec/monoid.hpp"
#include "monodec/period.hpp"

namespace monodec {

/// Largest residual group C_{P1} x ... x C_{Pn} accepted.
inline constexpr std::size_t kMaxResidualGroup = 64;

/// An element (f, c) of T_K^G x| G. `f` stores |G| transformations of degree
/// K back to back: f(c)(k) = f[c * K + k].
struct CanElement {
  std::vector<std::uint32_t> f;
  std::size_t residual = 0;

  friend bool operator==(const CanElement&, const CanElement&) = default;
  friend auto operator<=>(const CanElement&, const CanElement&) = default;
};

/// (f1, c1)(f2, c2) = (y -> f1(y) then f2(y + c1), c1 + c2).
CanElement can_multiply(const CanElement& a, const CanElement& b, const ResidualSpace& g,
                        std::size_t degree);

/// The canonical embedding of M_L into T_K^G x| G.
///
/// theta[r] lists N_r in ascending element order, so theta_r(k) = theta[r][k]
/// and theta_inverse[t] is the position of t inside its class. For every t,
///
///   f_t(r)(k) = theta_{r + rho(t)}^{-1}(theta_r(k) t)   if k < |N_r|
///             = k                                       otherwise.
struct CanonicalDecomposition {
  SyntacticMonoid monoid;
  PeriodSignature signature;
  std::size_t K = 0;
  std::vector<std::vector<Element>> theta;
  std::vector<std::size_t> theta_inverse;
  std::vector<CanElement> can;

  const ResidualSpace& group() const noexcept { return signature.space; }
  Transformation f(Element t, std::size_t r) const;
};

/// Builds Can and runs verify_canonical; Error{VerificationFailure} if any
/// check fails, Error{TooLarge} above kMaxResidualGroup residuals.
CanonicalDecomposition canonical_decomposition(const SyntacticMonoid& m,
                                               const PeriodSignature& sig);

struct CanonicalReport {
  bool homomorphism = false;             // Can(s) Can(s') = Can(s s') on every coordinate
  bool homomorphism_on_classes = false;  // the same, restricted to k < |N_r|
  bool injective = false;
  bool residual_condition = false;

  /// The padded coordinates k >= |N_r| can break `homomorphism` when the
  /// classes differ in size, so it is reported but not required.
  bool ok() const noexcept { return homomorphism_on_classes && injective && residual_condition; }
};

/// Exhaustive check of Can(s) Can(s') = Can(s s'), injectivity, and that the
/// second component of Can(eta(a)) is rho(a) for each letter.
CanonicalReport verify_canonical(const CanonicalDecomposition& dec);

/// Whenever t m = t in M_L, the residual of m is zero.
bool fixed_points_have_zero_residual(const CanonicalDecomposition& dec);

/// {"K", "G", "theta", "can", "verified"}.
std::string decomposition_to_json(const CanonicalDecomposition& dec, bool verified);

/// T_r = { f(r) : (f, 0) in Can(M_L) }, with the identity transformation as
/// element 0 and the others in order of first appearance over ascending t.
struct ResidualMonoid {
  std::size_t r = 0;
  std::vector<Transformation> elements;
  FiniteMonoid monoid;
  std::vector<std::size_t> element_of;  // t in N_0 -> index in `elements`; npos otherwise

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Only for a single period over the whole alphabet; Error{ScopeError} otherwise.
ResidualMonoid residual_monoid(const CanonicalDecomposition& dec, std::size_t r);

/// Recognizer of L_w = { u in (Sigma^P)* : w u in L } by the residual monoid.
struct LwRecognizer {
  LetterWord w;
  std::size_t r = 0;
  std::size_t period = 1;
  std::size_t alphabet_size = 0;
  ResidualMonoid residual;
  std::vector<std::string> blocks;        // lexicographic
  std::vector<Element> block_images;      // block -> element of residual.monoid
  std::vector<bool> accepting;            // element of residual.monoid -> in S
};

LwRecognizer lw_recognizer(const CanonicalDecomposition& dec, std::span<const Letter> w);
LwRecognizer lw_recognizer(const CanonicalDecomposition& dec, std::string_view w);

/// `u` given as blocks, e.g. {"ab", "ba"}. Error{BlockLengthError} for a block
/// of the wrong length.
bool lw_member(const LwRecognizer& rec, std::span<const std::string> u);
/// `u` given as a flat letter word whose length is a multiple of P.
bool lw_member(const LwRecognizer& rec, std::span<const Letter> u);

/// DFA over the block alphabet Sigma^P started in the state reached by `w`.
Dfa block_dfa(const Dfa& dfa, std::span<const Letter> w, std::size_t period);

/// Syntactic monoid of L_w over Sigma^P, via the minimal block DFA.
SyntacticMonoid syntactic_monoid_of_lw(const Dfa& dfa, std::string_view w, std::size_t period,
                                       std::size_t cap = kDefaultMonoidCap);

struct DiagramReport {
  bool well_defined = false;      // eta_w(u) determines eta_{L_w}(u)
  bool surjective = false;        // psi hits every element of M_{L_w}
  bool eta_w_surjective = false;  // the blocks generate all of T_r
  bool homomorphism = false;
  std::vector<Element> psi;       // T_r element -> M_{L_w} element

  bool ok() const noexcept { return well_defined && surjective && eta_w_surjective && homomorphism; }
};

DiagramReport check_diagram(const LwRecognizer& rec, const SyntacticMonoid& lw_monoid);

/// Pair (x, c) of T_K x G acted on by the wreath product.
struct WreathPoint {
  Transformation x;
  std::size_t c = 0;

  friend bool operator==(const WreathPoint&, const WreathPoint&) = default;
  friend auto operator<=>(const WreathPoint&, const WreathPoint&) = default;
};

/// (x, c) * (g, r) = (x then g(c), c + r).
WreathPoint wreath_act(const WreathPoint& p, const CanElement& m, const ResidualSpace& g,
                       std::size_t degree);

struct WreathEmbedding {
  std::size_t K = 0;
  ResidualSpace G;
  std::vector<WreathPoint> phi_domain;  // indexed by element t: (f_t(0), rho(t))
  std::vector<Element> phi;             // phi(phi_domain[i])
  std::vector<CanElement> psi_domain;   // Can(t)
  std::vector<Element> psi;             // psi(psi_domain[i]) = i
  bool equivariant = false;
  bool phi_bijective = false;
  bool g_divides = false;               // rho_bar surjective onto G
};

/// phi(x, c) = theta_c(x(theta_0^{-1}(e))).
Element wreath_phi(const CanonicalDecomposition& dec, const WreathPoint& p);

/// Builds the divisor and checks phi(x * m) = phi(x) psi(m) on every pair;
/// Error{VerificationFailure} if equivariance or bijectivity fails.
WreathEmbedding wreath_divisor(const CanonicalDecomposition& dec);

}  // namespace monodec
