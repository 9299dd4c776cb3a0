#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monodec/graph.hpp"
#include "monodec/monoid.hpp"

namespace monodec {

/// Sorted letter indices forming a non-empty subset of an alphabet.
using LetterSet = std::vector<Letter>;

/// Parses "a,b" (or "ab") against `symbols`. Throws UnknownSymbol /
/// InvalidArgument for unknown letters or an empty set.
LetterSet parse_letter_set(std::string_view text, std::span<const std::string> symbols);
LetterSet full_letter_set(std::size_t alphabet_size);

using ResidualVector = std::vector<std::size_t>;

/// The group C_{P1} x ... x C_{Pn}, elements addressed by a flat index with
/// the first component most significant.
class ResidualSpace {
 public:
  ResidualSpace() = default;
  explicit ResidualSpace(std::vector<std::size_t> periods);

  const std::vector<std::size_t>& periods() const noexcept { return periods_; }
  std::size_t dimension() const noexcept { return periods_.size(); }
  std::size_t size() const noexcept { return size_; }

  std::size_t index(const ResidualVector& r) const;
  ResidualVector vector(std::size_t index) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  /// "(r1,...,rn)"
  std::string label(std::size_t index) const;

 private:
  std::vector<std::size_t> periods_;
  std::size_t size_ = 1;
};

/// r_i = |w|_{Gamma_i} mod P_i. Throws Error{UnknownSymbol}.
ResidualVector residual_of_word(std::string_view word, std::span<const std::string> symbols,
                                std::span<const LetterSet> gammas,
                                std::span<const std::size_t> periods);
ResidualVector residual_of_word(std::span<const Letter> word, std::span<const LetterSet> gammas,
                                std::span<const std::size_t> periods);

/// Cayley graph with each edge weighted 1 if its letter is in `gamma`, else 0.
Digraph weighted_cayley(const SyntacticMonoid& m, const LetterSet& gamma);

/// gcd of |w|_Gamma over all closed walks of the Cayley graph.
std::size_t max_period(const SyntacticMonoid& m, const LetterSet& gamma);

struct PeriodSignature {
  std::vector<std::string> symbols;
  std::vector<LetterSet> gammas;
  std::vector<std::size_t> periods;
  std::vector<std::size_t> max_periods;
  ResidualSpace space;
  std::vector<std::size_t> rho_bar;             // element -> residual index
  std::vector<std::vector<Element>> classes;    // residual index -> N_r, ascending
  std::vector<std::string> warnings;

  /// True when gammas = [alphabet] (single period over the whole alphabet).
  bool whole_alphabet() const;
};

/// Builds rho_bar and the residual classes. With `periods` omitted each P_i is
/// the maximum period; supplied periods must divide it (Error{InvalidPeriod}).
PeriodSignature build_signature(const SyntacticMonoid& m, std::vector<LetterSet> gammas,
                                std::optional<std::vector<std::size_t>> periods = std::nullopt);

/// The classes are pairwise disjoint and cover every element.
bool classes_partition(const PeriodSignature& sig, std::size_t order);

/// rho_bar(x y) = rho_bar(x) + rho_bar(y) for all pairs.
bool rho_bar_is_homomorphism(const FiniteMonoid& m, const PeriodSignature& sig);

/// Every residual is the image of some element.
bool rho_bar_is_surjective(const PeriodSignature& sig);

/// {"gammas", "periods", "classes"}.
std::string signature_to_json(const PeriodSignature& sig);

struct Sink {
  std::vector<std::size_t> vertices;  // ascending
  std::size_t period;                 // 0 when the sink carries no cycle
};

/// Strongly connected components without outgoing edges, with their periods
/// (edge weights are ignored; every edge counts 1). Ordered by least vertex.
std::vector<Sink> sink_periods(const Digraph& g);

Digraph digraph_of(const CayleyGraph& g, const std::vector<std::string>& names = {});
Digraph digraph_of(const Dfa& dfa);

}  // namespace monodec
