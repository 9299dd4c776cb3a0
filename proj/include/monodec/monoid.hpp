#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monodec/dfa.hpp"

namespace monodec {

using Element = std::size_t;

/// Default cap on the order of monoids produced by closure.
inline constexpr std::size_t kDefaultMonoidCap = 5000;

/// Orders above this are not re-checked for associativity when the table
/// was produced by closure.
inline constexpr std::size_t kAssociativityCheckLimit = 512;

struct Generator {
  std::string symbol;
  Element element;
};

/// A finite monoid given by its multiplication table. Elements are the dense
/// indices 0..order-1 and element 0 is the identity. Row = left factor.
///
/// The table is shared between copies, so copying a monoid is cheap.
class FiniteMonoid {
 public:
  enum class Check { Always, Closure };

  /// The trivial monoid.
  FiniteMonoid();
  FiniteMonoid(std::size_t order, std::vector<std::uint32_t> table,
               std::vector<Generator> generators = {},
               std::vector<std::string> names = {}, Check check = Check::Always);

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }
  Element multiply(Element a, Element b) const { return (*table_)[a * order_ + b]; }
  Element operator()(Element a, Element b) const { return multiply(a, b); }

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(Element x) const;
  const std::vector<std::uint32_t>& table() const noexcept { return *table_; }

  bool is_commutative() const;

 private:
  std::size_t order_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
  std::vector<Generator> generators_;
  std::vector<std::string> names_;
};

/// A total map on {0..K-1}. Products read left to right: `a.then(b)` applies
/// `a` first, matching right multiplication in transition monoids.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint32_t> image);
  static Transformation identity(std::size_t degree);

  std::size_t degree() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::size_t k) const { return image_[k]; }
  const std::vector<std::uint32_t>& image() const noexcept { return image_; }
  Transformation then(const Transformation& next) const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// Transition monoid of a minimal DFA, i.e. the syntactic monoid together
/// with its syntactic morphism restricted to letters.
struct SyntacticMonoid {
  FiniteMonoid monoid;
  std::vector<std::string> symbols;              // DFA alphabet
  std::vector<Element> eta;                      // letter index -> element
  std::vector<bool> accepting_image;             // element -> in eta(L)
  std::vector<Transformation> transformations;   // element -> action on DFA states
  std::vector<LetterWord> representatives;       // shortest word per element

  std::size_t order() const noexcept { return monoid.order(); }
  Element image_of(std::span<const Letter> word) const;
  bool accepts(std::span<const Letter> word) const { return accepting_image[image_of(word)]; }
};

/// Elements are numbered in BFS order from the identity, right-multiplying by
/// letters in sorted order. Throws Error{MonoidTooLarge} above `cap`.
SyntacticMonoid transition_monoid(const Dfa& dfa, std::size_t cap = kDefaultMonoidCap);

struct CayleyEdge {
  Element from;
  Letter letter;
  Element to;
};

struct CayleyGraph {
  std::size_t vertices = 0;
  std::vector<std::string> symbols;
  std::vector<CayleyEdge> edges;
};

CayleyGraph cayley_graph(const SyntacticMonoid& m);

/// One edge line per (from, symbol, to); vertices labelled by `names` when given.
std::string to_dot(const CayleyGraph& g, const std::vector<std::string>& names = {});

std::optional<Element> find_zero(const FiniteMonoid& m);

/// Two-sided principal ideal M x M, sorted.
std::vector<Element> principal_ideal(const FiniteMonoid& m, Element x);

bool is_ideal(const FiniteMonoid& m, std::span<const Element> candidate);

/// Rees factor monoid M / I. Surviving elements keep their relative order;
/// the collapsed zero is the last element. Throws Error{NotAnIdeal}.
FiniteMonoid rees_factor(const FiniteMonoid& m, std::span<const Element> ideal);

/// Index of (x, n) in a product built below: n * |M| + x.
inline Element pair_index(const FiniteMonoid& m, Element x, Element n) {
  return n * m.order() + x;
}

/// Semidirect product M x| N with (m1,n1)(m2,n2) = (m1 (n1 * m2), n1 n2).
/// `action[n * |M| + x]` is n * x. Throws NotAnAction / NotDistributive.
FiniteMonoid semidirect_product(const FiniteMonoid& m, const FiniteMonoid& n,
                                std::span<const std::uint32_t> action);

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n);

/// The function monoid M^N with pointwise product; f is encoded as
/// sum_y f(y) |M|^y. Throws Error{TooLarge} when |M|^|N| exceeds `cap`.
FiniteMonoid power_monoid(const FiniteMonoid& m, const FiniteMonoid& n,
                          std::size_t cap = kDefaultMonoidCap);

/// The shift action (n . f)(y) = f(y n) of N on M^N, laid out for
/// semidirect_product(power_monoid(m, n), n, ...).
std::vector<std::uint32_t> shift_action(const FiniteMonoid& m, const FiniteMonoid& n);

enum class NamedKind { Cyclic, RightZero, LeftZero, Symmetric, FullTransformation };

/// C_K, U_K, U-bar_K, S_K or T_K. Transformations compose left to right and
/// T_K lists the identity first, then the remaining maps lexicographically.
FiniteMonoid make_named(NamedKind kind, std::size_t k, std::size_t cap = kDefaultMonoidCap);

bool hom_image_check(const FiniteMonoid& src, const FiniteMonoid& dst,
                     std::span<const Element> map);

/// {"order", "identity", "table", "generators", "accepting_image"}.
std::string monoid_to_json(const SyntacticMonoid& m);

}  // namespace monodec
