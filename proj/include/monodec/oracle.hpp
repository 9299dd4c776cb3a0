#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monodec/dfa.hpp"
#include "monodec/monoid.hpp"
#include "monodec/regex.hpp"

// Brute-force references. Nothing here calls the main algorithms; only the
// plain data types (Dfa, FiniteMonoid, Regex) are shared.
namespace monodec::oracle {

struct OracleBudget {
  std::size_t max_word_length = 12;
  std::size_t max_cycle_length = 30;
  std::size_t max_monoid_order = 30;
  std::size_t iso_order_cap = 16;
};

/// Words enumerated per call at most.
inline constexpr std::uint64_t kMaxWords = 10'000'000;

/// Counts acceptance over all of Sigma^len. Error{BudgetExceeded} past
/// kMaxWords words or the budget's word length.
boost::multiprecision::cpp_rational mu_enumerate(const Dfa& dfa, std::size_t length,
                                                 const OracleBudget& budget = {});

/// gcd of the Gamma-letter counts over every simple cycle of the Cayley graph
/// of `m` (letters given by `generators`, edge x -> x g). `gamma[a]` marks the
/// counted letters. Returns 0 when no cycle carries a counted letter.
std::uint64_t cycle_gcd(const FiniteMonoid& m, const std::vector<Element>& generators,
                        const std::vector<bool>& gamma, const OracleBudget& budget = {});

/// A table-preserving bijection exists. Error{BudgetExceeded} above iso_order_cap.
bool brute_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b, const OracleBudget& budget = {});

/// Block words u (concatenated) with at most `max_blocks` blocks of length P
/// and w u accepted, shortest first then lexicographic.
std::vector<std::string> lw_enumerate(const Dfa& dfa, std::string_view w, std::size_t period,
                                      std::size_t max_blocks);

/// Direct matcher over the syntax tree.
bool regex_matches(const Regex& r, std::string_view word);

}  // namespace monodec::oracle
