#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monodec/regex.hpp"

namespace monodec {

using State = std::size_t;
using Letter = std::size_t;
using LetterWord = std::vector<Letter>;

/// Complete deterministic automaton. Symbols are kept in sorted order and
/// letters are addressed by their index in that order; the transition table
/// is row-major (state, letter).
class Dfa {
 public:
  Dfa(std::vector<std::string> alphabet, std::vector<std::string> state_names,
      State initial, std::vector<bool> accepting, std::vector<State> delta);

  std::size_t num_states() const noexcept { return state_names_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  const std::string& state_name(State q) const { return state_names_.at(q); }
  State initial() const noexcept { return initial_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }

  State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
  State run(State q, std::span<const Letter> word) const;
  bool accepts(std::span<const Letter> word) const;

  /// Words over single-character symbols, e.g. "abba".
  bool accepts(std::string_view word) const;
  std::optional<Letter> letter_index(std::string_view symbol) const;
  /// Throws Error{UnknownSymbol}.
  LetterWord encode(std::string_view word) const;
  std::string decode(std::span<const Letter> word) const;

  /// True when every symbol is one character long.
  bool has_char_alphabet() const noexcept;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> state_names_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

/// Drops states unreachable from the initial state. Names of removed states
/// are appended to `removed` when provided.
Dfa trim(const Dfa& dfa, std::vector<std::string>* removed = nullptr);

/// Minimal complete DFA for the same language, states numbered by BFS from
/// the initial state with letters in sorted order. A merged state keeps the
/// name of its lowest-numbered member.
Dfa minimize(const Dfa& dfa);

/// Thompson construction, subset construction, completion and minimization.
/// `alphabet` lists the symbols as characters; it must contain every letter
/// used by `ast` (Error{AlphabetMismatch} otherwise). States are named "0".."m-1".
Dfa regex_to_dfa(const Regex& ast, std::string_view alphabet);

/// Reads the JSON automaton format
///   {"alphabet":[..], "states":[..], "initial":s, "accepting":[..],
///    "transitions":[{"from":s,"on":a,"to":s'}, ..]}
/// and returns a trimmed, validated Dfa. Warnings about dropped states are
/// appended to `warnings` when provided.
Dfa load_dfa(std::string_view document, std::vector<std::string>* warnings = nullptr);

/// Inverse of load_dfa.
std::string dump_dfa(const Dfa& dfa);

/// All words of length `length` over the letters 0..k-1 in lexicographic order.
std::vector<LetterWord> all_words(std::size_t k, std::size_t length);

}  // namespace monodec
