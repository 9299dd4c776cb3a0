#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace monodec {

enum class RegexKind { Letter, Epsilon, Alt, Cat, Star, Plus, Opt };

struct RegexNode;

/// Immutable regex tree. Nodes are shared, never mutated after construction.
using Regex = std::shared_ptr<const RegexNode>;

struct RegexNode {
  RegexKind kind;
  char symbol = '\0';  // Letter only
  Regex left;          // Alt/Cat left operand, or the child of Star/Plus/Opt
  Regex right;         // Alt/Cat right operand
};

namespace re {
Regex letter(char symbol);
Regex epsilon();
Regex alt(Regex left, Regex right);
Regex cat(Regex left, Regex right);
Regex star(Regex child);
Regex plus(Regex child);
Regex opt(Regex child);
}  // namespace re

/// Parses the grammar
///
///   alt  := cat ('|' cat)*
///   cat  := rep+
///   rep  := atom ('*' | '+' | '?')*
///   atom := letter | '&' | '(' alt ')'
///
/// with letters drawn from [a-z0-9] and '&' denoting the empty word.
/// Throws Error{SyntaxError} carrying the byte offset of the offending input.
Regex parse_regex(std::string_view text);

/// Structural equality.
bool equal(const Regex& a, const Regex& b);

/// Prefix rendering, e.g. "Cat(a,Star(Cat(a,a)))".
std::string to_string(const Regex& r);

/// Sorted, de-duplicated letters occurring in `r`.
std::string letters_of(const Regex& r);

}  // namespace monodec
