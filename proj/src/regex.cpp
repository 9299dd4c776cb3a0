#include "monodec/regex.hpp"

#include <algorithm>
#include <vector>

#include "monodec/error.hpp"

namespace monodec {

namespace re {

namespace {
Regex make(RegexKind kind, char symbol, Regex left, Regex right) {
  return std::make_shared<const RegexNode>(
      RegexNode{kind, symbol, std::move(left), std::move(right)});
}
}  // namespace

Regex letter(char symbol) { return make(RegexKind::Letter, symbol, {}, {}); }
Regex epsilon() { return make(RegexKind::Epsilon, '\0', {}, {}); }
Regex alt(Regex l, Regex r) { return make(RegexKind::Alt, '\0', std::move(l), std::move(r)); }
Regex cat(Regex l, Regex r) { return make(RegexKind::Cat, '\0', std::move(l), std::move(r)); }
Regex star(Regex c) { return make(RegexKind::Star, '\0', std::move(c), {}); }
Regex plus(Regex c) { return make(RegexKind::Plus, '\0', std::move(c), {}); }
Regex opt(Regex c) { return make(RegexKind::Opt, '\0', std::move(c), {}); }

}  // namespace re

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

bool is_regex_char(char c) {
  return is_letter(c) || c == '&' || c == '(' || c == ')' || c == '|' ||
         c == '*' || c == '+' || c == '?';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Regex parse() {
    precheck();
    Regex result = parse_alt();
    if (pos_ != text_.size()) fail("unexpected character", pos_);
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw Error(ErrorKind::SyntaxError, what, at);
  }

  // Character set and parenthesis balance are checked up front so that an
  // unclosed '(' is reported at its own offset.
  void precheck() const {
    if (text_.empty()) fail("empty expression", 0);
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < text_.size(); ++i) {
      char c = text_[i];
      if (!is_regex_char(c)) fail(std::string("illegal character '") + c + "'", i);
      if (c == '(') open.push_back(i);
      if (c == ')') {
        if (open.empty()) fail("unbalanced ')'", i);
        open.pop_back();
      }
    }
    if (!open.empty()) fail("unbalanced '('", open.back());
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool starts_atom() const {
    if (at_end()) return false;
    char c = peek();
    return is_letter(c) || c == '&' || c == '(';
  }

  Regex parse_alt() {
    Regex left = parse_cat();
    while (!at_end() && peek() == '|') {
      ++pos_;
      Regex right = parse_cat();
      left = re::alt(std::move(left), std::move(right));
    }
    return left;
  }

  Regex parse_cat() {
    if (!starts_atom()) {
      if (at_end() || peek() == ')' || peek() == '|') fail("expected an operand", pos_);
      fail(std::string("dangling operator '") + peek() + "'", pos_);
    }
    Regex left = parse_rep();
    while (starts_atom()) left = re::cat(std::move(left), parse_rep());
    return left;
  }

  Regex parse_rep() {
    Regex node = parse_atom();
    while (!at_end()) {
      char c = peek();
      if (c == '*') node = re::star(std::move(node));
      else if (c == '+') node = re::plus(std::move(node));
      else if (c == '?') node = re::opt(std::move(node));
      else break;
      ++pos_;
    }
    return node;
  }

  Regex parse_atom() {
    char c = peek();
    if (is_letter(c)) {
      ++pos_;
      return re::letter(c);
    }
    if (c == '&') {
      ++pos_;
      return re::epsilon();
    }
    // starts_atom() guarantees '(' here; balance was prechecked.
    std::size_t open = pos_++;
    Regex inner = parse_alt();
    if (at_end() || peek() != ')') fail("expected ')'", at_end() ? open : pos_);
    ++pos_;
    return inner;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_letters(const Regex& r, std::string& out) {
  if (!r) return;
  if (r->kind == RegexKind::Letter) out.push_back(r->symbol);
  collect_letters(r->left, out);
  collect_letters(r->right, out);
}

}  // namespace

Regex parse_regex(std::string_view text) { return Parser(text).parse(); }

bool equal(const Regex& a, const Regex& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind || a->symbol != b->symbol) return false;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

std::string to_string(const Regex& r) {
  switch (r->kind) {
    case RegexKind::Letter: return std::string(1, r->symbol);
    case RegexKind::Epsilon: return "&";
    case RegexKind::Alt: return "Alt(" + to_string(r->left) + "," + to_string(r->right) + ")";
    case RegexKind::Cat: return "Cat(" + to_string(r->left) + "," + to_string(r->right) + ")";
    case RegexKind::Star: return "Star(" + to_string(r->left) + ")";
    case RegexKind::Plus: return "Plus(" + to_string(r->left) + ")";
    case RegexKind::Opt: return "Opt(" + to_string(r->left) + ")";
  }
  return {};
}

std::string letters_of(const Regex& r) {
  std::string out;
  collect_letters(r, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace monodec
