#include "monodec/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "monodec/error.hpp"

namespace monodec::oracle {

namespace {

constexpr std::uint64_t kMaxSteps = 50'000'000;

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > kMaxWords / base + 1) return kMaxWords + 1;
    out *= base;
  }
  return out;
}

bool increment(std::vector<Letter>& word, std::size_t k) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (++word[i] < k) return true;
    word[i] = 0;
  }
  return false;
}

State walk(const Dfa& dfa, State q, const std::vector<Letter>& word) {
  for (Letter a : word) q = dfa.next(q, a);
  return q;
}

// (index, period) of the cyclic submonoid generated by x
std::pair<std::size_t, std::size_t> power_shape(const FiniteMonoid& m, Element x) {
  std::vector<Element> seen{x};
  Element y = x;
  while (true) {
    y = m.multiply(y, x);
    auto it = std::find(seen.begin(), seen.end(), y);
    if (it != seen.end()) {
      auto index = static_cast<std::size_t>(it - seen.begin());
      return {index, seen.size() - index};
    }
    seen.push_back(y);
  }
}

std::vector<Element> closure(const FiniteMonoid& m, const std::vector<Element>& gens) {
  std::vector<bool> in(m.order(), false);
  std::vector<Element> stack{0}, out{0};
  in[0] = true;
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    for (Element g : gens) {
      Element y = m.multiply(x, g);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
        out.push_back(y);
      }
    }
  }
  return out;
}

struct IsoSearch {
  const FiniteMonoid& a;
  const FiniteMonoid& b;
  std::vector<Element> gens;
  std::vector<Element> images;
  std::vector<std::pair<std::size_t, std::size_t>> shape_b;

  bool extend() const {
    constexpr Element kUnset = static_cast<Element>(-1);
    std::vector<Element> map(a.order(), kUnset);
    map[0] = 0;
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Element x = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Element y = a.multiply(x, gens[i]);
        Element img = b.multiply(map[x], images[i]);
        if (map[y] == kUnset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    std::vector<bool> hit(b.order(), false);
    for (Element x = 0; x < a.order(); ++x) {
      if (map[x] == kUnset || hit[map[x]]) return false;
      hit[map[x]] = true;
    }
    for (Element x = 0; x < a.order(); ++x)
      for (Element y = 0; y < a.order(); ++y)
        if (map[a.multiply(x, y)] != b.multiply(map[x], map[y])) return false;
    return true;
  }

  bool search(std::size_t i) {
    if (i == gens.size()) return extend();
    auto shape = power_shape(a, gens[i]);
    for (Element y = 1; y < b.order(); ++y) {
      if (shape_b[y] != shape) continue;
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  }
};

std::set<std::size_t> ends(const Regex& r, std::string_view word, std::size_t start);

std::set<std::size_t> star_from(const Regex& child, std::string_view word, std::set<std::size_t> reach) {
  std::vector<std::size_t> frontier(reach.begin(), reach.end());
  while (!frontier.empty()) {
    std::size_t p = frontier.back();
    frontier.pop_back();
    for (std::size_t e : ends(child, word, p))
      if (reach.insert(e).second) frontier.push_back(e);
  }
  return reach;
}

std::set<std::size_t> ends(const Regex& r, std::string_view word, std::size_t start) {
  switch (r->kind) {
    case RegexKind::Letter:
      if (start < word.size() && word[start] == r->symbol) return {start + 1};
      return {};
    case RegexKind::Epsilon:
      return {start};
    case RegexKind::Alt: {
      auto out = ends(r->left, word, start);
      out.merge(ends(r->right, word, start));
      return out;
    }
    case RegexKind::Cat: {
      std::set<std::size_t> out;
      for (std::size_t mid : ends(r->left, word, start)) out.merge(ends(r->right, word, mid));
      return out;
    }
    case RegexKind::Star:
      return star_from(r->left, word, {start});
    case RegexKind::Plus:
      return star_from(r->left, word, ends(r->left, word, start));
    case RegexKind::Opt: {
      auto out = ends(r->left, word, start);
      out.insert(start);
      return out;
    }
  }
  return {};
}

}  // namespace

boost::multiprecision::cpp_rational mu_enumerate(const Dfa& dfa, std::size_t length,
                                                 const OracleBudget& budget) {
  const std::size_t k = dfa.alphabet_size();
  const std::uint64_t total = checked_power(k, length);
  if (length > budget.max_word_length || total > kMaxWords)
    throw Error(ErrorKind::BudgetExceeded, "too many words to enumerate");
  std::uint64_t accepted = 0;
  std::vector<Letter> word(length, 0);
  do {
    if (dfa.is_accepting(walk(dfa, dfa.initial(), word))) ++accepted;
  } while (increment(word, k));
  return {boost::multiprecision::cpp_int(accepted), boost::multiprecision::cpp_int(total)};
}

std::uint64_t cycle_gcd(const FiniteMonoid& m, const std::vector<Element>& generators,
                        const std::vector<bool>& gamma, const OracleBudget& budget) {
  if (m.order() > budget.max_monoid_order)
    throw Error(ErrorKind::BudgetExceeded, "monoid too large for cycle enumeration");
  if (gamma.size() != generators.size())
    throw Error(ErrorKind::InvalidArgument, "one flag per generator is required");
  const std::size_t n = m.order();
  std::uint64_t g = 0, steps = 0;
  std::vector<bool> on_path(n, false);

  // Cycles are enumerated once per least vertex s, via paths through vertices > s.
  struct Frame {
    Element x;
    std::size_t next_gen;
    std::uint64_t weight;
  };
  for (Element s = 0; s < n && g != 1; ++s) {
    std::vector<Frame> stack{{s, 0, 0}};
    on_path[s] = true;
    while (!stack.empty() && g != 1) {
      Frame& top = stack.back();
      if (top.next_gen == generators.size()) {
        on_path[top.x] = false;
        stack.pop_back();
        continue;
      }
      if (++steps > kMaxSteps) throw Error(ErrorKind::BudgetExceeded, "cycle enumeration budget exhausted");
      const std::size_t i = top.next_gen++;
      const Element y = m.multiply(top.x, generators[i]);
      const std::uint64_t w = top.weight + (gamma[i] ? 1 : 0);
      if (y == s) {
        g = std::gcd(g, w);
      } else if (y > s && !on_path[y] && stack.size() < budget.max_cycle_length) {
        on_path[y] = true;
        stack.push_back({y, 0, w});
      }
    }
    for (auto& frame : stack) on_path[frame.x] = false;
  }
  return g;
}

bool brute_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b, const OracleBudget& budget) {
  if (a.order() > budget.iso_order_cap || b.order() > budget.iso_order_cap)
    throw Error(ErrorKind::BudgetExceeded, "monoid too large for isomorphism search");
  if (a.order() != b.order()) return false;

  IsoSearch s{a, b, {}, {}, {}};
  while (closure(a, s.gens).size() < a.order()) {
    auto have = closure(a, s.gens);
    std::sort(have.begin(), have.end());
    Element x = 0;
    while (std::binary_search(have.begin(), have.end(), x)) ++x;
    s.gens.push_back(x);
  }
  s.images.resize(s.gens.size());
  for (Element y = 0; y < b.order(); ++y) s.shape_b.push_back(power_shape(b, y));
  return s.search(0);
}

std::vector<std::string> lw_enumerate(const Dfa& dfa, std::string_view w, std::size_t period,
                                      std::size_t max_blocks) {
  const std::size_t k = dfa.alphabet_size();
  std::uint64_t total = 0;
  for (std::size_t j = 1; j <= max_blocks; ++j) {
    total += checked_power(k, period * j);
    if (total > kMaxWords) throw Error(ErrorKind::BudgetExceeded, "too many block words to enumerate");
  }
  std::vector<Letter> prefix;
  for (char c : w) {
    std::size_t a = 0;
    while (a < k && dfa.alphabet()[a] != std::string(1, c)) ++a;
    if (a == k) throw Error(ErrorKind::UnknownSymbol, std::string("symbol '") + c + "' is not in the alphabet");
    prefix.push_back(a);
  }
  const State start = walk(dfa, dfa.initial(), prefix);

  std::vector<std::string> out;
  for (std::size_t j = 1; j <= max_blocks; ++j) {
    std::vector<Letter> word(period * j, 0);
    do {
      if (dfa.is_accepting(walk(dfa, start, word))) {
        std::string text;
        for (Letter a : word) text += dfa.alphabet()[a];
        out.push_back(std::move(text));
      }
    } while (increment(word, k));
  }
  return out;
}

bool regex_matches(const Regex& r, std::string_view word) {
  return ends(r, word, 0).count(word.size()) > 0;
}

}  // namespace monodec::oracle
