#include "monodec/dfa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "json.hpp"

#include "monodec/error.hpp"

namespace monodec {

Dfa::Dfa(std::vector<std::string> alphabet, std::vector<std::string> state_names,
         State initial, std::vector<bool> accepting, std::vector<State> delta) {
  const std::size_t n = state_names.size();
  const std::size_t k = alphabet.size();
  if (k == 0) throw Error(ErrorKind::FormatError, "alphabet is empty");
  if (n == 0) throw Error(ErrorKind::FormatError, "automaton has no states");
  if (initial >= n) throw Error(ErrorKind::UnknownState, "initial state out of range");
  if (accepting.size() != n) throw Error(ErrorKind::FormatError, "accepting mask has wrong size");
  if (delta.size() != n * k)
    throw Error(ErrorKind::PartialTransitionFunction, "transition table has wrong size");
  for (State q : delta)
    if (q >= n) throw Error(ErrorKind::UnknownState, "transition target out of range");
  for (const auto& s : alphabet)
    if (s.empty()) throw Error(ErrorKind::FormatError, "empty alphabet symbol");

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return alphabet[a] < alphabet[b]; });
  for (std::size_t i = 1; i < k; ++i)
    if (alphabet[order[i]] == alphabet[order[i - 1]])
      throw Error(ErrorKind::FormatError, "duplicate alphabet symbol '" + alphabet[order[i]] + "'");

  alphabet_.reserve(k);
  for (std::size_t i : order) alphabet_.push_back(alphabet[i]);
  delta_.resize(n * k);
  for (State q = 0; q < n; ++q)
    for (std::size_t i = 0; i < k; ++i) delta_[q * k + i] = delta[q * k + order[i]];
  state_names_ = std::move(state_names);
  initial_ = initial;
  accepting_ = std::move(accepting);
}

State Dfa::run(State q, std::span<const Letter> word) const {
  for (Letter a : word) q = next(q, a);
  return q;
}

bool Dfa::accepts(std::span<const Letter> word) const {
  return accepting_[run(initial_, word)];
}

bool Dfa::accepts(std::string_view word) const {
  LetterWord letters = encode(word);
  return accepts(std::span<const Letter>(letters));
}

std::optional<Letter> Dfa::letter_index(std::string_view symbol) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), symbol);
  if (it == alphabet_.end() || *it != symbol) return std::nullopt;
  return static_cast<Letter>(it - alphabet_.begin());
}

LetterWord Dfa::encode(std::string_view word) const {
  LetterWord out;
  out.reserve(word.size());
  for (char c : word) {
    auto idx = letter_index(std::string_view(&c, 1));
    if (!idx) throw Error(ErrorKind::UnknownSymbol, std::string("symbol '") + c + "' is not in the alphabet");
    out.push_back(*idx);
  }
  return out;
}

std::string Dfa::decode(std::span<const Letter> word) const {
  std::string out;
  for (Letter a : word) out += alphabet_.at(a);
  return out;
}

bool Dfa::has_char_alphabet() const noexcept {
  return std::all_of(alphabet_.begin(), alphabet_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

Dfa trim(const Dfa& dfa, std::vector<std::string>* removed) {
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.alphabet_size();
  std::vector<bool> seen(n, false);
  std::vector<State> stack{dfa.initial()};
  seen[dfa.initial()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Letter a = 0; a < k; ++a) {
      State p = dfa.next(q, a);
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return dfa;

  std::vector<State> remap(n, 0);
  std::vector<std::string> names;
  std::vector<bool> accepting;
  for (State q = 0; q < n; ++q) {
    if (seen[q]) {
      remap[q] = names.size();
      names.push_back(dfa.state_name(q));
      accepting.push_back(dfa.is_accepting(q));
    } else if (removed) {
      removed->push_back(dfa.state_name(q));
    }
  }
  std::vector<State> delta;
  for (State q = 0; q < n; ++q)
    if (seen[q])
      for (Letter a = 0; a < k; ++a) delta.push_back(remap[dfa.next(q, a)]);
  return Dfa(dfa.alphabet(), std::move(names), remap[dfa.initial()], std::move(accepting),
             std::move(delta));
}

Dfa minimize(const Dfa& input) {
  const Dfa dfa = trim(input);
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.alphabet_size();

  // Moore refinement: split blocks by (own block, successor blocks) until stable.
  std::vector<std::size_t> block(n);
  for (State q = 0; q < n; ++q) block[q] = dfa.is_accepting(q) ? 1 : 0;
  std::size_t num_blocks = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> refined(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> key;
      key.reserve(k + 1);
      key.push_back(block[q]);
      for (Letter a = 0; a < k; ++a) key.push_back(block[dfa.next(q, a)]);
      auto [it, inserted] = ids.emplace(std::move(key), ids.size());
      refined[q] = it->second;
    }
    block = std::move(refined);
    if (ids.size() == num_blocks) break;
    num_blocks = ids.size();
  }

  std::vector<State> representative(num_blocks, n);
  for (State q = 0; q < n; ++q)
    if (representative[block[q]] == n) representative[block[q]] = q;

  // Canonical numbering: BFS over blocks from the initial block.
  std::vector<std::size_t> number(num_blocks, num_blocks);
  std::vector<std::size_t> order;
  std::queue<std::size_t> queue;
  number[block[dfa.initial()]] = 0;
  order.push_back(block[dfa.initial()]);
  queue.push(block[dfa.initial()]);
  while (!queue.empty()) {
    std::size_t b = queue.front();
    queue.pop();
    for (Letter a = 0; a < k; ++a) {
      std::size_t c = block[dfa.next(representative[b], a)];
      if (number[c] == num_blocks) {
        number[c] = order.size();
        order.push_back(c);
        queue.push(c);
      }
    }
  }

  std::vector<std::string> names;
  std::vector<bool> accepting;
  std::vector<State> delta;
  for (std::size_t b : order) {
    State rep = representative[b];
    names.push_back(dfa.state_name(rep));
    accepting.push_back(dfa.is_accepting(rep));
    for (Letter a = 0; a < k; ++a) delta.push_back(number[block[dfa.next(rep, a)]]);
  }
  return Dfa(dfa.alphabet(), std::move(names), 0, std::move(accepting), std::move(delta));
}

namespace {

struct Nfa {
  std::vector<std::vector<std::size_t>> epsilon;
  std::vector<std::vector<std::pair<Letter, std::size_t>>> moves;

  std::size_t add_state() {
    epsilon.emplace_back();
    moves.emplace_back();
    return epsilon.size() - 1;
  }
};

struct Fragment {
  std::size_t start;
  std::size_t accept;
};

Fragment thompson(const Regex& r, const std::string& alphabet, Nfa& nfa) {
  switch (r->kind) {
    case RegexKind::Letter: {
      auto s = nfa.add_state(), t = nfa.add_state();
      nfa.moves[s].emplace_back(alphabet.find(r->symbol), t);
      return {s, t};
    }
    case RegexKind::Epsilon: {
      auto s = nfa.add_state(), t = nfa.add_state();
      nfa.epsilon[s].push_back(t);
      return {s, t};
    }
    case RegexKind::Alt: {
      Fragment l = thompson(r->left, alphabet, nfa);
      Fragment rr = thompson(r->right, alphabet, nfa);
      auto s = nfa.add_state(), t = nfa.add_state();
      nfa.epsilon[s] = {l.start, rr.start};
      nfa.epsilon[l.accept].push_back(t);
      nfa.epsilon[rr.accept].push_back(t);
      return {s, t};
    }
    case RegexKind::Cat: {
      Fragment l = thompson(r->left, alphabet, nfa);
      Fragment rr = thompson(r->right, alphabet, nfa);
      nfa.epsilon[l.accept].push_back(rr.start);
      return {l.start, rr.accept};
    }
    case RegexKind::Star:
    case RegexKind::Plus:
    case RegexKind::Opt: {
      Fragment c = thompson(r->left, alphabet, nfa);
      auto s = nfa.add_state(), t = nfa.add_state();
      nfa.epsilon[s].push_back(c.start);
      nfa.epsilon[c.accept].push_back(t);
      if (r->kind != RegexKind::Plus) nfa.epsilon[s].push_back(t);
      if (r->kind != RegexKind::Opt) nfa.epsilon[c.accept].push_back(c.start);
      return {s, t};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "malformed regex node");
}

std::vector<std::size_t> closure(const Nfa& nfa, std::vector<std::size_t> states) {
  std::vector<bool> in(nfa.epsilon.size(), false);
  for (auto s : states) in[s] = true;
  std::vector<std::size_t> stack = states;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto t : nfa.epsilon[s])
      if (!in[t]) {
        in[t] = true;
        states.push_back(t);
        stack.push_back(t);
      }
  }
  std::sort(states.begin(), states.end());
  return states;
}

}  // namespace

Dfa regex_to_dfa(const Regex& ast, std::string_view alphabet_text) {
  std::string alphabet(alphabet_text);
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.empty()) throw Error(ErrorKind::AlphabetMismatch, "alphabet is empty");
  for (char c : letters_of(ast))
    if (alphabet.find(c) == std::string::npos)
      throw Error(ErrorKind::AlphabetMismatch,
                  std::string("regex uses '") + c + "' which is not in the alphabet");

  Nfa nfa;
  Fragment top = thompson(ast, alphabet, nfa);
  const std::size_t k = alphabet.size();

  std::map<std::vector<std::size_t>, State> ids;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<State> delta;
  auto intern = [&](std::vector<std::size_t> set) {
    auto [it, inserted] = ids.emplace(set, subsets.size());
    if (inserted) subsets.push_back(std::move(set));
    return it->second;
  };
  intern(closure(nfa, {top.start}));
  // The empty subset, if reached, is the completion sink.
  for (State q = 0; q < subsets.size(); ++q) {
    for (Letter a = 0; a < k; ++a) {
      std::vector<std::size_t> targets;
      for (auto s : subsets[q])
        for (auto [letter, t] : nfa.moves[s])
          if (letter == a) targets.push_back(t);
      delta.push_back(intern(closure(nfa, std::move(targets))));
    }
  }

  std::vector<std::string> symbols;
  for (char c : alphabet) symbols.emplace_back(1, c);
  std::vector<std::string> names;
  std::vector<bool> accepting;
  for (State q = 0; q < subsets.size(); ++q) {
    names.push_back(std::to_string(q));
    accepting.push_back(std::binary_search(subsets[q].begin(), subsets[q].end(), top.accept));
  }
  Dfa minimal = minimize(Dfa(symbols, names, 0, accepting, delta));

  std::vector<std::string> renamed;
  for (State q = 0; q < minimal.num_states(); ++q) renamed.push_back(std::to_string(q));
  std::vector<State> table;
  for (State q = 0; q < minimal.num_states(); ++q)
    for (Letter a = 0; a < k; ++a) table.push_back(minimal.next(q, a));
  return Dfa(minimal.alphabet(), std::move(renamed), minimal.initial(), minimal.accepting(),
             std::move(table));
}

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorKind::FormatError, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_of(const json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorKind::FormatError, std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> strings_of(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::FormatError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(string_of(e, what));
  return out;
}

}  // namespace

Dfa load_dfa(std::string_view document, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::FormatError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::FormatError, "document must be a JSON object");

  auto alphabet = strings_of(field(doc, "alphabet"), "alphabet");
  auto states = strings_of(field(doc, "states"), "states");
  auto initial = string_of(field(doc, "initial"), "initial");
  auto accepting = strings_of(field(doc, "accepting"), "accepting");
  const json& transitions = field(doc, "transitions");
  if (!transitions.is_array()) throw Error(ErrorKind::FormatError, "transitions must be an array");

  for (const auto& s : alphabet)
    if (s.size() != 1) throw Error(ErrorKind::FormatError, "alphabet symbols must be single characters");

  std::map<std::string, State> state_index;
  for (const auto& s : states)
    if (!state_index.emplace(s, state_index.size()).second)
      throw Error(ErrorKind::FormatError, "duplicate state \"" + s + "\"");
  std::map<std::string, Letter> letter_index;
  for (const auto& a : alphabet)
    if (!letter_index.emplace(a, letter_index.size()).second)
      throw Error(ErrorKind::FormatError, "duplicate symbol \"" + a + "\"");

  auto state_of = [&](const std::string& name, const char* role) {
    auto it = state_index.find(name);
    if (it == state_index.end())
      throw Error(ErrorKind::UnknownState, std::string(role) + " state \"" + name + "\" is not declared");
    return it->second;
  };

  State q0 = state_of(initial, "initial");
  std::vector<bool> accept_mask(states.size(), false);
  for (const auto& s : accepting) accept_mask[state_of(s, "accepting")] = true;

  const std::size_t n = states.size(), k = alphabet.size();
  constexpr State kUnset = static_cast<State>(-1);
  std::vector<State> delta(n * k, kUnset);
  for (const auto& t : transitions) {
    if (!t.is_object()) throw Error(ErrorKind::FormatError, "transition must be an object");
    State from = state_of(string_of(field(t, "from"), "from"), "source");
    State to = state_of(string_of(field(t, "to"), "to"), "target");
    auto on = string_of(field(t, "on"), "on");
    auto it = letter_index.find(on);
    if (it == letter_index.end())
      throw Error(ErrorKind::UnknownSymbol, "transition on undeclared symbol \"" + on + "\"");
    State& slot = delta[from * k + it->second];
    if (slot != kUnset)
      throw Error(ErrorKind::FormatError,
                  "duplicate transition (" + states[from] + ", " + on + ")");
    slot = to;
  }
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < k; ++a)
      if (delta[q * k + a] == kUnset)
        throw Error(ErrorKind::PartialTransitionFunction,
                    "missing transition (" + states[q] + ", " + alphabet[a] + ")");

  std::vector<std::string> removed;
  Dfa dfa = trim(Dfa(alphabet, states, q0, accept_mask, delta), &removed);
  if (warnings && !removed.empty()) {
    std::string msg = "removed unreachable state(s):";
    for (const auto& s : removed) msg += " " + s;
    warnings->push_back(msg);
  }
  return dfa;
}

std::string dump_dfa(const Dfa& dfa) {
  nlohmann::ordered_json doc;
  doc["alphabet"] = dfa.alphabet();
  doc["states"] = dfa.state_names();
  doc["initial"] = dfa.state_name(dfa.initial());
  std::vector<std::string> accepting;
  for (State q = 0; q < dfa.num_states(); ++q)
    if (dfa.is_accepting(q)) accepting.push_back(dfa.state_name(q));
  doc["accepting"] = accepting;
  auto transitions = nlohmann::ordered_json::array();
  for (State q = 0; q < dfa.num_states(); ++q)
    for (Letter a = 0; a < dfa.alphabet_size(); ++a)
      transitions.push_back({{"from", dfa.state_name(q)},
                             {"on", dfa.alphabet()[a]},
                             {"to", dfa.state_name(dfa.next(q, a))}});
  doc["transitions"] = transitions;
  return doc.dump(2);
}

std::vector<LetterWord> all_words(std::size_t k, std::size_t length) {
  std::vector<LetterWord> out;
  LetterWord w(length, 0);
  for (;;) {
    out.push_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace monodec
