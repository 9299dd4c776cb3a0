#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monodec/dfa.hpp"
#include "monodec/error.hpp"
#include "support.hpp"

using namespace monodec;
using support::from_regex;
using support::sample_dfa;

namespace {

const char* kA3Text = R"({
  "alphabet": ["a", "b"], "states": ["q1", "q2", "q3", "q4"], "initial": "q1",
  "accepting": ["q2", "q4"],
  "transitions": [
    {"from": "q1", "on": "a", "to": "q2"}, {"from": "q1", "on": "b", "to": "q4"},
    {"from": "q2", "on": "a", "to": "q3"}, {"from": "q2", "on": "b", "to": "q3"},
    {"from": "q3", "on": "a", "to": "q2"}, {"from": "q3", "on": "b", "to": "q2"},
    {"from": "q4", "on": "a", "to": "q4"}, {"from": "q4", "on": "b", "to": "q4"}]})";

ErrorKind load_error(const std::string& text) {
  try {
    load_dfa(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document loaded without error");
  return ErrorKind::InvalidArgument;
}

std::string edited(const std::string& from, const std::string& to) {
  std::string text = kA3Text;
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

bool same_language_up_to(const Dfa& x, const Dfa& y, std::size_t n) {
  for (std::size_t len = 0; len <= n; ++len)
    for (const auto& w : all_words(x.alphabet_size(), len))
      if (x.accepts(w) != y.accepts(w)) return false;
  return true;
}

// A word of length <= n tells p and q apart.
bool distinguishable(const Dfa& d, State p, State q, std::size_t n) {
  for (std::size_t len = 0; len <= n; ++len)
    for (const auto& w : all_words(d.alphabet_size(), len))
      if (d.is_accepting(d.run(p, w)) != d.is_accepting(d.run(q, w))) return true;
  return false;
}

}  // namespace

TEST_CASE("regex_to_dfa state counts") {
  Dfa even = from_regex("((a|b)(a|b))*", "ab");
  CHECK(even.num_states() == 2);
  CHECK(even.next(even.next(0, 0), 1) == 0);
  CHECK(even.next(0, 0) != 0);

  CHECK(from_regex("a", "ab").num_states() == 3);
  CHECK(from_regex("(a|b)*", "ab").num_states() == 1);
}

TEST_CASE("the third language from a regex matches the automaton from file") {
  Dfa from_text = from_regex("a((a|b)(a|b))*|b(a|b)*", "ab");
  Dfa file = sample_dfa("a3");
  CHECK(from_text.num_states() == 4);
  CHECK(same_language_up_to(from_text, file, 10));
  Dfa m = minimize(file);
  for (State q = 0; q < 4; ++q) {
    CHECK(m.is_accepting(q) == from_text.is_accepting(q));
    for (Letter a = 0; a < 2; ++a) CHECK(m.next(q, a) == from_text.next(q, a));
  }
}

TEST_CASE("states are numbered breadth first and named by index") {
  Dfa d = from_regex("a((a|b)(a|b))*|b(a|b)*", "ab");
  CHECK(d.initial() == 0);
  CHECK(d.next(0, 0) == 1);
  CHECK(d.next(0, 1) == 2);
  CHECK(d.state_names() == std::vector<std::string>{"0", "1", "2", "3"});
}

TEST_CASE("regex letters outside the alphabet") {
  CHECK_THROWS_AS(from_regex("ac", "ab"), Error);
  try {
    from_regex("ac", "ab");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlphabetMismatch);
  }
}

TEST_CASE("a declared but unused letter still gets transitions") {
  Dfa d = from_regex("a(a|b)*", "ab");
  CHECK(d.alphabet() == std::vector<std::string>{"a", "b"});
  CHECK(d.accepts("ab"));
  CHECK_FALSE(d.accepts("ba"));
  CHECK_FALSE(d.accepts(""));
}

TEST_CASE("minimize keeps minimal automata and merges equivalent states") {
  Dfa a1 = sample_dfa("a1");
  CHECK(minimize(a1).num_states() == 4);
  CHECK(minimize(sample_dfa("a3")).num_states() == 4);

  Dfa sigma_star({"a", "b"}, {"x", "y"}, 0, {true, true}, {1, 0, 0, 1});
  Dfa one = minimize(sigma_star);
  CHECK(one.num_states() == 1);
  CHECK(one.state_name(0) == "x");
}

TEST_CASE("minimize is idempotent") {
  for (const auto& lang : support::corpus()) {
    CAPTURE(lang.name);
    Dfa once = minimize(lang.dfa);
    Dfa twice = minimize(once);
    REQUIRE(once.num_states() == twice.num_states());
    CHECK(once.accepting() == twice.accepting());
    for (State q = 0; q < once.num_states(); ++q)
      for (Letter a = 0; a < once.alphabet_size(); ++a) CHECK(once.next(q, a) == twice.next(q, a));
  }
}

TEST_CASE("minimal automata have pairwise distinguishable states") {
  for (const auto& lang : support::corpus()) {
    CAPTURE(lang.name);
    Dfa d = minimize(lang.dfa);
    for (State p = 0; p < d.num_states(); ++p)
      for (State q = p + 1; q < d.num_states(); ++q) CHECK(distinguishable(d, p, q, d.num_states()));
  }
}

TEST_CASE("regex automata are complete") {
  for (const auto& lang : support::corpus()) {
    for (State q = 0; q < lang.dfa.num_states(); ++q)
      for (Letter a = 0; a < lang.dfa.alphabet_size(); ++a) CHECK(lang.dfa.next(q, a) < lang.dfa.num_states());
  }
}

TEST_CASE("load_dfa reads the documented format") {
  Dfa d = load_dfa(kA3Text);
  CHECK(d.num_states() == 4);
  CHECK(d.state_name(d.initial()) == "q1");
  CHECK(d.accepts("ba"));
  CHECK(d.accepts("bb"));
  CHECK_FALSE(d.accepts("aa"));
  CHECK(d.accepts("aab"));
}

TEST_CASE("load_dfa errors") {
  CHECK(load_error(edited(R"({"from": "q1", "on": "b", "to": "q4"},)", "")) ==
        ErrorKind::PartialTransitionFunction);
  CHECK(load_error(edited(R"("initial": "q1")", R"("initial": "q9")")) == ErrorKind::UnknownState);
  CHECK(load_error(edited(R"("to": "q4"})", R"("to": "zz"})")) == ErrorKind::UnknownState);
  CHECK(load_error(edited(R"("on": "b")", R"("on": "c")")) == ErrorKind::UnknownSymbol);
  CHECK(load_error(edited(R"("q4"}])", R"("q4"}, {"from": "q1", "on": "a", "to": "q4"}])")) == ErrorKind::FormatError);
  CHECK(load_error("{") == ErrorKind::FormatError);
  CHECK(load_error("[]") == ErrorKind::FormatError);
  CHECK(load_error(R"({"alphabet": ["a"], "states": ["p"], "initial": "p", "accepting": []})") ==
        ErrorKind::FormatError);
}

TEST_CASE("unreachable states are dropped with a warning") {
  const char* text = R"({"alphabet": ["a"], "states": ["p", "q"], "initial": "p", "accepting": ["p"],
    "transitions": [{"from": "p", "on": "a", "to": "p"}, {"from": "q", "on": "a", "to": "p"}]})";
  std::vector<std::string> warnings;
  Dfa d = load_dfa(text, &warnings);
  CHECK(d.num_states() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("q") != std::string::npos);
}

TEST_CASE("dump and load round trip") {
  Dfa a3 = sample_dfa("a3");
  Dfa again = load_dfa(dump_dfa(a3));
  CHECK(again.state_names() == a3.state_names());
  CHECK(again.accepting() == a3.accepting());
  CHECK(same_language_up_to(a3, again, 8));
}

TEST_CASE("all_words is lexicographic") {
  auto words = all_words(2, 2);
  REQUIRE(words.size() == 4);
  CHECK(words[0] == LetterWord{0, 0});
  CHECK(words[1] == LetterWord{0, 1});
  CHECK(words[3] == LetterWord{1, 1});
  CHECK(all_words(3, 0).size() == 1);
}

TEST_CASE("encode rejects unknown symbols") {
  Dfa a3 = sample_dfa("a3");
  CHECK(a3.encode("ab") == LetterWord{0, 1});
  CHECK(a3.decode(LetterWord{1, 0}) == "ba");
  CHECK_THROWS_AS(a3.encode("ac"), Error);
}
