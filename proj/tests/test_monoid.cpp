#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "monodec/error.hpp"
#include "monodec/monoid.hpp"
#include "monodec/oracle.hpp"
#include "support.hpp"

using namespace monodec;

namespace {

SyntacticMonoid monoid_of(const Dfa& d) { return transition_monoid(minimize(d)); }

FiniteMonoid cyclic(std::size_t k) { return make_named(NamedKind::Cyclic, k); }

// n * x = -x in C_k when n is odd
std::vector<std::uint32_t> inversion(std::size_t k) {
  std::vector<std::uint32_t> act(2 * k);
  for (std::uint32_t x = 0; x < k; ++x) {
    act[x] = x;
    act[k + x] = static_cast<std::uint32_t>((k - x) % k);
  }
  return act;
}

std::vector<std::uint32_t> trivial_action(std::size_t m, std::size_t n) {
  std::vector<std::uint32_t> act(m * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t x = 0; x < m; ++x) act[i * m + x] = x;
  return act;
}

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

bool associative_with_identity(const FiniteMonoid& m) {
  for (Element x = 0; x < m.order(); ++x) {
    if (m(0, x) != x || m(x, 0) != x) return false;
    for (Element y = 0; y < m.order(); ++y)
      for (Element z = 0; z < m.order(); ++z)
        if (m(m(x, y), z) != m(x, m(y, z))) return false;
  }
  return true;
}

// h(x, n) = (y -> y * x, n) from M x| N into M^N x| N
std::vector<Element> shift_embedding(const FiniteMonoid& m, const FiniteMonoid& n,
                                     const std::vector<std::uint32_t>& act, const FiniteMonoid& power) {
  std::vector<Element> map(m.order() * n.order());
  for (Element g = 0; g < n.order(); ++g)
    for (Element x = 0; x < m.order(); ++x) {
      Element code = 0, scale = 1;
      for (Element y = 0; y < n.order(); ++y) {
        code += act[y * m.order() + x] * scale;
        scale *= m.order();
      }
      map[pair_index(m, x, g)] = pair_index(power, code, g);
    }
  return map;
}

}  // namespace

TEST_CASE("transition monoids of the three automata") {
  auto m1 = monoid_of(support::sample_dfa("a1"));
  CHECK(m1.order() == 4);
  CHECK(m1.monoid.is_commutative());
  for (Element x = 0; x < 4; ++x) CHECK(m1.monoid(x, x) == 0);

  auto m2 = monoid_of(support::sample_dfa("a2"));
  CHECK(m2.order() == 6);
  CHECK_FALSE(m2.monoid.is_commutative());

  auto m3 = monoid_of(support::sample_dfa("a3"));
  CHECK(m3.order() == 5);
}

TEST_CASE("elements are numbered breadth first with the identity at zero") {
  auto m3 = monoid_of(support::sample_dfa("a3"));
  CHECK(m3.transformations[0].is_identity());
  CHECK(m3.eta == std::vector<Element>{1, 2});
  CHECK(m3.representatives[0].empty());
  CHECK(m3.representatives[3] == LetterWord{0, 0});
  CHECK(m3.representatives[4] == LetterWord{1, 0});
  CHECK(m3.accepting_image == std::vector<bool>{false, true, true, false, true});
}

TEST_CASE("syntactic morphism agrees with the automaton") {
  for (const auto& lang : support::corpus()) {
    auto m = monoid_of(lang.dfa);
    for (std::size_t len = 0; len <= 7; ++len)
      for (const auto& w : all_words(lang.dfa.alphabet_size(), len)) CHECK(m.accepts(w) == lang.dfa.accepts(w));
  }
}

TEST_CASE("cayley graph edge counts") {
  auto g1 = cayley_graph(monoid_of(support::sample_dfa("a1")));
  CHECK(g1.vertices == 4);
  CHECK(g1.edges.size() == 8);
  auto g2 = cayley_graph(monoid_of(support::sample_dfa("a2")));
  CHECK(g2.vertices == 6);
  CHECK(g2.edges.size() == 12);

  auto trivial = cayley_graph(monoid_of(support::from_regex("a*", "a")));
  CHECK(trivial.vertices == 1);
  REQUIRE(trivial.edges.size() == 1);
  CHECK(trivial.edges[0].from == 0);
  CHECK(trivial.edges[0].to == 0);
}

TEST_CASE("dot export lists one labelled edge per letter") {
  auto m = monoid_of(support::sample_dfa("a3"));
  std::string dot = to_dot(cayley_graph(m));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 10);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
}

TEST_CASE("zero elements") {
  auto u1 = make_named(NamedKind::RightZero, 1);
  CHECK(find_zero(u1) == std::optional<Element>(1));
  CHECK_FALSE(find_zero(make_named(NamedKind::LeftZero, 2)).has_value());
  CHECK_FALSE(find_zero(cyclic(3)).has_value());

  auto m = monoid_of(support::from_regex("(a|b)*a(a|b)*", "ab"));
  auto zero = find_zero(m.monoid);
  REQUIRE(zero.has_value());
  CHECK(*zero == m.eta[0]);
  CHECK(m.accepting_image[*zero]);
}

TEST_CASE("principal ideals") {
  CHECK(principal_ideal(cyclic(3), 1) == std::vector<Element>{0, 1, 2});
  CHECK(principal_ideal(make_named(NamedKind::LeftZero, 2), 1) == std::vector<Element>{1, 2});
  auto u1 = make_named(NamedKind::RightZero, 1);
  CHECK(principal_ideal(u1, 1) == std::vector<Element>{1});
  CHECK(principal_ideal(u1, 0) == std::vector<Element>{0, 1});
}

TEST_CASE("ideal membership") {
  std::vector<Element> iota{1};
  CHECK(is_ideal(make_named(NamedKind::RightZero, 1), iota));
  std::vector<Element> e{0};
  CHECK_FALSE(is_ideal(cyclic(2), e));
  std::vector<Element> pair{1, 2};
  CHECK(is_ideal(make_named(NamedKind::LeftZero, 2), pair));
  std::vector<Element> none;
  CHECK_FALSE(is_ideal(cyclic(2), none));
}

TEST_CASE("rees factors") {
  auto u2 = make_named(NamedKind::LeftZero, 2);
  std::vector<Element> pair{1, 2};
  auto f = rees_factor(u2, pair);
  CHECK(f.order() == 2);
  CHECK(find_zero(f) == std::optional<Element>(1));

  std::vector<Element> all{0, 1, 2};
  CHECK(rees_factor(u2, all).order() == 1);

  std::vector<Element> e{0};
  CHECK(error_of([&] { rees_factor(cyclic(2), e); }) == ErrorKind::NotAnIdeal);
}

TEST_CASE("rees factors by principal ideals have a zero") {
  for (const auto& lang : support::corpus()) {
    auto m = monoid_of(lang.dfa);
    for (Element x = 0; x < m.order(); ++x) {
      auto ideal = principal_ideal(m.monoid, x);
      CHECK(is_ideal(m.monoid, ideal));
      CHECK(find_zero(rees_factor(m.monoid, ideal)).has_value());
    }
  }
}

TEST_CASE("semidirect product of C3 by C2 under inversion") {
  auto c3 = cyclic(3), c2 = cyclic(2);
  auto act = inversion(3);
  auto s = semidirect_product(c3, c2, act);
  CHECK(s.order() == 6);
  CHECK_FALSE(s.is_commutative());
  CHECK(oracle::brute_isomorphic(s, make_named(NamedKind::Symmetric, 3)));
  // (x1, n1)(x2, n2) = (x1 + n1 * x2, n1 + n2)
  CHECK(s(pair_index(c3, 1, 1), pair_index(c3, 1, 0)) == pair_index(c3, 0, 1));
}

TEST_CASE("trivial action gives the direct product") {
  auto c2 = cyclic(2), c3 = cyclic(3);
  auto act = trivial_action(2, 3);
  auto s = semidirect_product(c2, c3, act);
  auto d = direct_product(c2, c3);
  CHECK(s.table() == d.table());
  CHECK(s.is_commutative());
}

TEST_CASE("bad actions are rejected") {
  auto c3 = cyclic(3), c2 = cyclic(2);
  // 1 * x = x + 1: applying it twice is not the identity
  std::vector<std::uint32_t> shift{0, 1, 2, 1, 2, 0};
  CHECK(error_of([&] { semidirect_product(c3, c2, shift); }) == ErrorKind::NotAnAction);

  std::vector<std::uint32_t> collapse{0, 1, 2, 0, 0, 0};
  CHECK(error_of([&] { semidirect_product(c3, c2, collapse); }) == ErrorKind::NotAnAction);

  // iota * x = 1 is an action of U1 but 1 + 1 != 1
  auto u1 = make_named(NamedKind::RightZero, 1);
  std::vector<std::uint32_t> to_one{0, 1, 2, 1, 1, 1};
  CHECK(error_of([&] { semidirect_product(c3, u1, to_one); }) == ErrorKind::NotDistributive);
}

TEST_CASE("named monoids") {
  auto c2 = cyclic(2);
  CHECK(c2.table() == std::vector<std::uint32_t>{0, 1, 1, 0});

  auto u2 = make_named(NamedKind::LeftZero, 2);
  CHECK(u2.order() == 3);
  for (Element i = 1; i < 3; ++i)
    for (Element s = 0; s < 3; ++s) CHECK(u2(i, s) == i);

  auto r2 = make_named(NamedKind::RightZero, 2);
  for (Element i = 1; i < 3; ++i)
    for (Element s = 1; s < 3; ++s) CHECK(r2(i, s) == s);

  CHECK(make_named(NamedKind::FullTransformation, 3).order() == 27);
  CHECK(make_named(NamedKind::Symmetric, 3).order() == 6);
  CHECK(make_named(NamedKind::Symmetric, 4).order() == 24);
  CHECK(error_of([] { make_named(NamedKind::FullTransformation, 6); }) == ErrorKind::TooLarge);
  CHECK(error_of([] { make_named(NamedKind::Symmetric, 7); }) == ErrorKind::TooLarge);
}

TEST_CASE("named and product monoids satisfy the monoid laws") {
  CHECK(associative_with_identity(cyclic(5)));
  CHECK(associative_with_identity(make_named(NamedKind::LeftZero, 3)));
  CHECK(associative_with_identity(make_named(NamedKind::RightZero, 3)));
  CHECK(associative_with_identity(make_named(NamedKind::Symmetric, 3)));
  CHECK(associative_with_identity(make_named(NamedKind::FullTransformation, 3)));
  CHECK(associative_with_identity(direct_product(cyclic(2), make_named(NamedKind::LeftZero, 2))));
}

TEST_CASE("non-associative tables are rejected") {
  // identity 0, and 1*1 = 2, 1*2 = 0, 2*1 = 1, 2*2 = 2
  std::vector<std::uint32_t> bad{0, 1, 2, 1, 2, 0, 2, 1, 2};
  CHECK_THROWS_AS(FiniteMonoid(3, bad), Error);
}

TEST_CASE("homomorphism check") {
  auto c2 = cyclic(2);
  std::vector<Element> id{0, 1}, swap{1, 0};
  CHECK(hom_image_check(c2, c2, id));
  CHECK_FALSE(hom_image_check(c2, c2, swap));
  std::vector<Element> mod2{0, 1, 0, 1};
  CHECK(hom_image_check(cyclic(4), c2, mod2));
  std::vector<Element> bad{0, 1, 1, 0};
  CHECK_FALSE(hom_image_check(cyclic(4), c2, bad));
}

TEST_CASE("semidirect products embed into the shift product") {
  struct Case {
    FiniteMonoid m, n;
    std::vector<std::uint32_t> act;
  };
  std::vector<Case> cases;
  cases.push_back({cyclic(3), cyclic(2), inversion(3)});
  cases.push_back({cyclic(4), cyclic(2), inversion(4)});
  cases.push_back({cyclic(2), cyclic(2), trivial_action(2, 2)});
  cases.push_back({cyclic(2), cyclic(3), trivial_action(2, 3)});
  cases.push_back({make_named(NamedKind::LeftZero, 2), cyclic(2), {0, 1, 2, 0, 2, 1}});
  cases.push_back({make_named(NamedKind::RightZero, 1), cyclic(4), trivial_action(2, 4)});
  for (const auto& c : cases) {
    auto product = semidirect_product(c.m, c.n, c.act);
    auto power = power_monoid(c.m, c.n);
    auto target = semidirect_product(power, c.n, shift_action(c.m, c.n));
    auto map = shift_embedding(c.m, c.n, c.act, power);
    CHECK(hom_image_check(product, target, map));
    std::vector<Element> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("power monoid size cap") {
  CHECK(power_monoid(cyclic(3), cyclic(2)).order() == 9);
  CHECK(error_of([] { power_monoid(cyclic(10), cyclic(10)); }) == ErrorKind::TooLarge);
}

TEST_CASE("closure stops at the cap") {
  CHECK(error_of([] { transition_monoid(minimize(support::sample_dfa("a2")), 5); }) == ErrorKind::MonoidTooLarge);
}

TEST_CASE("order does not depend on the presentation") {
  // A1 with every state duplicated
  Dfa doubled({"a", "b"}, {"s0", "s1", "s2", "s3", "t0", "t1", "t2", "t3"}, 0,
              {true, false, false, false, true, false, false, false},
              {5, 6, 4, 7, 7, 4, 6, 5, 1, 2, 0, 3, 3, 0, 2, 1});
  CHECK(monoid_of(doubled).order() == monoid_of(support::sample_dfa("a1")).order());
  CHECK(monoid_of(support::from_regex("a((a|b)(a|b))*|b(a|b)*", "ab")).order() ==
        monoid_of(support::sample_dfa("a3")).order());
}

TEST_CASE("json export keys") {
  auto j = monoid_to_json(monoid_of(support::sample_dfa("a3")));
  for (const char* key : {"\"order\":5", "\"identity\":0", "\"table\"", "\"generators\"", "\"accepting_image\""})
    CHECK(j.find(key) != std::string::npos);
}
