#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "monodec/decomposition.hpp"
#include "monodec/error.hpp"
#include "monodec/oracle.hpp"
#include "support.hpp"

using namespace monodec;

namespace {

SyntacticMonoid monoid_of(const Dfa& d) { return transition_monoid(minimize(d)); }

CanonicalDecomposition whole(const Dfa& d) {
  auto m = monoid_of(d);
  return canonical_decomposition(m, build_signature(m, {full_letter_set(m.symbols.size())}));
}

CanonicalDecomposition with_gammas(const Dfa& d, const std::vector<std::string>& gammas) {
  auto m = monoid_of(d);
  std::vector<LetterSet> sets;
  for (const auto& g : gammas) sets.push_back(parse_letter_set(g, m.symbols));
  return canonical_decomposition(m, build_signature(m, sets));
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

// Transition monoid of a block automaton, by closure over state maps.
std::size_t block_monoid_order(const Dfa& d, const std::string& w, std::size_t period) {
  State start = d.run(d.initial(), d.encode(w));
  std::vector<State> reach{start};
  std::vector<LetterWord> blocks = all_words(d.alphabet_size(), period);
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (const auto& b : blocks) {
      State q = d.run(reach[i], b);
      if (std::find(reach.begin(), reach.end(), q) == reach.end()) reach.push_back(q);
    }
  // merge states with the same future over up to 6 blocks
  auto future = [&](State q) {
    std::vector<bool> out;
    std::vector<State> frontier{q};
    for (int depth = 0; depth <= 6; ++depth) {
      std::vector<State> next;
      for (State p : frontier) {
        out.push_back(d.is_accepting(p));
        for (const auto& b : blocks) next.push_back(d.run(p, b));
      }
      frontier = std::move(next);
      if (frontier.size() > 5000) break;
    }
    return out;
  };
  std::vector<std::vector<bool>> classes;
  std::vector<std::size_t> cls(reach.size());
  for (std::size_t i = 0; i < reach.size(); ++i) {
    auto f = future(reach[i]);
    auto it = std::find(classes.begin(), classes.end(), f);
    cls[i] = static_cast<std::size_t>(it - classes.begin());
    if (it == classes.end()) classes.push_back(f);
  }
  auto class_of = [&](State q) {
    return cls[static_cast<std::size_t>(std::find(reach.begin(), reach.end(), q) - reach.begin())];
  };
  std::set<std::vector<std::size_t>> maps;
  std::vector<std::vector<State>> todo{reach};
  std::set<std::vector<State>> seen{reach};
  while (!todo.empty()) {
    auto image = todo.back();
    todo.pop_back();
    std::vector<std::size_t> key(classes.size());
    for (std::size_t i = 0; i < reach.size(); ++i) key[cls[i]] = class_of(image[i]);
    maps.insert(key);
    for (const auto& b : blocks) {
      std::vector<State> next;
      for (State q : image) next.push_back(d.run(q, b));
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return maps.size();
}

}  // namespace

TEST_CASE("K and the residual group") {
  auto d1 = with_gammas(support::sample_dfa("a1"), {"a", "b"});
  CHECK(d1.K == 1);
  CHECK(d1.group().size() == 4);
  // |T_1^G x| G| = 1 * 4 = |M| and Can is injective, hence bijective
  CHECK(d1.monoid.order() == d1.group().size());
  std::set<CanElement> images(d1.can.begin(), d1.can.end());
  CHECK(images.size() == 4);

  auto d2 = with_gammas(support::sample_dfa("a2"), {"a"});
  CHECK(d2.K == 3);
  CHECK(d2.group().periods() == std::vector<std::size_t>{2});

  auto d3 = whole(support::sample_dfa("a3"));
  CHECK(d3.K == 3);
  CHECK(d3.theta[0] == std::vector<Element>{0, 3, 4});
  CHECK(d3.theta[1] == std::vector<Element>{1, 2});
}

TEST_CASE("checks on the three languages") {
  for (auto dec : {with_gammas(support::sample_dfa("a1"), {"a", "b"}), with_gammas(support::sample_dfa("a2"), {"a"})}) {
    auto rep = verify_canonical(dec);
    CHECK(rep.homomorphism);
    CHECK(rep.homomorphism_on_classes);
    CHECK(rep.injective);
    CHECK(rep.residual_condition);
  }
  auto rep3 = verify_canonical(whole(support::sample_dfa("a3")));
  CHECK(rep3.homomorphism_on_classes);
  CHECK(rep3.injective);
  CHECK(rep3.residual_condition);
  CHECK(rep3.ok());
}

TEST_CASE("identity padding breaks the product on unequal classes") {
  // N_0 has three elements and N_1 two, so coordinate 2 at residue 1 is padding
  auto dec = whole(support::sample_dfa("a3"));
  CHECK_FALSE(verify_canonical(dec).homomorphism);
  const Element a = dec.monoid.eta[0];
  const Element aa = dec.monoid.monoid(a, a);
  CanElement product = can_multiply(dec.can[a], dec.can[a], dec.group(), dec.K);
  CHECK(product.residual == dec.can[aa].residual);
  CHECK(product.f[1 * dec.K + 2] != dec.can[aa].f[1 * dec.K + 2]);
  for (std::size_t k = 0; k < 2; ++k) CHECK(product.f[1 * dec.K + k] == dec.can[aa].f[1 * dec.K + k]);
}

TEST_CASE("a corrupted table fails the check") {
  auto dec = with_gammas(support::sample_dfa("a2"), {"a"});
  auto& f = dec.can[dec.monoid.eta[0]].f;
  std::swap(f[0], f[1]);
  auto rep = verify_canonical(dec);
  CHECK_FALSE(rep.homomorphism);
  CHECK_FALSE(rep.homomorphism_on_classes);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("f follows the defining formula") {
  auto dec = whole(support::sample_dfa("a3"));
  for (Element t = 0; t < dec.monoid.order(); ++t)
    for (std::size_t r = 0; r < 2; ++r) {
      auto f = dec.f(t, r);
      const std::size_t target = (r + dec.signature.rho_bar[t]) % 2;
      for (std::size_t k = 0; k < dec.K; ++k) {
        if (k < dec.theta[r].size()) {
          Element moved = dec.monoid.monoid(dec.theta[r][k], t);
          CHECK(dec.theta[target][f(k)] == moved);
        } else {
          CHECK(f(k) == k);
        }
      }
    }
}

TEST_CASE("fixed points force residual zero") {
  CHECK(fixed_points_have_zero_residual(whole(support::sample_dfa("a3"))));
  CHECK(fixed_points_have_zero_residual(with_gammas(support::sample_dfa("a1"), {"a", "b"})));
}

TEST_CASE("residual group cap") {
  CHECK(error_of([] { with_gammas(support::sample_dfa("a1"), {"a", "b", "a", "b", "a", "b", "a"}); }) ==
        ErrorKind::TooLarge);
  CHECK(with_gammas(support::sample_dfa("a1"), {"a", "b", "a", "b", "a", "b"}).group().size() == 64);
}

TEST_CASE("residual monoids of the third language") {
  auto dec = whole(support::sample_dfa("a3"));
  auto t1 = residual_monoid(dec, 1);
  CHECK(t1.monoid.order() == 1);
  CHECK(t1.elements[0].is_identity());
  auto t0 = residual_monoid(dec, 0);
  CHECK(t0.monoid.order() == 3);
  CHECK(t0.elements[0].is_identity());
  CHECK(oracle::brute_isomorphic(t0.monoid, make_named(NamedKind::LeftZero, 2)));

  auto even = whole(support::from_regex("((a|b)(a|b))*", "ab"));
  CHECK(residual_monoid(even, 0).monoid.order() == 1);
}

TEST_CASE("residual monoids need the whole alphabet") {
  auto dec = with_gammas(support::sample_dfa("a1"), {"a", "b"});
  CHECK(error_of([&] { residual_monoid(dec, 0); }) == ErrorKind::ScopeError);
  CHECK(error_of([&] { lw_recognizer(dec, std::string_view("")); }) == ErrorKind::ScopeError);
}

TEST_CASE("block languages of the third language") {
  auto dec = whole(support::sample_dfa("a3"));
  auto after_a = lw_recognizer(dec, std::string_view("a"));
  CHECK(after_a.r == 1);
  CHECK(after_a.blocks == std::vector<std::string>{"aa", "ab", "ba", "bb"});
  for (bool s : after_a.accepting) CHECK(s);
  std::vector<std::string> u{"ab", "ba"};
  CHECK(lw_member(after_a, u));

  auto empty = lw_recognizer(dec, std::string_view(""));
  CHECK(empty.r == 0);
  CHECK(lw_member(empty, std::vector<std::string>{"ba"}));
  CHECK(lw_member(empty, std::vector<std::string>{"bb", "aa"}));
  CHECK_FALSE(lw_member(empty, std::vector<std::string>{"aa"}));
  CHECK_FALSE(lw_member(empty, std::vector<std::string>{}));

  CHECK(error_of([&] { lw_member(empty, std::vector<std::string>{"aba"}); }) == ErrorKind::BlockLengthError);
  CHECK(error_of([&] { lw_recognizer(dec, std::string_view("ab")); }) == ErrorKind::ScopeError);
}

TEST_CASE("flat and block membership agree") {
  auto dec = whole(support::sample_dfa("a3"));
  auto rec = lw_recognizer(dec, std::string_view(""));
  Dfa a3 = support::sample_dfa("a3");
  for (std::size_t len = 0; len <= 8; len += 2)
    for (const auto& u : all_words(2, len)) {
      std::vector<std::string> blocks;
      for (std::size_t i = 0; i < len; i += 2) blocks.push_back(a3.decode(std::span(u).subspan(i, 2)));
      CHECK(lw_member(rec, u) == lw_member(rec, blocks));
      CHECK(lw_member(rec, u) == a3.accepts(u));
    }
}

TEST_CASE("period one recognizers read single letters") {
  Dfa d = support::from_regex("(a|b)*a(a|b)*", "ab");
  auto dec = whole(d);
  auto rec = lw_recognizer(dec, std::string_view(""));
  CHECK(rec.blocks == std::vector<std::string>{"a", "b"});
  for (std::size_t len = 0; len <= 6; ++len)
    for (const auto& u : all_words(2, len)) CHECK(lw_member(rec, u) == d.accepts(u));
}

TEST_CASE("syntactic monoids of block languages") {
  Dfa a3 = support::sample_dfa("a3");
  CHECK(syntactic_monoid_of_lw(a3, "a", 2).order() == 1);
  auto eps = syntactic_monoid_of_lw(a3, "", 2);
  CHECK(eps.order() <= 3);
  CHECK(eps.order() == block_monoid_order(a3, "", 2));

  Dfa a1 = support::sample_dfa("a1");
  auto m = syntactic_monoid_of_lw(a1, "", 2);
  CHECK(m.order() == 2);
  CHECK(m.order() == block_monoid_order(a1, "", 2));
  CHECK(error_of([&] { syntactic_monoid_of_lw(a3, "ab", 2); }) == ErrorKind::ScopeError);
}

TEST_CASE("block automaton reads blocks") {
  Dfa a3 = support::sample_dfa("a3");
  LetterWord b{1};
  Dfa blocks = block_dfa(a3, b, 2);
  CHECK(blocks.alphabet() == std::vector<std::string>{"aa", "ab", "ba", "bb"});
  CHECK(blocks.accepts(LetterWord{}));
  CHECK(blocks.accepts(LetterWord{0, 3}));
}

TEST_CASE("diagram to the block language monoid") {
  for (const char* name : {"a3"}) {
    Dfa d = support::sample_dfa(name);
    auto dec = whole(d);
    for (std::string w : {"", "a", "b"}) {
      auto rec = lw_recognizer(dec, std::string_view(w));
      auto rep = check_diagram(rec, syntactic_monoid_of_lw(d, w, 2));
      CHECK(rep.ok());
      CHECK(rep.psi.size() == rec.residual.monoid.order());
    }
  }
}

TEST_CASE("wreath divisor") {
  auto d3 = whole(support::sample_dfa("a3"));
  auto w3 = wreath_divisor(d3);
  CHECK(w3.equivariant);
  CHECK(w3.phi_bijective);
  CHECK(w3.g_divides);
  CHECK(w3.phi_domain.size() == 5);
  for (Element t = 0; t < 5; ++t) {
    CHECK(w3.phi[t] == t);
    CHECK(w3.psi[t] == t);
  }

  auto w1 = wreath_divisor(with_gammas(support::sample_dfa("a1"), {"a", "b"}));
  CHECK(w1.K == 1);
  CHECK(w1.phi_bijective);
  std::set<Element> hit(w1.phi.begin(), w1.phi.end());
  CHECK(hit.size() == 4);

  auto w2 = wreath_divisor(with_gammas(support::sample_dfa("a2"), {"a"}));
  CHECK(w2.equivariant);
  CHECK(w2.phi_domain.size() == 6);
}

TEST_CASE("wreath action and phi by hand") {
  auto dec = whole(support::sample_dfa("a3"));
  for (Element x = 0; x < 5; ++x)
    for (Element m = 0; m < 5; ++m) {
      WreathPoint p{dec.f(x, 0), dec.signature.rho_bar[x]};
      auto moved = wreath_act(p, dec.can[m], dec.group(), dec.K);
      CHECK(wreath_phi(dec, moved) == dec.monoid.monoid(x, m));
    }
}

TEST_CASE("semidirect multiplication is associative on the image") {
  auto dec = with_gammas(support::sample_dfa("a2"), {"a"});
  for (const auto& x : dec.can)
    for (const auto& y : dec.can)
      for (const auto& z : dec.can) {
        auto left = can_multiply(can_multiply(x, y, dec.group(), dec.K), z, dec.group(), dec.K);
        auto right = can_multiply(x, can_multiply(y, z, dec.group(), dec.K), dec.group(), dec.K);
        CHECK(left == right);
      }
}

TEST_CASE("decomposition json keys") {
  auto dec = whole(support::sample_dfa("a3"));
  auto j = decomposition_to_json(dec, true);
  for (const char* key : {"\"K\":3", "\"G\":[2]", "\"theta\"", "\"can\"", "\"verified\":true"})
    CHECK(j.find(key) != std::string::npos);
}
