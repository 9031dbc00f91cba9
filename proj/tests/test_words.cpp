#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "words.hpp"

using namespace affweyl;

TEST_CASE("parse and print") {
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word("1,2,0", 2) == Word{1, 2, 0});
  CHECK(word_str({}) == "e");
  CHECK(word_str({1, 0, 2}) == "1,0,2");
  CHECK_THROWS(parse_word("3", 2));
  CHECK_THROWS(parse_word("-1", 2));
  CHECK_THROWS(parse_word("x", 2));
}

TEST_CASE("evaluate and reducedness") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  CHECK(evaluate(rs, {}).is_identity());
  CHECK(evaluate(rs, {1, 1}).is_identity());
  CHECK(is_reduced(rs, {1, 2, 1, 2}));
  CHECK_FALSE(is_reduced(rs, {1, 2, 1, 2, 1}));  // exceeds ell(w0) = 4
  CHECK_FALSE(is_reduced(rs, {2, 2}));
  CHECK(first_non_reduced_prefix(rs, {2, 2}) == 1);
  CHECK(first_non_reduced_prefix(rs, {1, 2, 1, 2}) == -1);
  // The 0-1 bond has order 4: alternating words cap at length 4.
  CHECK(is_reduced(rs, {0, 1, 0, 1}));
  CHECK_FALSE(is_reduced(rs, {0, 1, 0, 1, 0}));
}

TEST_CASE("length equals reduced word length") {
  RootSystem rs = RootSystem::build(Type::G2, 2);
  Word w{1, 2, 0, 1, 2, 0};
  REQUIRE(is_reduced(rs, w));
  CHECK(evaluate(rs, w).length(rs) == 6);
}

TEST_CASE("canonical words") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  AffineElement w = evaluate(rs, {2, 1, 2, 1});
  Word c = canonical_word(rs, w);
  CHECK(is_reduced(rs, c));
  CHECK(evaluate(rs, c) == w);
  CHECK(c.size() == 4);
  CHECK(canonical_word(rs, AffineElement::identity(rs)).empty());
  // Affine elements get canonical words too.
  AffineElement g = evaluate(rs, {0, 1, 2});
  CHECK(evaluate(rs, canonical_word(rs, g)) == g);
}

TEST_CASE("longest elements") {
  RootSystem rs = RootSystem::build(Type::C, 3);
  CHECK(longest_element(rs, {1, 2, 3}).length(rs) == 9);
  CHECK(longest_element(rs, {1, 2}).length(rs) == 3);
  CHECK(longest_element(rs, {}).is_identity());
}

TEST_CASE("quotient words") {
  RootSystem rs = RootSystem::build(Type::C, 3);
  // ell(w0) - ell(w0 of the parabolic missing beta_i).
  CHECK(quotient_word(rs, 1).size() == 9 - 4);  // C2 parabolic
  CHECK(quotient_word(rs, 3).size() == 9 - 3);  // A2 parabolic
  for (int i = 1; i <= 3; ++i) CHECK(is_reduced(rs, quotient_word(rs, i)));
}

TEST_CASE("coset representatives") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  AffineElement w0 = longest_element(rs, {1, 2});
  AffineElement rep = coset_min_rep(rs, w0, {1, 2});
  CHECK(rep.is_identity());
  AffineElement r2 = coset_min_rep(rs, w0, {1});
  CHECK(r2.length(rs) <= w0.length(rs));
}

TEST_CASE("splits") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  auto one = enumerate_splits(rs, {1});
  REQUIRE(one.size() == 2);
  CHECK(one[0] == std::pair<Word, Word>{{}, {1}});
  CHECK(one[1] == std::pair<Word, Word>{{1}, {}});

  Word q = quotient_word(rs, 2);
  auto splits = enumerate_splits(rs, q);
  for (const auto& [u, v] : splits) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(is_reduced(rs, uv));
    CHECK(evaluate(rs, uv) == evaluate(rs, q));
  }
  // Length-additive factorizations of the quotient element number 2^n = 4.
  CHECK(splits.size() == 4);
}

TEST_CASE("full commutativity") {
  RootSystem rs = RootSystem::build(Type::G2, 2);
  CHECK(is_fully_commutative(rs, {1, 2, 0}));
  CHECK_FALSE(is_fully_commutative(rs, {1, 2, 0, 1, 2, 0}));
  RootSystem c3 = RootSystem::build(Type::C, 3);
  CHECK(is_fully_commutative(c3, {1, 3}));
  CHECK_FALSE(is_fully_commutative(c3, {1, 2, 1}));
  CHECK_FALSE(is_fully_commutative(c3, {3, 1, 2, 1}));  // needs one commutation first
}
