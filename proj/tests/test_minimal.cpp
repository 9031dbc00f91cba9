#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minimal.hpp"

using namespace affweyl;

TEST_CASE("distinguished coroots, small classical cases") {
  RootSystem c3 = RootSystem::build(Type::C, 3);
  CHECK(distinguished_coroot(c3, 1) == QVec{Rational(2), Rational(2), Rational(1)});
  CHECK(distinguished_coroot(c3, 3) == QVec{Rational(2), Rational(4), Rational(3)});

  RootSystem g2 = RootSystem::build(Type::G2, 2);
  CHECK(distinguished_coroot(g2, 1) == QVec{Rational(2), Rational(1)});
  CHECK(distinguished_coroot(g2, 2) == QVec{Rational(1), Rational(2, 3)});
}

TEST_CASE("translation identity lengths in type C") {
  // ell(t_lambda_i) = -i^2 + i + 2ni in type C_n.
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs = RootSystem::build(Type::C, n);
    for (int i = 1; i <= n; ++i) {
      long long expect = -static_cast<long long>(i) * i + i + 2LL * n * i;
      Word w = distinguished_word(rs, i);
      CHECK(static_cast<long long>(w.size()) == expect);
      AffineElement t = AffineElement::translation(rs, distinguished_coroot(rs, i));
      CHECK(t.length(rs) == expect);
    }
  }
}

TEST_CASE("translation identities verify in small ranks") {
  for (auto [t, n] : {std::pair{Type::C, 2}, {Type::C, 3}, {Type::B, 3},
                      {Type::D, 4}, {Type::G2, 2}}) {
    RootSystem rs = RootSystem::build(t, n);
    for (int i = 1; i <= n; ++i) {
      Report rep = verify_translation_identity(rs, i, 4);
      INFO(type_name(t), n, " i=", i, "\n", rep.text());
      CHECK(rep.all_pass());
    }
  }
}

TEST_CASE("minimal instance, trivial split") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  for (int i = 1; i <= 2; ++i) {
    Report rep = verify_minimal_instance(rs, i, {}, quotient_word(rs, i), 4);
    INFO(rep.text());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("minimal instance, all splits of C2") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  for (int i = 1; i <= 2; ++i) {
    for (const auto& [u, v] : enumerate_splits(rs, quotient_word(rs, i))) {
      Report rep = verify_minimal_instance(rs, i, u, v, 4);
      INFO("i=", i, " u=", word_str(u), "\n", rep.text());
      CHECK(rep.all_pass());
    }
  }
}

TEST_CASE("counts: formula values") {
  CHECK(count_minimal_formula(RootSystem::build(Type::C, 2)) == 8);
  CHECK(count_minimal_formula(RootSystem::build(Type::B, 3)) == 26);
  CHECK(count_minimal_formula(RootSystem::build(Type::G2, 2)) == 12);
}

TEST_CASE("counts: formula matches enumeration") {
  for (auto [t, n] : {std::pair{Type::C, 2}, {Type::C, 3}, {Type::B, 3}, {Type::G2, 2}}) {
    RootSystem rs = RootSystem::build(t, n);
    CHECK(count_minimal_formula(rs) == count_minimal_bruteforce(rs));
  }
}

TEST_CASE("weyl group enumeration") {
  CHECK(enumerate_weyl_group(RootSystem::build(Type::C, 2)).size() == 8);
  CHECK(enumerate_weyl_group(RootSystem::build(Type::G2, 2)).size() == 12);
  CHECK(enumerate_weyl_group(RootSystem::build(Type::B, 3)).size() == 48);
}
