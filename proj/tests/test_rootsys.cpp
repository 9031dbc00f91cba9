#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootsys.hpp"

using namespace affweyl;

TEST_CASE("root counts per type") {
  CHECK(RootSystem::build(Type::C, 2).num_positive() == 4);
  CHECK(RootSystem::build(Type::C, 3).num_positive() == 9);
  CHECK(RootSystem::build(Type::B, 3).num_positive() == 9);
  CHECK(RootSystem::build(Type::D, 4).num_positive() == 12);
  CHECK(RootSystem::build(Type::G2, 2).num_positive() == 6);
  CHECK(RootSystem::build(Type::F4, 4).num_positive() == 24);
  CHECK(RootSystem::build(Type::E6, 6).num_positive() == 36);
  CHECK(RootSystem::build(Type::E7, 7).num_positive() == 63);
  CHECK(RootSystem::build(Type::E8, 8).num_positive() == 120);
}

TEST_CASE("rank validation") {
  CHECK_THROWS(RootSystem::build(Type::C, 1));
  CHECK_THROWS(RootSystem::build(Type::B, 1));
  CHECK_THROWS(RootSystem::build(Type::D, 3));
  CHECK_THROWS(RootSystem::build(Type::E6, 7));
  CHECK_THROWS(RootSystem::build(Type::G2, 3));
}

TEST_CASE("highest roots") {
  CHECK(RootSystem::build(Type::G2, 2).highest_root() == IVec{3, 2});
  CHECK(RootSystem::build(Type::C, 2).highest_root() == IVec{2, 1});
  CHECK(RootSystem::build(Type::C, 3).highest_root() == IVec{2, 2, 1});
  CHECK(RootSystem::build(Type::B, 3).highest_root() == IVec{1, 2, 2});
  CHECK(RootSystem::build(Type::F4, 4).highest_root() == IVec{2, 3, 4, 2});
}

TEST_CASE("inner products and reflections") {
  RootSystem g2 = RootSystem::build(Type::G2, 2);
  CHECK(g2.inner(g2.simple_root(1), g2.simple_root(2)) == Rational(-3));
  CHECK(g2.inner(g2.simple_root(1), g2.simple_root(1)) == Rational(2));
  CHECK(g2.inner(g2.simple_root(2), g2.simple_root(2)) == Rational(6));

  RootSystem c2 = RootSystem::build(Type::C, 2);
  // s_{beta1}(beta2) = beta2 + 2 beta1 in type C2.
  CHECK(c2.reflect(c2.simple_root(1), c2.simple_root(2)) == IVec{2, 1});
  CHECK(c2.reflect(c2.simple_root(2), c2.simple_root(1)) == IVec{1, 1});
}

TEST_CASE("cartan integers") {
  RootSystem c3 = RootSystem::build(Type::C, 3);
  CHECK(c3.cartan(1, 2) == -1);
  CHECK(c3.cartan(2, 3) == -1);  // beta3 is the long root
  CHECK(c3.cartan(3, 2) == -2);
  CHECK(c3.cartan(1, 3) == 0);
}

TEST_CASE("coroots") {
  RootSystem c3 = RootSystem::build(Type::C, 3);
  // The highest root of C3 is long (norm 2), so it equals its own coroot.
  QVec cr = c3.coroot(c3.highest_root());
  CHECK(cr == QVec{Rational(2), Rational(2), Rational(1)});
  // Short simple roots have norm 1: coroot = 2 * root.
  CHECK(c3.simple_coroot(1) == QVec{Rational(2), Rational(0), Rational(0)});
}

TEST_CASE("group orders") {
  CHECK(RootSystem::build(Type::C, 2).group_order() == 8);
  CHECK(RootSystem::build(Type::C, 3).group_order() == 48);
  CHECK(RootSystem::build(Type::G2, 2).group_order() == 12);
  CHECK(RootSystem::build(Type::F4, 4).group_order() == 1152);
  CHECK(RootSystem::build(Type::D, 4).group_order() == 192);
  CHECK(RootSystem::build(Type::E6, 6).group_order() == 51840);
}

TEST_CASE("parabolic orders") {
  RootSystem c3 = RootSystem::build(Type::C, 3);
  CHECK(c3.parabolic_order({1, 2}) == 6);    // A2
  CHECK(c3.parabolic_order({2, 3}) == 8);    // C2
  CHECK(c3.parabolic_order({1, 3}) == 4);    // A1 x A1
  CHECK(c3.parabolic_order({}) == 1);
}

TEST_CASE("affine coxeter matrix") {
  RootSystem c2 = RootSystem::build(Type::C, 2);
  auto m = c2.affine_coxeter_matrix();
  CHECK(m[0][1] == 4);
  CHECK(m[1][2] == 4);
  CHECK(m[0][2] == 2);

  RootSystem b4 = RootSystem::build(Type::B, 4);
  auto mb = b4.affine_coxeter_matrix();
  CHECK(mb[0][2] == 3);  // affine node forks at node 2
  CHECK(mb[0][1] == 2);
  CHECK(mb[3][4] == 4);
}

TEST_CASE("graph classification") {
  RootSystem c2 = RootSystem::build(Type::C, 2);
  CoxeterGraph aff{c2.affine_coxeter_matrix()};
  CHECK(is_affine_diagram(aff));
  CHECK_FALSE(is_finite_diagram(aff));
  CoxeterGraph fin{c2.coxeter_matrix()};
  CHECK(is_finite_diagram(fin));
  CHECK(finite_group_order(fin) == 8);
  // Rank >= 3 affine diagrams are not word hyperbolic.
  CHECK_FALSE(is_word_hyperbolic(aff));
  CoxeterGraph a1aff;
  a1aff.m = {{1, -1}, {-1, 1}};  // infinite dihedral
  CHECK(is_word_hyperbolic(a1aff));
}

TEST_CASE("subsystem") {
  RootSystem c3 = RootSystem::build(Type::C, 3);
  auto sub = c3.subsystem({2, 3});
  CHECK(sub.size() == 8);  // C2 inside C3
}
