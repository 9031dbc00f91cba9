#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affine.hpp"

using namespace affweyl;

namespace {

AffineElement gen(const RootSystem& rs, int i) {
  return AffineElement::simple_reflection(rs, i);
}

}  // namespace

TEST_CASE("generators are involutions") {
  for (auto [t, n] : {std::pair{Type::C, 2}, {Type::B, 3}, {Type::G2, 2}, {Type::F4, 4}}) {
    RootSystem rs = RootSystem::build(t, n);
    for (int i = 0; i <= rs.rank(); ++i) {
      AffineElement s = gen(rs, i);
      CHECK(s.multiply(rs, s).is_identity());
      CHECK(s.inverse(rs) == s);
    }
  }
}

TEST_CASE("s0 action on simple roots in C2") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  AffineElement s0 = gen(rs, 0);
  // s0(beta1) = -beta1 - beta2 + delta (reflection in the highest root
  // shifted by one delta level).
  AffineRoot r = s0.act(rs, {rs.simple_root(1), 0});
  CHECK(r == AffineRoot{IVec{-1, -1}, 1});
  // beta2 is orthogonal to the highest root, so s0 fixes it.
  AffineRoot r2 = s0.act(rs, {rs.simple_root(2), 0});
  CHECK(r2 == AffineRoot{rs.simple_root(2), 0});
}

TEST_CASE("normal form composition") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  AffineElement s0 = gen(rs, 0), s1 = gen(rs, 1), s2 = gen(rs, 2);
  AffineElement g = s0.multiply(rs, s1).multiply(rs, s2);
  AffineElement h = s2.multiply(rs, s0);
  // Associativity and inverse laws.
  CHECK(g.multiply(rs, h).multiply(rs, h.inverse(rs)) == g);
  CHECK(g.inverse(rs).multiply(rs, g).is_identity());
  CHECK(g.multiply(rs, h).inverse(rs) == h.inverse(rs).multiply(rs, g.inverse(rs)));
}

TEST_CASE("action is a group action") {
  RootSystem rs = RootSystem::build(Type::B, 3);
  AffineElement g = gen(rs, 0).multiply(rs, gen(rs, 2)).multiply(rs, gen(rs, 3));
  AffineElement h = gen(rs, 1).multiply(rs, gen(rs, 0));
  AffineElement gh = g.multiply(rs, h);
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    for (int m : {-1, 0, 2}) {
      AffineRoot r{rs.root(idx), m};
      CHECK(g.act(rs, h.act(rs, r)) == gh.act(rs, r));
    }
  }
}

TEST_CASE("translations") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  QVec lam = rs.coroot(rs.highest_root());
  AffineElement t = AffineElement::translation(rs, lam);
  CHECK(t.is_finite() == false);
  CHECK(t.multiply(rs, t) == AffineElement::translation(rs, {lam[0] * 2, lam[1] * 2}));
  CHECK(t.inverse(rs) == AffineElement::translation(rs, {-lam[0], -lam[1]}));
  // t_lambda(alpha + m delta) = alpha + (m + (alpha, lambda)) delta.
  AffineRoot r = t.act(rs, {rs.highest_root(), 0});
  CHECK(r.alpha == rs.highest_root());
  CHECK(r.level == 2);
  // Non-integral pairing is rejected.
  CHECK_THROWS(AffineElement::translation(rs, {Rational(1, 2), Rational(0)}));
}

TEST_CASE("lengths") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  CHECK(AffineElement::identity(rs).length(rs) == 0);
  CHECK(gen(rs, 0).length(rs) == 1);
  CHECK(gen(rs, 1).length(rs) == 1);
  AffineElement w0 = gen(rs, 1)
                         .multiply(rs, gen(rs, 2))
                         .multiply(rs, gen(rs, 1))
                         .multiply(rs, gen(rs, 2));
  CHECK(w0.length(rs) == 4);  // longest element of W(C2)
  // ell(t_lambda) = sum over positive roots of |(alpha, lambda)|.
  AffineElement t = AffineElement::translation(rs, rs.coroot(rs.highest_root()));
  CHECK(t.length(rs) == 4);
}

TEST_CASE("inversion sets") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  AffineElement s1 = gen(rs, 1);
  auto inv = s1.inversion_set(rs);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == AffineRoot{rs.simple_root(1), 0});

  AffineElement s0 = gen(rs, 0);
  auto inv0 = s0.inversion_set(rs);
  REQUIRE(inv0.size() == 1);
  IVec neg_rho{-2, -1};
  CHECK(inv0[0] == AffineRoot{neg_rho, 1});  // delta - rho

  AffineElement g = s0.multiply(rs, s1);
  CHECK(g.inversion_set(rs).size() == g.length(rs));
}

TEST_CASE("straightness") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  AffineElement t = AffineElement::translation(rs, rs.coroot(rs.highest_root()));
  CHECK(t.is_straight_up_to(rs, 6));
  CHECK_FALSE(gen(rs, 1).is_straight_up_to(rs, 2));  // involution, ell(s^2)=0
}
