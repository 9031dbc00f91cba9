#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biclosed.hpp"
#include "minimal.hpp"
#include "words.hpp"

using namespace affweyl;

TEST_CASE("closed and biclosed subsets of C2") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  ClosureTable ct(rs);

  RootSet pos = ct.positive();
  CHECK(ct.is_closed(pos));
  CHECK(ct.is_biclosed(pos, ct.full()));

  // {beta1} is closed; {beta1 + beta2} is not biclosed in the positives
  // because its complement contains beta1 and beta2 but not their sum.
  RootSet s1(rs.num_roots());
  s1.set(rs.root_index(rs.simple_root(1)));
  CHECK(ct.is_closed(s1));
  CHECK(ct.is_biclosed(s1, pos));

  RootSet mid(rs.num_roots());
  mid.set(rs.root_index(IVec{1, 1}));
  CHECK(ct.is_closed(mid));
  CHECK_FALSE(ct.is_biclosed(mid, pos));
}

TEST_CASE("inversion sets of finite elements are biclosed") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  ClosureTable ct(rs);
  for (const AffineElement& w : enumerate_weyl_group(rs)) {
    RootSet s(rs.num_roots());
    for (const AffineRoot& r : w.inversion_set(rs)) {
      REQUIRE(r.level == 0);
      s.set(rs.root_index(r.alpha));
    }
    CHECK(ct.is_biclosed(s, ct.positive()));
  }
}

TEST_CASE("standard biclosed sets") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  AffineElement id = AffineElement::identity(rs);
  // w = e, M1 = {1}: positives outside the beta1 line.
  RootSet s = standard_biclosed(rs, id, {1}, {});
  CHECK(s.count() == 3);
  CHECK_FALSE(s.test(rs.root_index(rs.simple_root(1))));
  // Orthogonality across M1, M2 is enforced.
  CHECK_THROWS(standard_biclosed(rs, id, {1}, {2}));
  CHECK_THROWS(standard_biclosed(rs, id, {1}, {1}));
}

TEST_CASE("atoms by brute force match targets") {
  for (auto [t, n] : {std::pair{Type::C, 2}, {Type::G2, 2}}) {
    RootSystem rs = RootSystem::build(t, n);
    ClosureTable ct(rs);
    auto atoms = ct.atoms_bruteforce();
    std::set<RootSet> atom_set(atoms.begin(), atoms.end());
    std::set<RootSet> targets;
    for (const auto& mt : enumerate_minimal_targets(rs)) targets.insert(mt.set);
    CHECK(atom_set == targets);
  }
}

TEST_CASE("hat lift membership") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  RootSet fin(rs.num_roots());
  fin.set(rs.root_index(rs.simple_root(1)));
  int neg = rs.negate(rs.root_index(rs.simple_root(1)));
  fin.set(neg);
  CHECK(hat_contains(rs, fin, {rs.simple_root(1), 0}));
  CHECK(hat_contains(rs, fin, {rs.simple_root(1), 3}));
  CHECK(hat_contains(rs, fin, {rs.root(neg), 1}));
  CHECK_FALSE(hat_contains(rs, fin, {rs.root(neg), 0}));
  CHECK_FALSE(hat_contains(rs, fin, {rs.simple_root(2), 0}));
}

TEST_CASE("dot action composes with inversion sets") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  // u . N(v) = N(uv) over all pairs of short elements.
  std::vector<Word> words{{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {2, 0},
                          {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 1, 2, 1}};
  for (const Word& a : words) {
    for (const Word& b : words) {
      AffineElement u = evaluate(rs, a), v = evaluate(rs, b);
      auto nv = v.inversion_set(rs);
      std::set<AffineRoot> B(nv.begin(), nv.end());
      auto lhs = dot_action(rs, u, B);
      auto nuv = u.multiply(rs, v).inversion_set(rs);
      std::set<AffineRoot> rhs(nuv.begin(), nuv.end());
      CHECK(lhs == rhs);
    }
  }
}
