#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "affweyl.h"

namespace {

struct Out {
  char* s = nullptr;
  ~Out() { aw_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("create and destroy") {
  aw_rootsys* rs = nullptr;
  CHECK(aw_rootsys_create("C", 2, &rs) == AW_OK);
  REQUIRE(rs != nullptr);
  aw_rootsys_destroy(rs);

  CHECK(aw_rootsys_create("C", 1, &rs) == AW_ERROR);
  CHECK(std::string(aw_last_error()) != "");
  CHECK(aw_rootsys_create("Z", 2, &rs) == AW_ERROR);
  CHECK(aw_rootsys_create(nullptr, 2, &rs) == AW_ERROR);
}

TEST_CASE("describe") {
  aw_rootsys* rs = nullptr;
  REQUIRE(aw_rootsys_create("G2", 2, &rs) == AW_OK);
  Out o;
  CHECK(aw_rootsys_describe(rs, 0, &o.s) == AW_OK);
  CHECK(o.str().find("3,2") != std::string::npos);  // highest root
  Out j;
  CHECK(aw_rootsys_describe(rs, 1, &j.s) == AW_OK);
  CHECK(j.str().find("\"command\"") != std::string::npos);
  aw_rootsys_destroy(rs);
}

TEST_CASE("word operations") {
  aw_rootsys* rs = nullptr;
  REQUIRE(aw_rootsys_create("G2", 2, &rs) == AW_OK);
  Out e;
  CHECK(aw_word_eval(rs, "", 0, &e.s) == AW_OK);
  Out r;
  CHECK(aw_word_is_reduced(rs, "1,2,0,1,2,0", 0, &r.s) == AW_OK);
  Out nr;
  CHECK(aw_word_is_reduced(rs, "1,1", 0, &nr.s) == AW_FAIL);
  Out fc;
  CHECK(aw_word_is_fully_commutative(rs, "1,2,0,1,2,0", 0, &fc.s) == AW_FAIL);
  CHECK(fc.str().find("not fully commutative") != std::string::npos);
  Out bad;
  CHECK(aw_word_eval(rs, "7", 0, &bad.s) == AW_ERROR);
  aw_rootsys_destroy(rs);
}

TEST_CASE("verification entry points") {
  aw_rootsys* rs = nullptr;
  REQUIRE(aw_rootsys_create("C", 2, &rs) == AW_OK);
  Out a;
  CHECK(aw_verify_translation(rs, 0, 4, 0, &a.s) == AW_OK);
  Out b;
  CHECK(aw_verify_periods(rs, 0, 4, 1, 0, &b.s) == AW_OK);
  Out c;
  CHECK(aw_verify_counts(rs, 1, 0, &c.s) == AW_OK);
  CHECK(c.str().find("8") != std::string::npos);
  Out d;
  CHECK(aw_verify_atoms(rs, 0, &d.s) == AW_OK);
  Out e;
  CHECK(aw_verify_coxeter_action(rs, 0, &e.s) == AW_OK);
  Out f;
  CHECK(aw_verify_coxeter_correspondence(rs, 0, &f.s) == AW_OK);
  aw_rootsys_destroy(rs);

  Out g;
  CHECK(aw_verify_b4_counterexample(0, &g.s) == AW_OK);
  Out h;
  CHECK(aw_verify_g2_periods(1, &h.s) == AW_OK);
  CHECK(h.str().find("\"checks\"") != std::string::npos);
}
