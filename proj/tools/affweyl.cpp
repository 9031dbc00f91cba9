// affweyl command-line tool. Talks to the shared library exclusively
// through the C interface in affweyl.h.
#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "affweyl.h"

namespace {

struct Options {
  std::string type = "C";
  int rank = 0;
  bool json = false;
  int depth = 6;
  int index = 0;  // 0 = all simple-root indices
  bool exhaustive = false;
  bool brute_force = false;
  bool atoms = false;
  std::string word;
};

int default_rank(const std::string& type) {
  if (type == "E6") return 6;
  if (type == "E7") return 7;
  if (type == "E8") return 8;
  if (type == "F4") return 4;
  if (type == "G2") return 2;
  return 0;
}

// Prints the report (if any) and maps the C return code to the exit code.
int emit(int rc, char* text) {
  if (text) {
    std::fputs(text, stdout);
    std::fputc('\n', stdout);
    aw_string_free(text);
  }
  if (rc == AW_ERROR) {
    std::fprintf(stderr, "error: %s\n", aw_last_error());
    return 2;
  }
  return rc == AW_OK ? 0 : 1;
}

struct SysHandle {
  aw_rootsys* h = nullptr;
  ~SysHandle() { aw_rootsys_destroy(h); }
};

int make_system(const Options& o, SysHandle& sys) {
  int rank = o.rank ? o.rank : default_rank(o.type);
  int rc = aw_rootsys_create(o.type.c_str(), rank, &sys.h);
  if (rc != AW_OK) {
    std::fprintf(stderr, "error: %s\n", aw_last_error());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic affine Weyl group verifier"};
  app.require_subcommand(1);

  Options o;
  if (const char* env = std::getenv("AFFWEYL_DEPTH")) o.depth = std::atoi(env);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--type", o.type, "Root system type: A,B,C,D,E6,E7,E8,F4,G2");
    c->add_option("--rank", o.rank, "Rank (defaults from type when fixed)");
    c->add_flag("--json", o.json, "Machine-readable report");
  };

  CLI::App* rootsys = app.add_subcommand("rootsys", "Root system data");
  CLI::App* show = rootsys->add_subcommand("show", "Print root system summary");
  add_common(show);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  CLI::App* lemma5 = verify->add_subcommand(
      "lemma5", "Tabulated translation words: reduced, translation, straight");
  add_common(lemma5);
  lemma5->add_option("--index", o.index, "Single simple-root index (default: all)");
  lemma5->add_option("--depth", o.depth, "Straightness depth");

  CLI::App* theorem4 = verify->add_subcommand(
      "theorem4", "Period words of quotient-word factorizations");
  add_common(theorem4);
  theorem4->add_option("--index", o.index, "Single simple-root index (default: all)");
  theorem4->add_option("--depth", o.depth, "Straightness/prefix depth");
  theorem4->add_flag("--exhaustive-splits", o.exhaustive,
                     "Check every length-additive factorization");

  CLI::App* lemma6 = verify->add_subcommand(
      "lemma6", "Weyl-group action on Coxeter elements (type C)");
  add_common(lemma6);

  CLI::App* remarks = verify->add_subcommand(
      "remarks", "Frozen special cases: B4 action failure, G2/F4 period tables");
  add_common(remarks);

  CLI::App* counts = verify->add_subcommand("counts", "Count of minimal elements");
  add_common(counts);
  counts->add_flag("--brute-force", o.brute_force, "Cross-check by enumeration");
  counts->add_flag("--atoms", o.atoms, "Also match poset atoms against targets");

  CLI::App* word = app.add_subcommand("word", "Operations on words");
  CLI::App* weval = word->add_subcommand("eval", "Evaluate a word");
  CLI::App* wred = word->add_subcommand("is-reduced", "Test reducedness");
  CLI::App* wfc = word->add_subcommand("fc", "Test full commutativity");
  for (CLI::App* c : {weval, wred, wfc}) {
    add_common(c);
    c->add_option("--word", o.word, "Comma-separated generator indices (0 = affine)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  char* text = nullptr;
  int js = o.json ? 1 : 0;

  if (show->parsed()) {
    SysHandle sys;
    if (int rc = make_system(o, sys)) return rc;
    int rc = aw_rootsys_describe(sys.h, js, &text);
    return emit(rc, text);
  }
  if (lemma5->parsed()) {
    SysHandle sys;
    if (int rc = make_system(o, sys)) return rc;
    int rc = aw_verify_translation(sys.h, o.index, o.depth, js, &text);
    return emit(rc, text);
  }
  if (theorem4->parsed()) {
    SysHandle sys;
    if (int rc = make_system(o, sys)) return rc;
    int rc = aw_verify_periods(sys.h, o.index, o.depth, o.exhaustive ? 1 : 0, js, &text);
    return emit(rc, text);
  }
  if (lemma6->parsed()) {
    SysHandle sys;
    if (int rc = make_system(o, sys)) return rc;
    int rc1 = aw_verify_coxeter_action(sys.h, js, &text);
    int code1 = emit(rc1, text);
    text = nullptr;
    int rc2 = aw_verify_coxeter_correspondence(sys.h, js, &text);
    int code2 = emit(rc2, text);
    return code1 ? code1 : code2;
  }
  if (remarks->parsed()) {
    if (o.type == "B") {
      int rc = aw_verify_b4_counterexample(js, &text);
      return emit(rc, text);
    }
    if (o.type == "G2") {
      int rc = aw_verify_g2_periods(js, &text);
      return emit(rc, text);
    }
    if (o.type == "F4") {
      int rc = aw_verify_f4_periods(js, &text);
      return emit(rc, text);
    }
    std::fprintf(stderr, "error: remarks exist for --type B (rank 4), G2, F4\n");
    return 2;
  }
  if (counts->parsed()) {
    SysHandle sys;
    if (int rc = make_system(o, sys)) return rc;
    int rc1 = aw_verify_counts(sys.h, o.brute_force ? 1 : 0, js, &text);
    int code1 = emit(rc1, text);
    if (!o.atoms) return code1;
    text = nullptr;
    int rc2 = aw_verify_atoms(sys.h, js, &text);
    int code2 = emit(rc2, text);
    return code1 ? code1 : code2;
  }
  if (weval->parsed() || wred->parsed() || wfc->parsed()) {
    SysHandle sys;
    if (int rc = make_system(o, sys)) return rc;
    int rc;
    if (weval->parsed())
      rc = aw_word_eval(sys.h, o.word.c_str(), js, &text);
    else if (wred->parsed())
      rc = aw_word_is_reduced(sys.h, o.word.c_str(), js, &text);
    else
      rc = aw_word_is_fully_commutative(sys.h, o.word.c_str(), js, &text);
    return emit(rc, text);
  }

  std::fprintf(stderr, "error: missing subcommand\n");
  return 2;
}
