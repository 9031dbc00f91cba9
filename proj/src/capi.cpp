#include "affweyl.h"

#include <chrono>
#include <cstring>
#include <string>

#include "biclosed.hpp"
#include "coxact.hpp"
#include "minimal.hpp"
#include "report.hpp"
#include "rootsys.hpp"
#include "words.hpp"

using namespace affweyl;

struct aw_rootsys {
  RootSystem rs;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int finish(Report& rep, long long ms, int as_json, char** out) {
  rep.elapsed_ms = ms;
  if (out) *out = dup_string(as_json ? rep.json() : rep.text());
  return rep.all_pass() ? AW_OK : AW_FAIL;
}

template <typename F>
int run(const char* command, int as_json, char** out, F&& body) {
  g_last_error.clear();
  if (out) *out = nullptr;
  auto start = std::chrono::steady_clock::now();
  try {
    Report rep;
    rep.command = command;
    body(rep);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    return finish(rep, ms, as_json, out);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AW_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return AW_ERROR;
  }
}

std::vector<int> indices_for(const RootSystem& rs, int i) {
  std::vector<int> v;
  if (i == 0) {
    for (int k = 1; k <= rs.rank(); ++k) v.push_back(k);
  } else {
    v.push_back(i);
  }
  return v;
}

std::string sys_tag(const RootSystem& rs) {
  return system_tag(rs.type(), rs.rank());
}

}  // namespace

extern "C" {

int aw_rootsys_create(const char* type, int rank, aw_rootsys** out) {
  g_last_error.clear();
  if (!type || !out) {
    g_last_error = "null argument";
    return AW_ERROR;
  }
  *out = nullptr;
  try {
    *out = new aw_rootsys{RootSystem::build(parse_type(type), rank)};
    return AW_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AW_ERROR;
  }
}

void aw_rootsys_destroy(aw_rootsys* rs) { delete rs; }

int aw_rootsys_describe(const aw_rootsys* h, int as_json, char** out) {
  return run("rootsys show", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    rep.param("system", sys_tag(rs));
    auto coords = [](const IVec& v) {
      std::string s;
      for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
      return s;
    };
    for (int i = 1; i <= rs.rank(); ++i)
      rep.add("simple_root_" + std::to_string(i), true, "", coords(rs.simple_root(i)));
    for (int i = 1; i <= rs.rank(); ++i) {
      std::string row;
      for (int j = 1; j <= rs.rank(); ++j)
        row += (j > 1 ? " " : "") + rs.inner(rs.simple_root(i), rs.simple_root(j)).str();
      rep.add("gram_row_" + std::to_string(i), true, "", row);
    }
    for (int k = 0; k < rs.num_positive(); ++k)
      rep.add("positive_root_" + std::to_string(k + 1), true, "", coords(rs.root(k)));
    rep.add("group_order", true, "", std::to_string(rs.group_order()));
    rep.add("highest_root", true, "", coords(rs.highest_root()));
  });
}

int aw_word_eval(const aw_rootsys* h, const char* word, int as_json, char** out) {
  return run("word eval", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    Word w = parse_word(word ? word : "", rs.rank());
    rep.param("word", word_str(w));
    AffineElement e = evaluate(rs, w);
    rep.add("element", true, "", e.str());
    rep.add("length", true, "", std::to_string(e.length(rs)));
  });
}

int aw_word_is_reduced(const aw_rootsys* h, const char* word, int as_json, char** out) {
  return run("word is-reduced", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    Word w = parse_word(word ? word : "", rs.rank());
    rep.param("word", word_str(w));
    int bad = first_non_reduced_prefix(rs, w);
    rep.add("reduced", bad < 0, "reduced", bad < 0 ? "reduced" : "not reduced",
            bad < 0 ? "" : "first non-reduced prefix ends at position " + std::to_string(bad));
  });
}

int aw_word_is_fully_commutative(const aw_rootsys* h, const char* word, int as_json,
                                 char** out) {
  return run("word fc", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    Word w = parse_word(word ? word : "", rs.rank());
    rep.param("word", word_str(w));
    bool fc = is_fully_commutative(rs, w);
    rep.add("fully_commutative", fc, "fully commutative",
            fc ? "fully commutative" : "not fully commutative");
  });
}

int aw_verify_translation(const aw_rootsys* h, int i, int depth, int as_json, char** out) {
  return run("verify translation", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    rep.param("system", sys_tag(rs));
    rep.param("depth", std::to_string(depth));
    for (int k : indices_for(rs, i)) {
      Report sub = verify_translation_identity(rs, k, depth);
      rep.merge(sub);
    }
  });
}

int aw_verify_periods(const aw_rootsys* h, int i, int depth, int exhaustive, int as_json,
                      char** out) {
  return run("verify periods", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    rep.param("system", sys_tag(rs));
    rep.param("depth", std::to_string(depth));
    rep.param("splits", exhaustive ? "all" : "trivial");
    for (int k : indices_for(rs, i)) {
      Word q = quotient_word(rs, k);
      std::vector<std::pair<Word, Word>> splits;
      if (exhaustive)
        splits = enumerate_splits(rs, q);
      else
        splits.emplace_back(Word{}, q);
      for (const auto& [u, v] : splits) {
        Report sub = verify_minimal_instance(rs, k, u, v, depth);
        rep.merge(sub);
      }
    }
  });
}

int aw_verify_counts(const aw_rootsys* h, int brute_force, int as_json, char** out) {
  return run("verify counts", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    rep.param("system", sys_tag(rs));
    long long formula = count_minimal_formula(rs);
    rep.add(sys_tag(rs) + ".count_formula", true, "", std::to_string(formula));
    if (brute_force) {
      long long brute = count_minimal_bruteforce(rs);
      rep.add(sys_tag(rs) + ".count_bruteforce_matches", brute == formula,
              std::to_string(formula), std::to_string(brute));
    }
  });
}

int aw_verify_atoms(const aw_rootsys* h, int as_json, char** out) {
  return run("verify atoms", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    rep.param("system", sys_tag(rs));
    ClosureTable ct(rs);
    std::vector<RootSet> atoms = ct.atoms_bruteforce();
    std::set<RootSet> atom_set(atoms.begin(), atoms.end());
    std::set<RootSet> targets;
    for (const MinimalTarget& t : enumerate_minimal_targets(rs)) targets.insert(t.set);
    rep.add(sys_tag(rs) + ".atoms_match_targets", atom_set == targets,
            std::to_string(targets.size()) + " sets",
            std::to_string(atom_set.size()) + " atoms");
  });
}

int aw_verify_coxeter_action(const aw_rootsys* h, int as_json, char** out) {
  return run("verify coxeter-action", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    rep.param("system", sys_tag(rs));
    rep.merge(verify_action_well_defined(rs));
    if (rs.type() == Type::C) rep.merge(verify_cox_lemma(rs));
  });
}

int aw_verify_coxeter_correspondence(const aw_rootsys* h, int as_json, char** out) {
  return run("verify coxeter-correspondence", as_json, out, [&](Report& rep) {
    const RootSystem& rs = h->rs;
    rep.param("system", sys_tag(rs));
    rep.merge(verify_cox_theorem(rs));
  });
}

int aw_verify_b4_counterexample(int as_json, char** out) {
  return run("verify b4-counterexample", as_json, out,
             [&](Report& rep) { rep.merge(verify_b4_counterexample()); });
}

int aw_verify_g2_periods(int as_json, char** out) {
  return run("verify g2-periods", as_json, out,
             [&](Report& rep) { rep.merge(verify_g2_remark()); });
}

int aw_verify_f4_periods(int as_json, char** out) {
  return run("verify f4-periods", as_json, out,
             [&](Report& rep) { rep.merge(verify_f4_remark()); });
}

void aw_string_free(char* s) { delete[] s; }

const char* aw_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
