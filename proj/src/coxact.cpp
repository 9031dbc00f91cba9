#include "coxact.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "minimal.hpp"

namespace affweyl {

std::vector<AffineElement> coxeter_elements(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<int> perm(n + 1);
  for (int i = 0; i <= n; ++i) perm[i] = i;
  std::set<AffineElement> seen;
  std::vector<AffineElement> out;
  do {
    AffineElement e = evaluate(rs, Word(perm.begin(), perm.end()));
    if (seen.insert(e).second) out.push_back(e);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_coxeter_element(const RootSystem& rs, const AffineElement& e) {
  for (const AffineElement& c : coxeter_elements(rs))
    if (c == e) return true;
  return false;
}

std::vector<std::pair<int, int>> orientation(const RootSystem& rs, const AffineElement& c) {
  Word w = canonical_word(rs, c);
  int n = rs.rank();
  if (static_cast<int>(w.size()) != n + 1)
    throw std::invalid_argument("not a Coxeter element");
  std::vector<int> pos(n + 1, -1);
  for (size_t k = 0; k < w.size(); ++k) {
    if (pos[w[k]] != -1) throw std::invalid_argument("not a Coxeter element");
    pos[w[k]] = static_cast<int>(k);
  }
  auto m = rs.affine_coxeter_matrix();
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (m[a][b] == 2) continue;
      if (pos[a] < pos[b])
        edges.emplace_back(a, b);
      else
        edges.emplace_back(b, a);
    }
  return edges;
}

AffineElement coxeter_from_orientation(const RootSystem& rs,
                                       const std::vector<std::pair<int, int>>& edges) {
  int n = rs.rank();
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> succ(n + 1);
  for (auto [a, b] : edges) {
    if (a < 0 || a > n || b < 0 || b > n) throw std::invalid_argument("bad node index");
    succ[a].push_back(b);
    ++indeg[b];
  }
  // Kahn's algorithm, smallest-index first for determinism.
  Word order;
  std::set<int> ready;
  for (int v = 0; v <= n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (static_cast<int>(order.size()) != n + 1)
    throw std::invalid_argument("orientation is cyclic");
  return evaluate(rs, order);
}

AffineElement act_simple(const RootSystem& rs, int i, const AffineElement& c) {
  if (i < 1 || i > rs.rank())
    throw std::invalid_argument("only finite generators act on Coxeter elements");
  AffineElement s = AffineElement::simple_reflection(rs, i);
  long long l = c.length(rs);
  bool left = s.multiply(rs, c).length(rs) < l;
  bool right = c.multiply(rs, s).length(rs) < l;
  if (left || right) return s.multiply(rs, c).multiply(rs, s);
  return c;
}

AffineElement act_word(const RootSystem& rs, const Word& w, const AffineElement& c) {
  AffineElement cur = c;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_simple(rs, *it, cur);
  return cur;
}

Report verify_action_well_defined(const RootSystem& rs) {
  Report rep;
  std::string tag = system_tag(rs.type(), rs.rank());
  std::vector<AffineElement> cox = coxeter_elements(rs);
  auto m = rs.coxeter_matrix();

  bool involutive = true;
  for (const AffineElement& c : cox)
    for (int i = 1; i <= rs.rank() && involutive; ++i)
      involutive = act_simple(rs, i, act_simple(rs, i, c)) == c;
  rep.add(tag + ".action_involutive", involutive);

  bool braid_ok = true;
  std::string witness;
  for (int i = 1; i <= rs.rank() && braid_ok; ++i) {
    for (int j = i + 1; j <= rs.rank() && braid_ok; ++j) {
      int ord = m[i - 1][j - 1];
      Word wa, wb;
      for (int k = 0; k < ord; ++k) {
        wa.push_back(k % 2 == 0 ? i : j);
        wb.push_back(k % 2 == 0 ? j : i);
      }
      for (const AffineElement& c : cox) {
        if (act_word(rs, wa, c) != act_word(rs, wb, c)) {
          braid_ok = false;
          witness = "words " + word_str(wa) + " and " + word_str(wb) + " on " +
                    word_str(canonical_word(rs, c));
          break;
        }
      }
    }
  }
  rep.add(tag + ".braid_relations", braid_ok, "respected",
          braid_ok ? "respected" : "violated", witness);
  return rep;
}

std::vector<AffineElement> orbit(const RootSystem& rs, const AffineElement& c) {
  std::set<AffineElement> seen{c};
  std::vector<AffineElement> out{c};
  for (size_t k = 0; k < out.size(); ++k) {
    for (int i = 1; i <= rs.rank(); ++i) {
      AffineElement nb = act_simple(rs, i, out[k]);
      if (seen.insert(nb).second) out.push_back(nb);
    }
  }
  return out;
}

long long stabilizer_order(const RootSystem& rs, const AffineElement& c) {
  long long count = 0;
  for (const AffineElement& w : enumerate_weyl_group(rs))
    if (act_word(rs, canonical_word(rs, w), c) == c) count++;
  return count;
}

Word type_c_coxeter_word(const RootSystem& rs) {
  Word w;
  for (int i = rs.rank(); i >= 0; --i) w.push_back(i);
  return w;
}

Word type_c_quotient_expression(const RootSystem& rs) {
  Word w;
  for (int k = 1; k <= rs.rank(); ++k)
    for (int i = rs.rank(); i >= k; --i) w.push_back(i);
  return w;
}

Report verify_cox_lemma(const RootSystem& rs) {
  if (rs.type() != Type::C) throw std::invalid_argument("type C only");
  Report rep;
  int n = rs.rank();
  std::string tag = "C" + std::to_string(n);

  Word qe = type_c_quotient_expression(rs);
  rep.add(tag + ".quotient_expression_reduced", is_reduced(rs, qe));
  AffineElement q = evaluate(rs, quotient_word(rs, n));
  AffineElement qq = evaluate(rs, qe);
  rep.add(tag + ".quotient_expression", qq == q, q.str(), qq.str());

  AffineElement c = evaluate(rs, type_c_coxeter_word(rs));
  AffineElement cn = AffineElement::identity(rs);
  for (int k = 0; k < n; ++k) cn = cn.multiply(rs, c);
  AffineElement t = AffineElement::translation(rs, distinguished_coroot(rs, n));
  rep.add(tag + ".cn_is_translation", cn == t, t.str(), cn.str());

  std::vector<AffineElement> orb = orbit(rs, c);
  long long expected_orbit = 1LL << n;
  rep.add(tag + ".orbit_size", static_cast<long long>(orb.size()) == expected_orbit,
          std::to_string(expected_orbit), std::to_string(orb.size()));

  long long expected_stab = 1;
  for (int k = 2; k <= n; ++k) expected_stab *= k;
  long long stab = stabilizer_order(rs, c);
  rep.add(tag + ".stabilizer_order", stab == expected_stab, std::to_string(expected_stab),
          std::to_string(stab));
  return rep;
}

Report verify_cox_theorem(const RootSystem& rs) {
  if (rs.type() != Type::C) throw std::invalid_argument("type C only");
  Report rep;
  int n = rs.rank();
  std::string tag = "C" + std::to_string(n);

  AffineElement c = evaluate(rs, type_c_coxeter_word(rs));
  std::vector<AffineElement> cox = coxeter_elements(rs);
  std::set<AffineElement> coxset(cox.begin(), cox.end());

  Word target = quotient_word(rs, n);
  auto splits = enumerate_splits(rs, target);
  rep.add(tag + ".split_count", static_cast<long long>(splits.size()) == (1LL << n),
          std::to_string(1LL << n), std::to_string(splits.size()));

  bool periods_ok = true, all_cox = true;
  std::set<AffineElement> reached;
  std::string witness;
  for (const auto& [u, v] : splits) {
    AffineElement ue = evaluate(rs, u);
    AffineElement cu = ue.inverse(rs).multiply(rs, c).multiply(rs, ue);
    if (!coxset.count(cu)) {
      all_cox = false;
      witness = "u=" + word_str(u);
    }
    reached.insert(cu);
    AffineElement pe = evaluate(rs, period_word(rs, n, u, v));
    AffineElement cun = AffineElement::identity(rs);
    for (int k = 0; k < n; ++k) cun = cun.multiply(rs, cu);
    if (pe != cun) {
      periods_ok = false;
      witness = "u=" + word_str(u);
    }
  }
  rep.add(tag + ".periods_are_coxeter_powers", periods_ok, "true",
          periods_ok ? "true" : "false", witness);
  rep.add(tag + ".conjugates_are_coxeter", all_cox, "true", all_cox ? "true" : "false", witness);
  rep.add(tag + ".all_coxeter_elements_reached", reached == coxset,
          std::to_string(coxset.size()), std::to_string(reached.size()));
  return rep;
}

Report verify_b4_counterexample() {
  Report rep;
  RootSystem rs = RootSystem::build(Type::B, 4);
  AffineElement c = evaluate(rs, {1, 4, 2, 3, 0});
  AffineElement lhs = act_word(rs, {2, 3, 2}, c);
  AffineElement rhs = act_word(rs, {3, 2, 3}, c);
  AffineElement expected_lhs = evaluate(rs, {3, 1, 4, 2, 0});
  rep.add("B4.witness_232", lhs == expected_lhs, expected_lhs.str(), lhs.str());
  rep.add("B4.witness_323_fixes", rhs == c, c.str(), rhs.str());
  rep.add("B4.action_ill_defined", lhs != rhs, "results differ",
          lhs != rhs ? "results differ" : "results agree");
  return rep;
}

namespace {

Report verify_remark_table(const RootSystem& rs, int power,
                           const std::vector<std::array<Word, 3>>& rows) {
  Report rep;
  std::string tag = type_name(rs.type());
  AffineElement q = evaluate(rs, quotient_word(rs, 2));
  int row_no = 0;
  for (const auto& [u, v, c] : rows) {
    ++row_no;
    std::string rtag = tag + ".row" + std::to_string(row_no);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    AffineElement uve = evaluate(rs, uv);
    rep.add(rtag + ".uv_is_quotient", uve == q, q.str(), uve.str());
    Word p = period_word(rs, 2, u, v);
    rep.add(rtag + ".period_reduced", is_reduced(rs, p));
    AffineElement ce = evaluate(rs, c);
    AffineElement cp = AffineElement::identity(rs);
    for (int k = 0; k < power; ++k) cp = cp.multiply(rs, ce);
    AffineElement pe = evaluate(rs, p);
    rep.add(rtag + ".period_is_coxeter_power", pe == cp, cp.str(), pe.str());
  }
  return rep;
}

}  // namespace

Report verify_g2_remark() {
  RootSystem rs = RootSystem::build(Type::G2, 2);
  std::vector<std::array<Word, 3>> rows = {
      {{{2}, {1, 2, 1, 2}, {1, 2, 0}}},
      {{{2, 1}, {2, 1, 2}, {2, 1, 0}}},
      {{{2, 1, 2}, {1, 2}, {1, 0, 2}}},
      {{{2, 1, 2, 1}, {2}, {0, 2, 1}}},
  };
  Report rep = verify_remark_table(rs, 2, rows);
  // Two turns of (1,2,0) admit only trivial commutations yet contain a
  // braid factor, so the word is not fully commutative.
  bool fc = is_fully_commutative(rs, {1, 2, 0, 1, 2, 0});
  rep.add("G2.period_square_not_fully_commutative", !fc, "not fully commutative",
          fc ? "fully commutative" : "not fully commutative");
  return rep;
}

Report verify_f4_remark() {
  RootSystem rs = RootSystem::build(Type::F4, 4);
  std::vector<std::array<Word, 3>> rows = {
      {{{2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3}, {2, 1, 2, 3, 4, 2, 3, 1, 2}, {1, 2, 3, 4, 0}}},
      {{{2, 1, 3, 2, 3, 4, 3, 2, 3, 1, 2, 3, 2, 4, 3}, {1, 2, 3, 1, 2}, {0, 1, 2, 3, 4}}},
      {{{2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3, 1, 2, 3}, {1, 4, 2, 3, 1, 2}, {0, 1, 2, 4, 3}}},
      {{{2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3, 1, 2}, {3, 1, 4, 2, 3, 1, 2}, {3, 0, 1, 2, 4}}},
      {{{2, 1, 3, 2, 3, 1, 4, 3, 2, 3, 1, 2}, {1, 4, 3, 4, 2, 3, 1, 2}, {4, 3, 0, 1, 2}}},
      {{{2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3, 1}, {2, 1, 3, 4, 2, 3, 1, 2}, {2, 0, 1, 3, 4}}},
      {{{2, 1, 3, 2, 3, 1, 4, 3, 2, 3, 1}, {4, 2, 1, 3, 4, 2, 3, 1, 2}, {4, 0, 2, 1, 3}}},
      {{{2, 1, 3, 2, 3, 1, 4, 3, 2, 1}, {3, 4, 2, 1, 3, 4, 2, 3, 1, 2}, {3, 4, 0, 2, 1}}},
      {{{2, 3, 4, 2, 1, 2, 3, 2, 1}, {4, 3, 4, 2, 1, 3, 4, 2, 3, 1, 2}, {4, 3, 2, 0, 1}}},
      {{{2, 1, 3, 2, 3, 1, 4, 3, 2, 3}, {2, 4, 1, 2, 3, 4, 2, 3, 1, 2}, {4, 1, 2, 3, 0}}},
      {{{2, 1, 3, 2, 3, 1, 4, 3, 2}, {3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2}, {3, 4, 1, 2, 0}}},
      {{{2, 3, 4, 2, 1, 2, 3, 2}, {4, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2}, {4, 3, 1, 2, 0}}},
      {{{2, 1, 3, 2, 3, 1, 4, 3}, {2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2}, {2, 1, 0, 3, 4}}},
      {{{2, 1, 3, 2, 1, 4, 3}, {4, 2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2}, {4, 2, 1, 0, 3}}},
      {{{2, 1, 3, 2, 1, 4}, {3, 4, 2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2}, {3, 4, 2, 1, 0}}},
      {{{2, 1, 3, 2, 1}, {4, 3, 4, 2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2}, {4, 3, 2, 1, 0}}},
  };
  return verify_remark_table(rs, 6, rows);
}

}  // namespace affweyl
