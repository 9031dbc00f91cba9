#include "words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affweyl {

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const std::string& csv, int rank) {
  Word w;
  if (csv.empty() || csv == "e") return w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0 || v > rank)
      throw std::invalid_argument("bad letter in word: " + tok);
    w.push_back(v);
  }
  return w;
}

namespace {

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
  if (i == 0) {
    IVec a = rs.highest_root();
    for (int& c : a) c = -c;
    return {a, 1};
  }
  return {rs.simple_root(i), 0};
}

bool is_positive_affine(const RootSystem& rs, const AffineRoot& r) {
  if (r.level != 0) return r.level > 0;
  return rs.is_positive(rs.root_index(r.alpha));
}

}  // namespace

AffineElement evaluate(const RootSystem& rs, const Word& w) {
  AffineElement e = AffineElement::identity(rs);
  for (int l : w) e = e.multiply(rs, AffineElement::simple_reflection(rs, l));
  return e;
}

int first_non_reduced_prefix(const RootSystem& rs, const Word& w) {
  AffineElement p = AffineElement::identity(rs);
  for (size_t i = 0; i < w.size(); ++i) {
    AffineRoot r = p.act(rs, simple_affine_root(rs, w[i]));
    if (!is_positive_affine(rs, r)) return static_cast<int>(i);
    p = p.multiply(rs, AffineElement::simple_reflection(rs, w[i]));
  }
  return -1;
}

bool is_reduced(const RootSystem& rs, const Word& w) {
  return first_non_reduced_prefix(rs, w) == -1;
}

Word canonical_word(const RootSystem& rs, const AffineElement& w) {
  Word out;
  AffineElement cur = w;
  while (!cur.is_identity()) {
    AffineElement inv = cur.inverse(rs);
    int descent = -1;
    for (int i = 0; i <= rs.rank(); ++i) {
      if (!is_positive_affine(rs, inv.act(rs, simple_affine_root(rs, i)))) {
        descent = i;
        break;
      }
    }
    if (descent == -1) throw std::logic_error("non-identity element without left descent");
    out.push_back(descent);
    cur = AffineElement::simple_reflection(rs, descent).multiply(rs, cur);
  }
  return out;
}

AffineElement longest_element(const RootSystem& rs, const std::vector<int>& J) {
  // Greedily append the smallest j in J that keeps the length growing;
  // terminates at the longest element of W_J.
  AffineElement w = AffineElement::identity(rs);
  for (;;) {
    int pick = -1;
    for (int j : J) {
      IVec img = w.apply_finite(rs, rs.simple_root(j));
      if (rs.is_positive(rs.root_index(img))) { pick = j; break; }
    }
    if (pick == -1) return w;
    w = w.multiply(rs, AffineElement::simple_reflection(rs, pick));
  }
}

Word quotient_word(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("index out of range");
  std::vector<int> J;
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != i) J.push_back(j);
  std::vector<int> all(J);
  all.push_back(i);
  std::sort(all.begin(), all.end());
  AffineElement w0p = longest_element(rs, J);
  AffineElement w0 = longest_element(rs, all);
  return canonical_word(rs, w0p.multiply(rs, w0));
}

AffineElement coset_min_rep(const RootSystem& rs, const AffineElement& w,
                            const std::vector<int>& J) {
  AffineElement cur = w;
  for (;;) {
    int descent = -1;
    for (int j : J) {
      IVec img = cur.apply_finite(rs, rs.simple_root(j));
      if (!rs.is_positive(rs.root_index(img))) { descent = j; break; }
    }
    if (descent == -1) return cur;
    cur = cur.multiply(rs, AffineElement::simple_reflection(rs, descent));
  }
}

std::vector<std::pair<Word, Word>> enumerate_splits(const RootSystem& rs, const Word& target) {
  if (!is_reduced(rs, target)) throw std::invalid_argument("target word is not reduced");
  AffineElement t = evaluate(rs, target);
  long long lt = static_cast<long long>(target.size());

  std::set<int> alphabet(target.begin(), target.end());
  std::vector<std::pair<Word, Word>> out;
  std::map<AffineElement, Word> layer;
  layer[AffineElement::identity(rs)] = Word{};
  for (long long l = 0; l <= lt; ++l) {
    std::map<AffineElement, Word> next;
    for (const auto& [u, uw] : layer) {
      AffineElement rest = u.inverse(rs).multiply(rs, t);
      out.emplace_back(uw, canonical_word(rs, rest));
      if (l == lt) continue;
      for (int a : alphabet) {
        AffineElement u2 = u.multiply(rs, AffineElement::simple_reflection(rs, a));
        if (u2.length(rs) != l + 1) continue;
        if (u2.inverse(rs).multiply(rs, t).length(rs) != lt - l - 1) continue;
        if (!next.count(u2)) {
          Word w2 = uw;
          w2.push_back(a);
          next[u2] = w2;
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

bool is_fully_commutative(const RootSystem& rs, const Word& w) {
  if (!is_reduced(rs, w)) throw std::invalid_argument("word is not reduced");
  auto m = rs.affine_coxeter_matrix();
  std::set<Word> seen{w};
  std::vector<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.back();
    queue.pop_back();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      int s = cur[i], t = cur[i + 1];
      if (s == t) throw std::logic_error("reduced word with repeated letter");
      int ms = m[s][t];
      if (ms == 2) {
        Word nb = cur;
        std::swap(nb[i], nb[i + 1]);
        if (seen.insert(nb).second) queue.push_back(nb);
        continue;
      }
      // Alternating factor of length m(s,t) starting at i?
      size_t run = 2;
      while (i + run < cur.size() && cur[i + run] == ((run % 2 == 0) ? s : t)) run++;
      if (static_cast<int>(run) >= ms) return false;
    }
  }
  return true;
}

}  // namespace affweyl
