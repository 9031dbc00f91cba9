#include "minimal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affweyl {

namespace {

void check_index(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw std::invalid_argument("index " + std::to_string(i) + " out of range");
}

QVec qvec_of(std::vector<Rational> v) { return v; }

QVec coroot_classical(const RootSystem& rs, int i) {
  int n = rs.rank();
  QVec c(n, Rational(0));
  switch (rs.type()) {
    case Type::C:
      // 2b1 + 4b2 + ... + 2(i-1)b_{i-1} + 2i(b_i..b_{n-1}) + i*b_n
      for (int k = 1; k <= n - 1; ++k) c[k - 1] = Rational(2 * std::min(k, i));
      c[n - 1] = Rational(i);
      return c;
    case Type::B:
      if (i == 1) {
        for (int k = 1; k <= n; ++k) c[k - 1] = Rational(2);
      } else if (i % 2 == 0) {
        for (int k = 1; k <= n; ++k) c[k - 1] = Rational(std::min(k, i));
      } else {
        for (int k = 1; k <= n; ++k) c[k - 1] = Rational(2 * std::min(k, i));
      }
      return c;
    case Type::D:
      if (i == 1) {
        for (int k = 1; k <= n - 2; ++k) c[k - 1] = Rational(4);
        c[n - 2] = Rational(2);
        c[n - 1] = Rational(2);
      } else if (i <= n - 2 && i % 2 == 0) {
        for (int k = 1; k <= n - 2; ++k) c[k - 1] = Rational(2 * std::min(k, i));
        c[n - 2] = Rational(i);
        c[n - 1] = Rational(i);
      } else if (i <= n - 2) {
        for (int k = 1; k <= n - 2; ++k) c[k - 1] = Rational(4 * std::min(k, i));
        c[n - 2] = Rational(2 * i);
        c[n - 1] = Rational(2 * i);
      } else if (n % 2 == 0) {
        for (int k = 1; k <= n - 2; ++k) c[k - 1] = Rational(2 * k);
        c[n - 2] = Rational(i == n - 1 ? n : n - 2);
        c[n - 1] = Rational(i == n - 1 ? n - 2 : n);
      } else {
        for (int k = 1; k <= n - 2; ++k) c[k - 1] = Rational(4 * k);
        c[n - 2] = Rational(i == n - 1 ? 2 * n : 2 * n - 4);
        c[n - 1] = Rational(i == n - 1 ? 2 * n - 4 : 2 * n);
      }
      return c;
    default:
      throw std::logic_error("not a classical type");
  }
}

const std::vector<std::vector<int>>& exceptional_coroots(Type t) {
  static const std::vector<std::vector<int>> e6 = {
      {8, 6, 10, 12, 8, 4},   {2, 4, 4, 6, 4, 2},     {10, 12, 20, 24, 16, 8},
      {4, 6, 8, 12, 8, 4},    {8, 12, 16, 24, 20, 10}, {4, 6, 8, 12, 10, 8}};
  static const std::vector<std::vector<int>> e7 = {
      {4, 4, 6, 8, 6, 4, 2},       {8, 14, 16, 24, 18, 12, 6}, {6, 8, 12, 16, 12, 8, 4},
      {8, 12, 16, 24, 18, 12, 6},  {12, 18, 24, 36, 30, 20, 10},
      {4, 6, 8, 12, 10, 8, 4},     {4, 6, 8, 12, 10, 8, 6}};
  static const std::vector<std::vector<int>> e8 = {
      {8, 10, 14, 20, 16, 12, 8, 4},   {10, 16, 20, 30, 24, 18, 12, 6},
      {14, 20, 28, 40, 32, 24, 16, 8}, {20, 30, 40, 60, 48, 36, 24, 12},
      {16, 24, 32, 48, 40, 30, 20, 10}, {12, 18, 24, 36, 30, 24, 16, 8},
      {8, 12, 16, 24, 20, 16, 12, 6},  {4, 6, 8, 12, 10, 8, 6, 4}};
  static const std::vector<std::vector<int>> f4 = {
      {2, 3, 4, 2}, {3, 6, 8, 4}, {4, 8, 12, 6}, {2, 4, 6, 4}};
  switch (t) {
    case Type::E6: return e6;
    case Type::E7: return e7;
    case Type::E8: return e8;
    case Type::F4: return f4;
    default: throw std::logic_error("not an exceptional type");
  }
}

void asc(Word& w, int from, int to) {  // empty when from > to
  for (int k = from; k <= to; ++k) w.push_back(k);
}

void desc(Word& w, int from, int to) {  // empty when from < to
  for (int k = from; k >= to; --k) w.push_back(k);
}

// (2,1,3,2)(4,3,5,4)...(m,m-1,m+1,m) for even m; empty when m < 2.
void quad_blocks(Word& w, int m) {
  for (int b = 2; b <= m; b += 2) {
    w.push_back(b);
    w.push_back(b - 1);
    w.push_back(b + 1);
    w.push_back(b);
  }
}

Word tail_classical(const RootSystem& rs, int i) {
  int n = rs.rank();
  Word w;
  switch (rs.type()) {
    case Type::C:
      for (int j = 0; j < i; ++j) desc(w, j, 0);
      return w;
    case Type::B:
      if (i == 1) {
        w.push_back(0);
        asc(w, 2, n);
        desc(w, n - 1, 2);
        w.push_back(0);
      } else if (i % 2 == 0) {
        w.push_back(0);
        for (int m = i - 2; m >= 2; m -= 2) {
          quad_blocks(w, m);
          w.push_back(0);
        }
      } else {
        for (int r = 0; r < (i - 1) / 2; ++r) {
          w.push_back(0);
          asc(w, 2, n); desc(w, n - 1, i);
          w.push_back(1);
          asc(w, 2, n); desc(w, n - 1, i);
        }
        w.push_back(0);
        asc(w, 2, n); desc(w, n - 1, i);
        w.push_back(1);
        asc(w, 2, i - 1);
        for (int m = i - 3; m >= 2; m -= 2) {
          w.push_back(0);
          quad_blocks(w, m);
        }
        w.push_back(0);
      }
      return w;
    case Type::D:
      if (i == 1) {
        w.push_back(0);
        asc(w, 2, n - 2);
        w.push_back(n - 1);
        w.push_back(n);
        desc(w, n - 2, 2);
        w.push_back(0);
      } else if (i <= n - 2 && i % 2 == 0) {
        w.push_back(0);
        for (int m = i - 2; m >= 2; m -= 2) {
          quad_blocks(w, m);
          w.push_back(0);
        }
      } else if (i <= n - 2) {
        w.push_back(0);
        for (int r = 0; r < (i - 1) / 2; ++r) {
          asc(w, 2, n);
          w.push_back(1);
          asc(w, 2, n);
          for (int m = n - 3; m >= i - 1; --m) {
            w.push_back(m);
            w.push_back(m + 1);
          }
          w.push_back(0);
        }
        asc(w, 2, n);
        desc(w, n - 2, i);
        w.push_back(1);
        asc(w, 2, i - 1);
        w.push_back(0);
        for (int m = i - 3; m >= 2; m -= 2) {
          quad_blocks(w, m);
          w.push_back(0);
        }
      } else if (n % 2 == 0) {
        w.push_back(0);
        asc(w, 2, n - 2);
        w.push_back(i == n - 1 ? n : n - 1);
        w.push_back(1);
        asc(w, 2, n - 2);
        w.push_back(0);
        for (int m = n - 4; m >= 2; m -= 2) {
          quad_blocks(w, m);
          w.push_back(0);
        }
      } else {
        w.push_back(0);
        for (int r = 0; r < (n + 1) / 2; ++r) {
          if (i == n - 1) {
            asc(w, 2, n - 1);
            w.push_back(1);
            asc(w, 2, n - 2);
            w.push_back(n);
          } else {
            asc(w, 2, n - 2);
            w.push_back(n);
            w.push_back(1);
            asc(w, 2, n - 2);
            w.push_back(n - 1);
          }
          w.push_back(0);
        }
        for (int m = n - 3; m >= 2; m -= 2) {
          quad_blocks(w, m);
          w.push_back(0);
        }
      }
      return w;
    default:
      throw std::logic_error("not a classical type");
  }
}

Word rep(const Word& block, int times) {
  Word w;
  for (int r = 0; r < times; ++r) w.insert(w.end(), block.begin(), block.end());
  return w;
}

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const Word& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

Word tail_exceptional(Type t, int i) {
  switch (t) {
    case Type::E6: {
      switch (i) {
        case 1:
          return cat({{0}, rep({2, 4, 5, 3, 4, 1, 2, 3, 4, 5, 6, 0}, 2),
                      {2, 4, 5, 3, 4, 2, 0}});
        case 2:
          return {0};
        case 3:
          return cat({{0},
                      rep({2, 4, 5, 6, 3, 4, 5, 2, 4, 1, 3, 4, 2, 5, 4, 6, 5, 0}, 2),
                      {2, 4, 3, 5, 4, 2, 1, 3, 4, 6, 5, 4, 3, 2, 4, 0},
                      {2, 4, 3, 5, 6, 4, 1, 5, 3, 4, 2, 0}});
        case 4:
          return {0, 2, 4, 3, 5, 6, 4, 1, 5, 3, 4, 2, 0};
        case 5:
          return cat({{0},
                      rep({2, 4, 3, 1, 5, 4, 3, 2, 4, 6, 5, 4, 2, 3, 4, 1, 3, 0}, 2),
                      {2, 4, 5, 3, 4, 2, 6, 5, 4, 1, 3, 4, 5, 2, 4, 0},
                      {2, 4, 3, 5, 6, 4, 1, 5, 3, 4, 2, 0}});
        case 6:
          return cat({{0}, rep({2, 4, 3, 5, 4, 6, 2, 5, 4, 3, 1, 0}, 2),
                      {2, 4, 3, 5, 4, 2, 0}});
      }
      break;
    }
    case Type::E7: {
      switch (i) {
        case 1:
          return {0};
        case 2:
          return cat({{0},
                      {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5,
                       7, 6, 5, 4, 3, 2, 1, 4, 3, 5, 4, 2},
                      {0},
                      {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 7, 5, 6},
                      {0},
                      {1, 3, 4, 5, 2, 4, 3, 1},
                      {0}});
        case 3:
          return {0, 1, 3, 4, 5, 2, 6, 4, 7, 5, 3, 6, 4, 5, 2, 4, 3, 1, 0};
        case 4:
          return cat({{0},
                      {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 3, 2, 4, 7,
                       6, 5, 4, 2, 3, 4, 1, 3},
                      {0},
                      {1, 3, 4, 5, 2, 6, 4, 7, 5, 3, 6, 4, 5, 2, 4, 3, 1},
                      {0}});
        case 5:
          return cat({{0},
                      {1, 3, 4, 5, 6, 7, 2, 4, 3, 5, 1, 4, 2, 6,
                       3, 4, 5, 6, 7, 4, 3, 1, 2, 4, 5, 3, 6, 4, 5},
                      {0},
                      {1, 3, 4, 5, 6, 7, 2, 4, 3, 5, 1, 4, 2, 6,
                       3, 4, 5, 6, 4, 3, 1, 2, 4, 5, 3, 4},
                      {0},
                      {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 3, 2, 4,
                       7, 6, 5, 4, 2, 3, 4, 1, 3},
                      {0},
                      {1, 3, 4, 5, 2, 6, 4, 7, 5, 3, 6, 4, 5, 2, 4, 3, 1},
                      {0}});
        case 6:
          return {0, 1, 3, 4, 5, 2, 4, 3, 1, 0};
        case 7:
          return cat({{0},
                      {1, 3, 4, 2, 5, 6, 4, 5, 3, 4, 1, 2, 3, 4, 5, 6},
                      {0},
                      {1, 3, 4, 5, 2, 4, 3, 1},
                      {0}});
      }
      break;
    }
    case Type::E8: {
      const Word a = {8, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 8};
      const Word b = {8, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 1, 3, 4, 5, 2,
                      6, 4, 7, 5, 3, 6, 4, 5, 2, 4, 3, 1};
      const Word c = {8, 7, 6, 5, 4, 2, 3, 4, 1, 3, 5, 6, 7, 8, 4, 5, 6, 7,
                      2, 4, 3, 5, 1, 4, 2, 6, 3, 4, 5, 6, 7, 8, 4, 3, 1, 2,
                      4, 5, 3, 6, 4, 7, 5, 6};
      const Word d = {8, 7, 6, 5, 4, 3, 2, 1, 4, 3, 5, 4, 6, 7, 8, 5, 6, 7,
                      2, 4, 5, 6, 3, 4, 2, 5, 4, 1, 3, 4, 5, 2, 6, 4, 7, 5,
                      8, 6, 7};
      const Word e = {8, 7, 6, 5, 4, 2, 3, 4, 1, 5, 3, 6, 4, 7, 5, 2, 6, 4,
                      5, 3, 4, 1, 3, 2, 4, 5, 6, 7, 8};
      switch (i) {
        case 1:
          return cat({{0}, a, {0}});
        case 2:
          return cat({{0}, b, {0}, a, {0}});
        case 3:
          return cat({{0},
                      {8, 7, 6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3,
                       1, 7, 6, 5, 4, 2, 3, 4, 5, 8, 7, 6, 5, 4, 3, 2, 1,
                       4, 3, 5, 4, 2},
                      {0}, b, {0}, a, {0}});
        case 4:
          return cat({{0},
                      {8, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 8, 1, 3, 4, 2, 5,
                       4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7, 8, 6, 5, 4, 2,
                       3, 4, 5, 6, 7, 1, 3, 4, 5, 2, 6, 4, 5},
                      {0}, c, {0}, d, {0}, e, {0}});
        case 5:
          return cat({{0}, c, {0}, d, {0}, e, {0}});
        case 6:
          return cat({{0}, d, {0}, e, {0}});
        case 7:
          return cat({{0}, e, {0}});
        case 8:
          return {0};
      }
      break;
    }
    case Type::F4: {
      switch (i) {
        case 1:
          return {0};
        case 2:
          return {0, 1, 2, 3, 4, 2, 3, 2, 1, 0};
        case 3:
          return {0, 1, 2, 3, 2, 1, 4, 3, 2, 3, 1, 2, 0, 1, 2, 3, 4, 2, 3, 2, 1, 0};
        case 4:
          return {0, 1, 2, 3, 2, 1, 0};
      }
      break;
    }
    case Type::G2: {
      switch (i) {
        case 1:
          return {0, 2, 1, 2, 0};
        case 2:
          return {0};
      }
      break;
    }
    default:
      break;
  }
  throw std::logic_error("no tail table entry");
}

}  // namespace

QVec distinguished_coroot(const RootSystem& rs, int i) {
  check_index(rs, i);
  switch (rs.type()) {
    case Type::B:
    case Type::C:
    case Type::D:
      return coroot_classical(rs, i);
    case Type::G2:
      if (i == 1) return qvec_of({Rational(2), Rational(1)});
      return qvec_of({Rational(1), Rational(2, 3)});
    case Type::E6:
    case Type::E7:
    case Type::E8:
    case Type::F4: {
      const auto& row = exceptional_coroots(rs.type())[i - 1];
      QVec c(row.size());
      for (size_t k = 0; k < row.size(); ++k) c[k] = Rational(row[k]);
      return c;
    }
    case Type::A:
      throw std::invalid_argument("no tabulated translations for type A");
  }
  throw std::logic_error("bad type");
}

Word tail_word(const RootSystem& rs, int i) {
  check_index(rs, i);
  switch (rs.type()) {
    case Type::B:
    case Type::C:
    case Type::D:
      return tail_classical(rs, i);
    case Type::A:
      throw std::invalid_argument("no tabulated translations for type A");
    default:
      return tail_exceptional(rs.type(), i);
  }
}

Word distinguished_word(const RootSystem& rs, int i) {
  Word w = quotient_word(rs, i);
  Word t = tail_word(rs, i);
  w.insert(w.end(), t.begin(), t.end());
  return w;
}

Word period_word(const RootSystem& rs, int i, const Word& u, const Word& v) {
  Word w = v;
  Word t = tail_word(rs, i);
  w.insert(w.end(), t.begin(), t.end());
  w.insert(w.end(), u.begin(), u.end());
  return w;
}

Report verify_translation_identity(const RootSystem& rs, int i, int depth) {
  Report rep;
  std::string tag = system_tag(rs.type(), rs.rank()) + ".i" + std::to_string(i);
  Word w = distinguished_word(rs, i);
  AffineElement t = AffineElement::translation(rs, distinguished_coroot(rs, i));
  int bad = first_non_reduced_prefix(rs, w);
  rep.add(tag + ".reduced", bad == -1, "reduced", bad == -1 ? "reduced" : "not reduced",
          bad == -1 ? "" : "first failing prefix length " + std::to_string(bad + 1));
  AffineElement got = evaluate(rs, w);
  rep.add(tag + ".translation", got == t, t.str(), got.str());
  bool straight = t.is_straight_up_to(rs, depth);
  rep.add(tag + ".straight", straight, "straight to depth " + std::to_string(depth),
          straight ? "" : "length defect found");
  return rep;
}

Report verify_minimal_instance(const RootSystem& rs, int i, const Word& u, const Word& v,
                               int depth) {
  Report rep;
  std::string tag = system_tag(rs.type(), rs.rank()) + ".i" + std::to_string(i) +
                    ".u=" + word_str(u);
  Word p = period_word(rs, i, u, v);
  int bad = first_non_reduced_prefix(rs, p);
  rep.add(tag + ".reduced", bad == -1, "reduced", bad == -1 ? "reduced" : "not reduced",
          bad == -1 ? "" : "first failing prefix length " + std::to_string(bad + 1));

  AffineElement ue = evaluate(rs, u);
  AffineElement uinv = ue.inverse(rs);
  AffineElement t = AffineElement::translation(rs, distinguished_coroot(rs, i));
  AffineElement expect = uinv.multiply(rs, t).multiply(rs, ue);
  AffineElement pe = evaluate(rs, p);
  rep.add(tag + ".conjugate", pe == expect, expect.str(), pe.str());

  std::vector<int> M1;
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != i) M1.push_back(j);
  RootSet target = standard_biclosed(rs, uinv, M1, {});

  bool straight = true, inside = true, additive = true;
  AffineElement power = AffineElement::identity(rs);
  for (int k = 1; k <= depth; ++k) {
    power = power.multiply(rs, pe);
    long long len = power.length(rs);
    straight = straight && len == static_cast<long long>(k) * static_cast<long long>(p.size());
    additive = additive && len == static_cast<long long>(k * p.size());
    for (const AffineRoot& r : power.inversion_set(rs))
      if (!hat_contains(rs, target, r)) { inside = false; break; }
    if (!straight || !inside) break;
  }
  rep.add(tag + ".straight", straight, "straight to depth " + std::to_string(depth));
  rep.add(tag + ".inversions_in_hat", inside, "contained");
  rep.add(tag + ".length_additive", additive, "additive");
  return rep;
}

long long count_minimal_formula(const RootSystem& rs) {
  long long total = 0;
  long long order = rs.group_order();
  for (int i = 1; i <= rs.rank(); ++i) {
    std::vector<int> J;
    for (int j = 1; j <= rs.rank(); ++j)
      if (j != i) J.push_back(j);
    long long po = rs.parabolic_order(J);
    if (order % po != 0) throw std::logic_error("parabolic order does not divide group order");
    total += order / po;
  }
  return total;
}

std::vector<AffineElement> enumerate_weyl_group(const RootSystem& rs) {
  std::set<AffineElement> seen;
  std::vector<AffineElement> out{AffineElement::identity(rs)};
  seen.insert(out[0]);
  for (size_t k = 0; k < out.size(); ++k) {
    AffineElement w = out[k];
    for (int j = 1; j <= rs.rank(); ++j) {
      AffineElement nb = w.multiply(rs, AffineElement::simple_reflection(rs, j));
      if (seen.insert(nb).second) out.push_back(nb);
    }
  }
  return out;
}

std::vector<MinimalTarget> enumerate_minimal_targets(const RootSystem& rs) {
  std::vector<int> all;
  for (int j = 1; j <= rs.rank(); ++j) all.push_back(j);
  std::set<RootSet> seen;
  std::vector<MinimalTarget> out;
  for (const AffineElement& w : enumerate_weyl_group(rs)) {
    for (int i = 1; i <= rs.rank(); ++i) {
      std::vector<int> M1;
      for (int j = 1; j <= rs.rank(); ++j)
        if (j != i) M1.push_back(j);
      RootSet s = standard_biclosed(rs, w, M1, {});
      if (seen.insert(s).second) out.push_back({s, i, coset_min_rep(rs, w, M1)});
    }
  }
  return out;
}

long long count_minimal_bruteforce(const RootSystem& rs) {
  return static_cast<long long>(enumerate_minimal_targets(rs).size());
}

}  // namespace affweyl
