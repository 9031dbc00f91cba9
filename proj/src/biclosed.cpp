#include "biclosed.hpp"

#include <algorithm>
#include <stdexcept>

namespace affweyl {

int RootSet::count() const {
  int c = 0;
  for (uint64_t b : bits) c += __builtin_popcountll(b);
  return c;
}

namespace {

// Roots gamma = k1*a + k2*b with k1, k2 >= 0 rational.
RootSet nonneg_combinations(const RootSystem& rs, int ia, int ib) {
  const IVec& a = rs.root(ia);
  const IVec& b = rs.root(ib);
  int n = rs.rank();
  RootSet out(rs.num_roots());

  // Pick two coordinates where (a, b) has rank 2, if any.
  int p = -1, q = -1;
  for (int i = 0; i < n && p == -1; ++i)
    for (int j = i + 1; j < n && p == -1; ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) { p = i; q = j; }

  if (p == -1) {
    // Parallel roots: in a reduced system b = a or b = -a, and the
    // nonnegative span meets the root set in {a, b} or {a, -a}.
    out.set(ia);
    out.set(ib);
    return out;
  }

  long long det = static_cast<long long>(a[p]) * b[q] - static_cast<long long>(a[q]) * b[p];
  for (int ig = 0; ig < rs.num_roots(); ++ig) {
    const IVec& g = rs.root(ig);
    // Solve k1*a + k2*b = g on coordinates p, q by Cramer's rule.
    Rational k1 = Rational(static_cast<long long>(g[p]) * b[q] -
                           static_cast<long long>(g[q]) * b[p], det);
    Rational k2 = Rational(static_cast<long long>(a[p]) * g[q] -
                           static_cast<long long>(a[q]) * g[p], det);
    if (k1 < Rational(0) || k2 < Rational(0)) continue;
    bool fits = true;
    for (int i = 0; i < n; ++i)
      if (k1 * Rational(a[i]) + k2 * Rational(b[i]) != Rational(g[i])) { fits = false; break; }
    if (fits) out.set(ig);
  }
  return out;
}

}  // namespace

ClosureTable::ClosureTable(const RootSystem& rs) : rs_(rs) {
  int nr = rs.num_roots();
  combo_.assign(nr, std::vector<RootSet>(nr, RootSet(nr)));
  for (int i = 0; i < nr; ++i)
    for (int j = i; j < nr; ++j) {
      combo_[i][j] = nonneg_combinations(rs, i, j);
      combo_[j][i] = combo_[i][j];
    }
}

RootSet ClosureTable::full() const {
  RootSet s(rs_.num_roots());
  for (int i = 0; i < rs_.num_roots(); ++i) s.set(i);
  return s;
}

RootSet ClosureTable::positive() const {
  RootSet s(rs_.num_roots());
  for (int i = 0; i < rs_.num_positive(); ++i) s.set(i);
  return s;
}

bool ClosureTable::is_closed(const RootSet& s) const {
  std::vector<int> members = rootset_indices(s, rs_);
  for (size_t x = 0; x < members.size(); ++x)
    for (size_t y = x; y < members.size(); ++y)
      if (!s.contains(combo_[members[x]][members[y]])) return false;
  return true;
}

bool ClosureTable::is_biclosed(const RootSet& s, const RootSet& ambient) const {
  if (!ambient.contains(s)) return false;
  RootSet rest = ambient;
  for (size_t k = 0; k < rest.bits.size(); ++k) rest.bits[k] &= ~s.bits[k];
  return is_closed(s) && is_closed(rest);
}

std::vector<RootSet> ClosureTable::enumerate_biclosed() const {
  int nr = rs_.num_roots();
  if (nr > 24) throw std::invalid_argument("root set too large for exhaustive enumeration");
  RootSet amb = full();
  std::vector<RootSet> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << nr); ++mask) {
    RootSet s(nr);
    s.bits[0] = mask;
    if (is_biclosed(s, amb)) out.push_back(s);
  }
  return out;
}

std::vector<RootSet> ClosureTable::atoms_bruteforce() const {
  std::vector<RootSet> bic = enumerate_biclosed();
  std::vector<RootSet> atoms;
  for (const RootSet& s : bic) {
    if (s.empty()) continue;
    bool minimal = true;
    for (const RootSet& t : bic) {
      if (t.empty() || t == s) continue;
      if (s.contains(t)) { minimal = false; break; }
    }
    if (minimal) atoms.push_back(s);
  }
  return atoms;
}

bool ClosureTable::is_atom(const RootSet& s) const {
  if (s.empty()) return false;
  if (!is_biclosed(s, full())) return false;
  std::vector<int> members = rootset_indices(s, rs_);
  int k = static_cast<int>(members.size());
  if (k > 24) throw std::invalid_argument("set too large for exhaustive atom check");
  for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << k); ++mask) {
    RootSet sub(rs_.num_roots());
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) sub.set(members[i]);
    if (is_biclosed(sub, full())) return false;
  }
  return true;
}

RootSet standard_biclosed(const RootSystem& rs, const AffineElement& w,
                          const std::vector<int>& M1, const std::vector<int>& M2) {
  for (int i : M1)
    for (int j : M2) {
      if (i == j) throw std::invalid_argument("M1 and M2 must be disjoint");
      if (!rs.inner(rs.simple_root(i), rs.simple_root(j)).is_zero())
        throw std::invalid_argument("M1 and M2 must be orthogonal");
    }
  RootSet out(rs.num_roots());
  std::vector<char> drop(rs.num_roots(), 0);
  for (int idx : rs.subsystem(M1)) drop[idx] = 1;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    if (drop[idx]) continue;
    out.set(rs.root_index(w.apply_finite(rs, rs.root(idx))));
  }
  for (int idx : rs.subsystem(M2))
    out.set(rs.root_index(w.apply_finite(rs, rs.root(idx))));
  return out;
}

std::vector<int> rootset_indices(const RootSet& s, const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 0; i < rs.num_roots(); ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

bool hat_contains(const RootSystem& rs, const RootSet& finite_part, const AffineRoot& r) {
  if (!rs.is_root(r.alpha)) return false;
  int idx = rs.root_index(r.alpha);
  if (!finite_part.test(idx)) return false;
  return r.level >= (rs.is_positive(idx) ? 0 : 1);
}

std::set<AffineRoot> dot_action(const RootSystem& rs, const AffineElement& g,
                                const std::set<AffineRoot>& B) {
  std::vector<AffineRoot> ninv = g.inversion_set(rs);
  std::set<AffineRoot> N(ninv.begin(), ninv.end());
  std::set<AffineRoot> gmB, gB, negN;
  for (const AffineRoot& r : B) {
    gmB.insert(g.act(rs, r.negated()));
    gB.insert(g.act(rs, r));
  }
  for (const AffineRoot& r : N) negN.insert(r.negated());
  std::set<AffineRoot> out;
  for (const AffineRoot& r : N)
    if (!gmB.count(r)) out.insert(r);
  for (const AffineRoot& r : gB)
    if (!negN.count(r)) out.insert(r);
  return out;
}

}  // namespace affweyl
