#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "affine.hpp"

namespace affweyl {

// Subsets of the finite root ensemble as bitsets indexed by root index.
struct RootSet {
  std::vector<uint64_t> bits;
  explicit RootSet(int nroots = 0) : bits((nroots + 63) / 64, 0) {}
  bool test(int i) const { return bits[i >> 6] >> (i & 63) & 1; }
  void set(int i) { bits[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { bits[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool contains(const RootSet& o) const {
    for (size_t k = 0; k < bits.size(); ++k)
      if (o.bits[k] & ~bits[k]) return false;
    return true;
  }
  bool empty() const {
    for (uint64_t b : bits)
      if (b) return false;
    return true;
  }
  int count() const;
  friend bool operator==(const RootSet& a, const RootSet& b) { return a.bits == b.bits; }
  friend bool operator<(const RootSet& a, const RootSet& b) { return a.bits < b.bits; }
};

// Closure structure on a finite root system: for every pair of roots, the
// set of roots expressible as a nonnegative rational combination of the
// two. A set is closed when it contains every such combination of its
// members, biclosed (in an ambient set) when its relative complement is
// closed too.
class ClosureTable {
public:
  explicit ClosureTable(const RootSystem& rs);

  const RootSystem& system() const { return rs_; }
  RootSet full() const;
  RootSet positive() const;

  bool is_closed(const RootSet& s) const;
  bool is_biclosed(const RootSet& s, const RootSet& ambient) const;

  // Minimal nonempty biclosed subsets of the whole root ensemble, found by
  // exhaustive enumeration (only feasible while |roots| <= 24).
  std::vector<RootSet> atoms_bruteforce() const;
  std::vector<RootSet> enumerate_biclosed() const;
  bool is_atom(const RootSet& s) const;

private:
  const RootSystem& rs_;
  std::vector<std::vector<RootSet>> combo_;  // [i][j] -> combinations
};

// w(Phi+ \ Phi_{M1}) union w(Phi_{M2}) as a set of root indices; M1, M2
// are disjoint sets of simple-root indices with (beta_i, beta_j) = 0
// across the pair.
RootSet standard_biclosed(const RootSystem& rs, const AffineElement& w,
                          const std::vector<int>& M1, const std::vector<int>& M2);

std::vector<int> rootset_indices(const RootSet& s, const RootSystem& rs);

// Membership of an affine root in the hat-lift of a set of finite roots:
// levels >= 0 for alpha positive, >= 1 for alpha negative.
bool hat_contains(const RootSystem& rs, const RootSet& finite_part, const AffineRoot& r);

// Dot action of g on a set of affine roots:
//   g . B = (N(g) \ g(-B)) union (g(B) \ -N(g))
// with N(g) the inversion set; satisfies u . N(v) = N(uv).
std::set<AffineRoot> dot_action(const RootSystem& rs, const AffineElement& g,
                                const std::set<AffineRoot>& B);

}  // namespace affweyl
