#pragma once

#include <string>
#include <vector>

#include "rootsys.hpp"

namespace affweyl {

// Affine root alpha + level*delta with alpha a (finite) root.
struct AffineRoot {
  IVec alpha;
  int level;
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.level == b.level && a.alpha == b.alpha;
  }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.alpha < b.alpha;
  }
  AffineRoot negated() const {
    IVec m(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) m[i] = -alpha[i];
    return {m, -level};
  }
};

// Element of the affine Weyl group in normal form w * t_mu: the finite
// part w is stored by the images of the simple roots (columns), and the
// action on the root lattice plus delta-levels is
//   g(alpha + m*delta) = w(alpha) + (m + (alpha, mu)) * delta.
// Composition and inverse follow from w_g t_mu(g) * w_h t_mu(h) =
// (w_g w_h) t_{w_h^-1 mu(g) + mu(h)}.
class AffineElement {
public:
  static AffineElement identity(const RootSystem& rs);
  // Generator s_i; index 0 is s_{delta - rho} with rho the highest root.
  static AffineElement simple_reflection(const RootSystem& rs, int i);
  // Pure translation t_lambda; lambda must pair integrally with all roots.
  static AffineElement translation(const RootSystem& rs, const QVec& lambda);

  const std::vector<IVec>& matrix() const { return mat_; }
  const QVec& trans() const { return trans_; }

  IVec apply_finite(const RootSystem& rs, const IVec& v) const;
  QVec apply_finite(const RootSystem& rs, const QVec& v) const;
  AffineRoot act(const RootSystem& rs, const AffineRoot& r) const;

  AffineElement multiply(const RootSystem& rs, const AffineElement& o) const;
  AffineElement inverse(const RootSystem& rs) const;

  bool is_identity() const;
  bool is_finite() const;  // trivial translation part

  // Inversion set: the positive affine roots sent to negatives.
  std::vector<AffineRoot> inversion_set(const RootSystem& rs) const;
  long long length(const RootSystem& rs) const;

  // ell(g^k) == k*ell(g) for k = 1..max_power.
  bool is_straight_up_to(const RootSystem& rs, int max_power) const;

  // "(col_1 ... col_n | mu)" with integer columns and exact rationals.
  std::string str() const;

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.mat_ == b.mat_ && a.trans_ == b.trans_;
  }
  friend bool operator!=(const AffineElement& a, const AffineElement& b) { return !(a == b); }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    if (a.mat_ != b.mat_) return a.mat_ < b.mat_;
    for (size_t i = 0; i < a.trans_.size(); ++i) {
      if (a.trans_[i] != b.trans_[i]) return a.trans_[i] < b.trans_[i];
    }
    return false;
  }

private:
  // For a fixed finite root alpha, the levels m with (alpha, m) in the
  // inversion set form an interval [mmin, mmax]; length() counts the
  // intervals without materializing them.
  void inversion_bounds(const RootSystem& rs, const AffineElement& inv, int root_idx,
                        long long& mmin, long long& mmax) const;

  std::vector<IVec> mat_;   // images of simple roots under w
  std::vector<IVec> imat_;  // images of simple roots under w^-1
  QVec trans_;
};

}  // namespace affweyl
