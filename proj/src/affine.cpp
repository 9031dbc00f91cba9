#include "affine.hpp"

#include <stdexcept>

namespace affweyl {

namespace {

IVec apply_cols(const std::vector<IVec>& cols, const IVec& v) {
  int n = static_cast<int>(cols.size());
  IVec out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += v[j] * cols[j][i];
  }
  return out;
}

QVec apply_cols(const std::vector<IVec>& cols, const QVec& v) {
  int n = static_cast<int>(cols.size());
  QVec out(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < n; ++i) out[i] += v[j] * Rational(cols[j][i]);
  }
  return out;
}

}  // namespace

AffineElement AffineElement::identity(const RootSystem& rs) {
  AffineElement e;
  int n = rs.rank();
  e.mat_.assign(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) e.mat_[i][i] = 1;
  e.imat_ = e.mat_;
  e.trans_.assign(n, Rational(0));
  return e;
}

AffineElement AffineElement::simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank())
    throw std::invalid_argument("generator index out of range");
  AffineElement e = identity(rs);
  const IVec& root = (i == 0) ? rs.highest_root() : rs.simple_root(i);
  for (int j = 1; j <= rs.rank(); ++j) {
    e.mat_[j - 1] = rs.reflect(root, rs.simple_root(j));
  }
  e.imat_ = e.mat_;  // reflections are involutions
  if (i == 0) {
    // s_{delta-rho} = s_rho * t_{rho_vee}.
    e.trans_ = rs.coroot(rs.highest_root());
  }
  return e;
}

AffineElement AffineElement::translation(const RootSystem& rs, const QVec& lambda) {
  AffineElement e = identity(rs);
  for (int j = 1; j <= rs.rank(); ++j) {
    Rational p = rs.inner(rs.simple_root(j), lambda);
    if (!p.is_integer())
      throw std::invalid_argument("translation vector pairs non-integrally with roots");
  }
  e.trans_ = lambda;
  return e;
}

IVec AffineElement::apply_finite(const RootSystem&, const IVec& v) const {
  return apply_cols(mat_, v);
}

QVec AffineElement::apply_finite(const RootSystem&, const QVec& v) const {
  return apply_cols(mat_, v);
}

AffineRoot AffineElement::act(const RootSystem& rs, const AffineRoot& r) const {
  Rational p = rs.inner(r.alpha, trans_);
  return {apply_cols(mat_, r.alpha), r.level + static_cast<int>(p.as_integer())};
}

AffineElement AffineElement::multiply(const RootSystem& rs, const AffineElement& o) const {
  AffineElement out;
  int n = rs.rank();
  out.mat_.resize(n);
  out.imat_.resize(n);
  for (int j = 0; j < n; ++j) {
    out.mat_[j] = apply_cols(mat_, o.mat_[j]);
    out.imat_[j] = apply_cols(o.imat_, imat_[j]);
  }
  out.trans_ = apply_cols(o.imat_, trans_);
  for (int i = 0; i < n; ++i) out.trans_[i] += o.trans_[i];
  return out;
}

AffineElement AffineElement::inverse(const RootSystem&) const {
  AffineElement out;
  out.mat_ = imat_;
  out.imat_ = mat_;
  QVec t = apply_cols(mat_, trans_);
  out.trans_.resize(t.size());
  for (size_t i = 0; i < t.size(); ++i) out.trans_[i] = -t[i];
  return out;
}

bool AffineElement::is_identity() const {
  if (!is_finite()) return false;
  for (size_t j = 0; j < mat_.size(); ++j)
    for (size_t i = 0; i < mat_.size(); ++i)
      if (mat_[j][i] != (i == j ? 1 : 0)) return false;
  return true;
}

bool AffineElement::is_finite() const {
  for (const Rational& c : trans_)
    if (!c.is_zero()) return false;
  return true;
}

void AffineElement::inversion_bounds(const RootSystem& rs, const AffineElement& inv,
                                     int root_idx, long long& mmin, long long& mmax) const {
  // (alpha, m) lies in the inversion set iff g^-1 sends it to a negative
  // affine root, i.e. m + (alpha, mu') < 0, or == 0 with w'(alpha)
  // negative, where g^-1 = w' t_mu'.
  const IVec& alpha = rs.root(root_idx);
  long long c = rs.inner(alpha, inv.trans_).as_integer();
  IVec img = apply_cols(inv.mat_, alpha);
  bool img_negative = !rs.is_positive(rs.root_index(img));
  mmin = rs.is_positive(root_idx) ? 0 : 1;
  mmax = img_negative ? -c : -c - 1;
}

std::vector<AffineRoot> AffineElement::inversion_set(const RootSystem& rs) const {
  AffineElement inv = inverse(rs);
  std::vector<AffineRoot> out;
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    long long mmin, mmax;
    inversion_bounds(rs, inv, idx, mmin, mmax);
    for (long long m = mmin; m <= mmax; ++m)
      out.push_back({rs.root(idx), static_cast<int>(m)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long AffineElement::length(const RootSystem& rs) const {
  AffineElement inv = inverse(rs);
  long long total = 0;
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    long long mmin, mmax;
    inversion_bounds(rs, inv, idx, mmin, mmax);
    if (mmax >= mmin) total += mmax - mmin + 1;
  }
  return total;
}

bool AffineElement::is_straight_up_to(const RootSystem& rs, int max_power) const {
  long long l1 = length(rs);
  AffineElement p = *this;
  for (int k = 2; k <= max_power; ++k) {
    p = p.multiply(rs, *this);
    if (p.length(rs) != k * l1) return false;
  }
  return true;
}

std::string AffineElement::str() const {
  std::string s = "(";
  for (size_t j = 0; j < mat_.size(); ++j) {
    if (j) s += " ";
    s += "[";
    for (size_t i = 0; i < mat_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(mat_[j][i]);
    }
    s += "]";
  }
  s += " | ";
  for (size_t i = 0; i < trans_.size(); ++i) {
    if (i) s += ",";
    s += trans_[i].str();
  }
  s += ")";
  return s;
}

}  // namespace affweyl
