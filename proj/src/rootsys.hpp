#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace affweyl {

enum class Type { A, B, C, D, E6, E7, E8, F4, G2 };

Type parse_type(const std::string& s);           // "A".."D","E6","E7","E8","F4","G2"
std::string type_name(Type t);
// Display tag "C3", "E8", ... (rank appended only for variable-rank types).
std::string system_tag(Type t, int rank);

// Crystallographic root system in the basis of simple roots beta_1..beta_n.
// Roots are integer coordinate vectors; the bilinear form is the rational
// Gram matrix of the standard realization (long roots of the classical
// families normalized as in the tables below, so coordinates stay integral
// and coroots stay rational).
class RootSystem {
public:
  static RootSystem build(Type type, int rank);

  Type type() const { return type_; }
  int rank() const { return rank_; }
  int num_positive() const { return npos_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }

  // Roots indexed 0..num_roots()-1; positives come first, sorted by
  // (height, lexicographic); root_index(root) inverts this.
  const IVec& root(int idx) const { return roots_[idx]; }
  const std::vector<IVec>& roots() const { return roots_; }
  int root_index(const IVec& r) const;
  bool is_root(const IVec& r) const { return index_.count(r) != 0; }
  bool is_positive(int idx) const { return idx < npos_; }
  int negate(int idx) const { return neg_of_[idx]; }

  const IVec& highest_root() const { return highest_; }
  const IVec& simple_root(int i) const;  // i in 1..rank
  QVec simple_coroot(int i) const;       // 2*beta_i/(beta_i,beta_i)
  QVec coroot(const IVec& root) const;

  Rational inner(const QVec& a, const QVec& b) const;
  Rational inner(const IVec& a, const IVec& b) const { return inner(to_qvec(a), to_qvec(b)); }
  Rational inner(const IVec& a, const QVec& b) const { return inner(to_qvec(a), b); }
  Rational norm(const IVec& a) const { return inner(a, a); }

  // Reflection in `root` applied to v: v - 2(v,root)/(root,root) * root.
  IVec reflect(const IVec& root, const IVec& v) const;
  QVec reflect(const IVec& root, const QVec& v) const;

  // Cartan integer 2(beta_i,beta_j)/(beta_j,beta_j), 1-based.
  int cartan(int i, int j) const;

  // Coxeter matrix of the finite system (1-based, m[i][i]=1) or of the
  // affine system with node 0 = s_{delta-rho} prepended (0-based then).
  std::vector<std::vector<int>> coxeter_matrix() const;
  std::vector<std::vector<int>> affine_coxeter_matrix() const;

  long long group_order() const;                 // |W|
  long long parabolic_order(const std::vector<int>& subset) const;  // |W_J|

  // Indices (into roots()) of the subsystem generated by the simple roots
  // in J (1-based): roots supported on J.
  std::vector<int> subsystem(const std::vector<int>& J) const;

private:
  Type type_;
  int rank_;
  std::vector<QVec> gram_;
  std::vector<IVec> roots_;
  int npos_;
  std::map<IVec, int> index_;
  std::vector<int> neg_of_;
  IVec highest_;
};

// Connected-component classification of Coxeter graphs given as a Coxeter
// matrix (m[i][j] = order of s_i s_j, -1 for infinity). Used both for
// parabolic orders and for the word-hyperbolicity criterion.
struct CoxeterGraph {
  std::vector<std::vector<int>> m;  // symmetric, m[i][i]=1
  int size() const { return static_cast<int>(m.size()); }
  std::vector<std::vector<int>> components() const;
  CoxeterGraph induced(const std::vector<int>& nodes) const;
};

// Order of the finite Coxeter group of a *connected* graph, or nullopt if
// the group is infinite.
std::optional<long long> finite_group_order(const CoxeterGraph& g);
// True iff the *connected* graph is of affine type.
bool is_affine_diagram(const CoxeterGraph& g);
bool is_finite_diagram(const CoxeterGraph& g);

// Moussong's criterion for word hyperbolicity of a Coxeter group:
// hyperbolic iff no subset of generators induces an affine graph of rank
// >= 3, and no pair of disjoint, mutually commuting subsets each generates
// an infinite group.
bool is_word_hyperbolic(const CoxeterGraph& g);

}  // namespace affweyl
