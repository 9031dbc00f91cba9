#include "rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affweyl {

Type parse_type(const std::string& s) {
  if (s == "A") return Type::A;
  if (s == "B") return Type::B;
  if (s == "C") return Type::C;
  if (s == "D") return Type::D;
  if (s == "E6") return Type::E6;
  if (s == "E7") return Type::E7;
  if (s == "E8") return Type::E8;
  if (s == "F4") return Type::F4;
  if (s == "G2") return Type::G2;
  throw std::invalid_argument("unknown type: " + s);
}

std::string type_name(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
    case Type::E6: return "E6";
    case Type::E7: return "E7";
    case Type::E8: return "E8";
    case Type::F4: return "F4";
    case Type::G2: return "G2";
  }
  throw std::logic_error("bad type");
}

std::string system_tag(Type t, int rank) {
  std::string n = type_name(t);
  if (n.size() == 1) n += std::to_string(rank);
  return n;
}

namespace {

int fixed_rank(Type t) {
  switch (t) {
    case Type::E6: return 6;
    case Type::E7: return 7;
    case Type::E8: return 8;
    case Type::F4: return 4;
    case Type::G2: return 2;
    default: return 0;
  }
}

// Gram matrix of the simple roots. Normalizations follow the standard
// epsilon-realizations with short roots of C/D/E of norm 1, so that all
// root coordinates are integers and all pairings rational.
std::vector<QVec> make_gram(Type t, int n) {
  std::vector<QVec> g(n, QVec(n, Rational(0)));
  auto sym = [&](int i, int j, Rational v) { g[i][j] = v; g[j][i] = v; };
  switch (t) {
    case Type::A:
      for (int i = 0; i < n; ++i) g[i][i] = Rational(2);
      for (int i = 0; i + 1 < n; ++i) sym(i, i + 1, Rational(-1));
      break;
    case Type::B:  // beta_n short
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? Rational(1) : Rational(2);
      for (int i = 0; i + 1 < n; ++i) sym(i, i + 1, Rational(-1));
      break;
    case Type::C:  // beta_n long
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? Rational(2) : Rational(1);
      for (int i = 0; i + 1 < n; ++i)
        sym(i, i + 1, (i + 2 == n) ? Rational(-1) : Rational(-1, 2));
      break;
    case Type::D:
      for (int i = 0; i < n; ++i) g[i][i] = Rational(1);
      for (int i = 0; i + 2 < n; ++i) sym(i, i + 1, Rational(-1, 2));
      sym(n - 3, n - 1, Rational(-1, 2));
      break;
    case Type::E6:
    case Type::E7:
    case Type::E8: {
      for (int i = 0; i < n; ++i) g[i][i] = Rational(1);
      sym(0, 2, Rational(-1, 2));  // 1-3
      sym(1, 3, Rational(-1, 2));  // 2-4
      for (int i = 2; i + 1 < n; ++i) sym(i, i + 1, Rational(-1, 2));  // 3-4-...-n
      break;
    }
    case Type::F4:
      g[0][0] = Rational(2); g[1][1] = Rational(2);
      g[2][2] = Rational(1); g[3][3] = Rational(1);
      sym(0, 1, Rational(-1));
      sym(1, 2, Rational(-1));
      sym(2, 3, Rational(-1, 2));
      break;
    case Type::G2:
      g[0][0] = Rational(2); g[1][1] = Rational(6);
      sym(0, 1, Rational(-3));
      break;
  }
  return g;
}

int expected_positive_count(Type t, int n) {
  switch (t) {
    case Type::A: return n * (n + 1) / 2;
    case Type::B:
    case Type::C: return n * n;
    case Type::D: return n * (n - 1);
    case Type::E6: return 36;
    case Type::E7: return 63;
    case Type::E8: return 120;
    case Type::F4: return 24;
    case Type::G2: return 6;
  }
  throw std::logic_error("bad type");
}

int height(const IVec& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

}  // namespace

RootSystem RootSystem::build(Type type, int rank) {
  int fr = fixed_rank(type);
  if (fr != 0) {
    if (rank != 0 && rank != fr)
      throw std::invalid_argument("type " + type_name(type) + " has fixed rank");
    rank = fr;
  } else {
    int lo = (type == Type::A) ? 1 : (type == Type::D) ? 4 : 2;
    if (rank < lo)
      throw std::invalid_argument("rank " + std::to_string(rank) +
                                  " out of range for type " + type_name(type));
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = make_gram(type, rank);

  // Orbit closure of the simple roots under simple reflections.
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < rank; ++i) {
    IVec b(rank, 0);
    b[i] = 1;
    seen.insert(b);
    queue.push_back(b);
  }
  for (size_t k = 0; k < queue.size(); ++k) {
    IVec r = queue[k];
    for (int i = 1; i <= rank; ++i) {
      IVec b(rank, 0);
      b[i - 1] = 1;
      IVec img = rs.reflect(b, r);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }

  std::vector<IVec> pos;
  for (const IVec& r : seen) {
    bool nonneg = true;
    for (int c : r) nonneg = nonneg && c >= 0;
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const IVec& a, const IVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  if (static_cast<int>(pos.size()) != expected_positive_count(type, rank) ||
      seen.size() != 2 * pos.size())
    throw std::logic_error("root closure produced wrong count");

  rs.npos_ = static_cast<int>(pos.size());
  rs.roots_ = pos;
  for (const IVec& r : pos) {
    IVec m(rank);
    for (int i = 0; i < rank; ++i) m[i] = -r[i];
    rs.roots_.push_back(m);
  }
  for (size_t i = 0; i < rs.roots_.size(); ++i) rs.index_[rs.roots_[i]] = static_cast<int>(i);
  rs.neg_of_.resize(rs.roots_.size());
  for (int i = 0; i < rs.npos_; ++i) {
    rs.neg_of_[i] = i + rs.npos_;
    rs.neg_of_[i + rs.npos_] = i;
  }
  rs.highest_ = pos.back();
  return rs;
}

int RootSystem::root_index(const IVec& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) throw std::invalid_argument("not a root");
  return it->second;
}

const IVec& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
  IVec b(rank_, 0);
  b[i - 1] = 1;
  return roots_[root_index(b)];
}

QVec RootSystem::simple_coroot(int i) const {
  return coroot(simple_root(i));
}

QVec RootSystem::coroot(const IVec& root) const {
  Rational n = norm(root);
  QVec cv(rank_);
  for (int j = 0; j < rank_; ++j) cv[j] = Rational(2 * root[j]) / n;
  return cv;
}

Rational RootSystem::inner(const QVec& a, const QVec& b) const {
  if (a.size() != gram_.size() || b.size() != gram_.size())
    throw std::invalid_argument("vector size mismatch");
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j].is_zero()) continue;
      s += a[i] * gram_[i][j] * b[j];
    }
  }
  return s;
}

IVec RootSystem::reflect(const IVec& root, const IVec& v) const {
  Rational c = Rational(2) * inner(v, root) / norm(root);
  long long ci = c.as_integer();
  IVec out(v);
  for (int i = 0; i < rank_; ++i) out[i] -= static_cast<int>(ci) * root[i];
  return out;
}

QVec RootSystem::reflect(const IVec& root, const QVec& v) const {
  Rational c = Rational(2) * inner(to_qvec(root), v) / norm(root);
  QVec out(v);
  for (int i = 0; i < rank_; ++i) out[i] -= c * Rational(root[i]);
  return out;
}

int RootSystem::cartan(int i, int j) const {
  const IVec& bi = simple_root(i);
  const IVec& bj = simple_root(j);
  return static_cast<int>((Rational(2) * inner(bi, bj) / norm(bj)).as_integer());
}

namespace {

int bond_order(int product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    case 4: return -1;  // infinite
  }
  throw std::logic_error("non-crystallographic bond");
}

}  // namespace

std::vector<std::vector<int>> RootSystem::coxeter_matrix() const {
  std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_, 2));
  for (int i = 1; i <= rank_; ++i) {
    m[i - 1][i - 1] = 1;
    for (int j = i + 1; j <= rank_; ++j)
      m[i - 1][j - 1] = m[j - 1][i - 1] = bond_order(cartan(i, j) * cartan(j, i));
  }
  return m;
}

std::vector<std::vector<int>> RootSystem::affine_coxeter_matrix() const {
  int n = rank_;
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 2));
  auto fin = coxeter_matrix();
  for (int i = 0; i <= n; ++i) m[i][i] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i][j] = fin[i - 1][j - 1];
  // Node 0 corresponds to s_{delta - rho}; its finite part is -rho with
  // rho the highest root.
  for (int j = 1; j <= n; ++j) {
    Rational p = inner(highest_, simple_root(j));
    Rational prod = Rational(4) * p * p / (norm(highest_) * norm(simple_root(j)));
    m[0][j] = m[j][0] = bond_order(static_cast<int>(prod.as_integer()));
  }
  return m;
}

std::vector<std::vector<int>> CoxeterGraph::components() const {
  int n = size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s}, nodes;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && m[v][w] != 2 && comp[w] == -1) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(nodes);
  }
  return out;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<int>& nodes) const {
  CoxeterGraph g;
  int k = static_cast<int>(nodes.size());
  g.m.assign(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g.m[i][j] = m[nodes[i]][nodes[j]];
  return g;
}

namespace {

struct Edge { int a, b, label; };

std::vector<Edge> edges_of(const CoxeterGraph& g) {
  std::vector<Edge> e;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.m[i][j] != 2) e.push_back({i, j, g.m[i][j]});
  return e;
}

std::vector<int> degrees(const CoxeterGraph& g) {
  std::vector<int> d(g.size(), 0);
  for (const Edge& e : edges_of(g)) { d[e.a]++; d[e.b]++; }
  return d;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Walks a path graph starting from endpoint `start`, returning the edge
// labels in order. Degrees must all be <= 2.
std::vector<int> path_labels(const CoxeterGraph& g, int start) {
  std::vector<int> labels;
  int prev = -1, cur = start;
  for (;;) {
    int next = -1;
    for (int w = 0; w < g.size(); ++w)
      if (w != cur && w != prev && g.m[cur][w] != 2) next = w;
    if (next == -1) break;
    labels.push_back(g.m[cur][next]);
    prev = cur;
    cur = next;
  }
  return labels;
}

// Leg lengths from a branch node, each leg a chain of label-3 edges unless
// collect_labels is set. Returns sorted lengths, or nullopt if some leg is
// not a chain.
std::optional<std::vector<int>> leg_lengths(const CoxeterGraph& g, int center) {
  std::vector<int> lens;
  for (int w = 0; w < g.size(); ++w) {
    if (w == center || g.m[center][w] == 2) continue;
    int len = 1, prev = center, cur = w;
    for (;;) {
      int next = -1, fan = 0;
      for (int x = 0; x < g.size(); ++x)
        if (x != cur && x != prev && g.m[cur][x] != 2) { next = x; fan++; }
      if (fan > 1) return std::nullopt;
      if (next == -1) break;
      len++;
      prev = cur;
      cur = next;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

bool all_labels_3(const CoxeterGraph& g) {
  for (const Edge& e : edges_of(g))
    if (e.label != 3) return false;
  return true;
}

}  // namespace

std::optional<long long> finite_group_order(const CoxeterGraph& g) {
  int n = g.size();
  if (n == 0) return 1;
  if (n == 1) return 2;
  auto es = edges_of(g);
  if (n == 2) {
    if (es.empty()) return std::nullopt;  // not connected
    if (es[0].label == -1) return std::nullopt;
    return 2LL * es[0].label;
  }
  if (static_cast<int>(es.size()) != n - 1) return std::nullopt;  // cycle or disconnected
  for (const Edge& e : es)
    if (e.label == -1) return std::nullopt;
  auto deg = degrees(g);
  int branches = 0, branch_node = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 3) return std::nullopt;
    if (deg[v] == 3) { branches++; branch_node = v; }
  }
  if (branches == 0) {
    int end = 0;
    while (deg[end] != 1) end++;
    std::vector<int> labels = path_labels(g, end);
    std::vector<int> rev(labels.rbegin(), labels.rend());
    if (rev < labels) labels = rev;
    bool all3 = true;
    for (size_t i = 0; i + 1 < labels.size(); ++i) all3 = all3 && labels[i] == 3;
    if (all3 && labels.back() == 3) return factorial(n + 1);                 // A_n
    if (all3 && labels.back() == 4) return (1LL << n) * factorial(n);        // B_n
    if (all3 && labels.back() == 5 && n == 3) return 120;                    // H3
    if (all3 && labels.back() == 5 && n == 4) return 14400;                  // H4
    if (n == 4 && labels == std::vector<int>{3, 4, 3}) return 1152;          // F4
    return std::nullopt;
  }
  if (branches == 1 && all_labels_3(g)) {
    auto legs = leg_lengths(g, branch_node);
    if (!legs) return std::nullopt;
    const std::vector<int>& L = *legs;
    if (L[0] == 1 && L[1] == 1) return (1LL << (n - 1)) * factorial(n);      // D_n
    if (L == std::vector<int>{1, 2, 2}) return 51840;                        // E6
    if (L == std::vector<int>{1, 2, 3}) return 2903040;                      // E7
    if (L == std::vector<int>{1, 2, 4}) return 696729600;                    // E8
  }
  return std::nullopt;
}

bool is_finite_diagram(const CoxeterGraph& g) { return finite_group_order(g).has_value(); }

bool is_affine_diagram(const CoxeterGraph& g) {
  int n = g.size();
  if (n < 2) return false;
  auto es = edges_of(g);
  if (n == 2) return !es.empty() && es[0].label == -1;  // affine A1
  for (const Edge& e : es)
    if (e.label == -1) return false;
  auto deg = degrees(g);
  if (static_cast<int>(es.size()) == n) {
    // Cycle: affine A_{n-1}.
    for (int v = 0; v < n; ++v)
      if (deg[v] != 2) return false;
    return all_labels_3(g);
  }
  if (static_cast<int>(es.size()) != n - 1) return false;  // disconnected
  int branches3 = 0, branches4 = 0, branch_node = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 4) return false;
    if (deg[v] == 4) { branches4++; branch_node = v; }
    if (deg[v] == 3) { branches3++; }
  }
  if (branches4 == 1 && branches3 == 0) {
    // Affine D4: star with four label-3 legs of length one.
    auto legs = leg_lengths(g, branch_node);
    return n == 5 && all_labels_3(g) && legs && *legs == std::vector<int>{1, 1, 1, 1};
  }
  if (branches4 > 0) return false;
  if (branches3 == 0) {
    int end = 0;
    while (deg[end] != 1) end++;
    std::vector<int> labels = path_labels(g, end);
    std::vector<int> rev(labels.rbegin(), labels.rend());
    if (rev < labels) labels = rev;
    int c4 = 0, c6 = 0;
    for (int l : labels) { c4 += l == 4; c6 += l == 6; }
    if (c6 == 1 && n == 3 && (labels == std::vector<int>{3, 6} || labels == std::vector<int>{6, 3}))
      return true;                                                        // affine G2
    if (c6 > 0) return false;
    if (c4 == 2 && labels.front() == 4 && labels.back() == 4) {
      for (size_t i = 1; i + 1 < labels.size(); ++i)
        if (labels[i] != 3) return false;
      return true;                                                        // affine C_{n-1}
    }
    if (c4 == 1 && n == 5 && labels == std::vector<int>{3, 3, 4, 3}) return true;  // affine F4
    return false;
  }
  if (branches3 == 1) {
    for (int v = 0; v < n; ++v)
      if (deg[v] == 3) branch_node = v;
    auto legs = leg_lengths(g, branch_node);
    if (!legs) return false;
    const std::vector<int>& L = *legs;
    if (all_labels_3(g)) {
      if (L == std::vector<int>{2, 2, 2}) return true;   // affine E6
      if (L == std::vector<int>{1, 3, 3}) return true;   // affine E7
      if (L == std::vector<int>{1, 2, 5}) return true;   // affine E8
      return false;
    }
    // Affine B_{n-1}: label-3 fork at one end, single label-4 pendant edge
    // at the other end of the trunk.
    int c4 = 0;
    for (const Edge& e : es) {
      if (e.label == 4) {
        c4++;
        int leaf = (deg[e.a] == 1) ? e.a : (deg[e.b] == 1) ? e.b : -1;
        if (leaf == -1) return false;
      } else if (e.label != 3) {
        return false;
      }
    }
    return c4 == 1 && L[0] == 1 && L[1] == 1;
  }
  if (branches3 == 2 && all_labels_3(g)) {
    // Affine D_{n-1}: two label-3 forks joined by a trunk.
    int leaves = 0;
    for (int v = 0; v < n; ++v) leaves += deg[v] == 1;
    if (leaves != 4) return false;
    for (int v = 0; v < n; ++v) {
      if (deg[v] != 3) continue;
      int pendant = 0;
      for (int w = 0; w < n; ++w)
        if (g.m[v][w] != 2 && w != v && deg[w] == 1) pendant++;
      if (pendant < 2) return false;
    }
    return true;
  }
  return false;
}

bool is_word_hyperbolic(const CoxeterGraph& g) {
  int n = g.size();
  if (n > 20) throw std::invalid_argument("graph too large");
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) nodes.push_back(v);
    subsets.push_back(nodes);
  }
  std::vector<char> infinite(subsets.size(), 0);
  for (size_t k = 0; k < subsets.size(); ++k) {
    CoxeterGraph sub = g.induced(subsets[k]);
    auto comps = sub.components();
    if (comps.size() == 1 && sub.size() >= 3 && is_affine_diagram(sub)) return false;
    for (const auto& c : comps)
      if (!is_finite_diagram(sub.induced(c))) infinite[k] = 1;
  }
  for (size_t a = 0; a < subsets.size(); ++a) {
    if (!infinite[a]) continue;
    for (size_t b = a + 1; b < subsets.size(); ++b) {
      if (!infinite[b]) continue;
      bool ok = true;
      for (int u : subsets[a]) {
        for (int v : subsets[b]) {
          if (u == v || g.m[u][v] != 2) { ok = false; break; }
        }
        if (!ok) break;
      }
      if (ok) return false;
    }
  }
  return true;
}

long long RootSystem::group_order() const {
  std::vector<int> all(rank_);
  for (int i = 0; i < rank_; ++i) all[i] = i + 1;
  return parabolic_order(all);
}

long long RootSystem::parabolic_order(const std::vector<int>& subset) const {
  CoxeterGraph g{coxeter_matrix()};
  std::vector<int> nodes;
  for (int i : subset) {
    if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
    nodes.push_back(i - 1);
  }
  std::sort(nodes.begin(), nodes.end());
  CoxeterGraph sub = g.induced(nodes);
  long long order = 1;
  for (const auto& comp : sub.components()) {
    auto o = finite_group_order(sub.induced(comp));
    if (!o) throw std::logic_error("parabolic subgroup is infinite");
    order *= *o;
  }
  return order;
}

std::vector<int> RootSystem::subsystem(const std::vector<int>& J) const {
  std::vector<char> in(rank_ + 1, 0);
  for (int j : J) {
    if (j < 1 || j > rank_) throw std::invalid_argument("generator index out of range");
    in[j] = 1;
  }
  std::vector<int> out;
  for (int idx = 0; idx < num_roots(); ++idx) {
    bool supported = true;
    for (int i = 0; i < rank_; ++i)
      if (roots_[idx][i] != 0 && !in[i + 1]) supported = false;
    if (supported) out.push_back(idx);
  }
  return out;
}

}  // namespace affweyl
