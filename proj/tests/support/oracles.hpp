#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. They deliberately avoid the library's closed forms: lengths come from
// Cayley-graph BFS, Bruhat order from subwords, multiplicities from Kostant's
// partition function, orbits from union-find over explicit reflections.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tiltkit/affine_weyl.hpp"
#include "tiltkit/hecke.hpp"
#include "tiltkit/rootdata.hpp"

namespace oracle {

using namespace tiltkit;
using EltMap = std::unordered_map<AffineWeylElt, int, AffineWeylEltHash>;

/// Word length of every element of length <= max_len, by BFS in the Cayley graph.
inline EltMap bfs_lengths(const AffineWeylGroup& g, int max_len, std::vector<AffineWeylElt>* order = nullptr) {
  EltMap dist;
  std::vector<AffineWeylElt> frontier{g.identity()};
  dist.emplace(g.identity(), 0);
  if (order) order->push_back(g.identity());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffineWeylElt> next;
    for (const auto& x : frontier)
      for (int s = 0; s < g.num_generators(); ++s) {
        AffineWeylElt y = g.multiply(x, g.generator(s));
        if (dist.emplace(y, len).second) {
          next.push_back(y);
          if (order) order->push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return dist;
}

/// A reduced word of x read off the BFS distances (any one will do).
inline std::vector<int> bfs_word(const AffineWeylGroup& g, const EltMap& dist, AffineWeylElt x) {
  std::vector<int> word;
  int d = dist.at(x);
  while (d > 0) {
    for (int s = 0; s < g.num_generators(); ++s) {
      AffineWeylElt y = g.multiply(x, g.generator(s));
      auto it = dist.find(y);
      if (it != dist.end() && it->second == d - 1) {
        word.push_back(s);
        x = y;
        --d;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// All products of subwords of the given word.
inline std::unordered_set<AffineWeylElt, AffineWeylEltHash> subword_products(const AffineWeylGroup& g,
                                                                             const std::vector<int>& word) {
  std::unordered_set<AffineWeylElt, AffineWeylEltHash> out;
  const std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    AffineWeylElt x = g.identity();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) x = g.multiply(x, g.generator(word[i]));
    out.insert(x);
  }
  return out;
}

/// Roots by closing the simple roots under simple reflections x - <a_i^vee, x> a_i.
inline std::set<IntVec> reflection_closure_roots(const RootDatum& d) {
  std::set<IntVec> roots(d.simple_roots().begin(), d.simple_roots().end());
  std::vector<IntVec> todo(roots.begin(), roots.end());
  while (!todo.empty()) {
    IntVec x = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < d.simple_roots().size(); ++i) {
      Int p = dot(d.simple_coroots()[i], x);
      IntVec y = x;
      for (std::size_t t = 0; t < y.size(); ++t) y[t] -= p * d.simple_roots()[i][t];
      if (roots.insert(y).second) todo.push_back(y);
    }
  }
  return roots;
}

/// Finite Weyl group as matrices on X^vee, by closure under simple reflections.
inline std::vector<IntMat> weyl_group_matrices(const RootDatum& d) {
  std::set<IntMat> seen{IntMat::identity(d.rank())};
  std::vector<IntMat> todo{IntMat::identity(d.rank())};
  while (!todo.empty()) {
    IntMat m = todo.back();
    todo.pop_back();
    for (int i = 0; i < d.semisimple_rank(); ++i) {
      IntMat y = d.simple_reflection_matrix(i) * m;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline int det_sign(const IntMat& m) {
  // Weyl group elements have determinant +-1; expand for the small ranks used.
  std::function<Int(const IntMat&)> det = [&](const IntMat& a) -> Int {
    const int n = a.rows();
    if (n == 1) return a(0, 0);
    Int s = 0;
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 1; r < n; ++r)
        for (int c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(r - 1, cc++) = a(r, c);
      s += ((j % 2) ? -1 : 1) * a(0, j) * det(minor);
    }
    return s;
  };
  return static_cast<int>(det(m));
}

/// Kostant's partition function over the positive coroots, evaluated on
/// simple-coroot coordinates.
class Kostant {
 public:
  explicit Kostant(const RootDatum& d) {
    // Positive coroots by closing the simple coroots under y - <y, a_i> a_i^vee.
    std::set<IntVec> all(d.simple_coroots().begin(), d.simple_coroots().end());
    std::vector<IntVec> todo(all.begin(), all.end());
    while (!todo.empty()) {
      IntVec y = todo.back();
      todo.pop_back();
      for (std::size_t i = 0; i < d.simple_roots().size(); ++i) {
        Int p = dot(y, d.simple_roots()[i]);
        IntVec z = y;
        for (std::size_t t = 0; t < z.size(); ++t) z[t] -= p * d.simple_coroots()[i][t];
        if (all.insert(z).second) todo.push_back(z);
      }
    }
    for (const auto& y : all) {
      auto c = d.coroot_coordinates(y);
      IntVec coords;
      for (const auto& q : *c) coords.push_back(q.numerator());
      if (std::all_of(coords.begin(), coords.end(), [](Int x) { return x >= 0; })) coeffs_.push_back(coords);
    }
  }
  Int count(const IntVec& target) { return rec(target, 0); }

 private:
  Int rec(const IntVec& t, std::size_t i) {
    for (Int x : t)
      if (x < 0) return 0;
    if (i == coeffs_.size()) return std::all_of(t.begin(), t.end(), [](Int x) { return x == 0; }) ? 1 : 0;
    auto key = std::make_pair(t, i);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Int total = 0;
    IntVec cur = t;
    for (;;) {
      total += rec(cur, i + 1);
      bool neg = false;
      for (std::size_t k = 0; k < cur.size(); ++k) {
        cur[k] -= coeffs_[i][k];
        if (cur[k] < 0) neg = true;
      }
      if (neg) break;
    }
    memo_[key] = total;
    return total;
  }
  std::vector<IntVec> coeffs_;
  std::map<std::pair<IntVec, std::size_t>, Int> memo_;
};

/// Weight multiplicity of mu in the Weyl module of highest weight lambda,
/// by Kostant's formula.
inline Int kostant_multiplicity(const RootDatum& d, const std::vector<IntMat>& W, Kostant& k, const IntVec& lambda,
                                const IntVec& mu) {
  const IntVec& tr = d.two_rho_vee();
  IntVec lr = add(scale(2, lambda), tr), mr = add(scale(2, mu), tr);
  Int total = 0;
  for (const auto& w : W) {
    IntVec diff = sub(w.apply(lr), mr);
    for (auto& x : diff) {
      if (x % 2 != 0) return 0;
      x /= 2;
    }
    auto c = d.coroot_coordinates(diff);
    if (!c) continue;
    IntVec coords;
    bool integral = true;
    for (const auto& q : *c) {
      if (q.denominator() != 1) integral = false;
      coords.push_back(q.numerator());
    }
    if (!integral) continue;
    total += det_sign(w) * k.count(coords);
  }
  return total;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Points of the box [-radius, radius]^rank in lexicographic order.
inline std::vector<IntVec> box_points(int rank, Int radius) {
  std::vector<IntVec> pts;
  IntVec mu(rank, -radius);
  for (;;) {
    pts.push_back(mu);
    int i = rank - 1;
    while (i >= 0 && mu[i] == radius) mu[i--] = -radius;
    if (i < 0) break;
    ++mu[i];
  }
  return pts;
}

/// Orbit partition of the points in a box under the given action of the
/// simple reflections, computed inside a larger box so that short detours
/// outside the inner box are allowed. Returns a class id per inner point.
inline std::map<IntVec, int> orbit_partition(const AffineWeylGroup& g, Int inner, Int outer, Int ell,
                                             ActionMode mode) {
  auto pts = box_points(g.datum().rank(), outer);
  std::map<IntVec, int> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<int>(i);
  UnionFind uf(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int s = 0; s < g.num_generators(); ++s) {
      auto it = idx.find(g.act(g.generator(s), pts[i], ell, mode));
      if (it != idx.end()) uf.unite(static_cast<int>(i), it->second);
    }
  std::map<IntVec, int> out;
  for (const auto& p : box_points(g.datum().rank(), inner)) out[p] = uf.find(idx.at(p));
  return out;
}

/// True iff two labellings of the same points induce the same partition.
template <class A, class B>
bool same_partition(const std::map<IntVec, A>& a, const std::map<IntVec, B>& b) {
  if (a.size() != b.size()) return false;
  std::map<A, B> ab;
  std::map<B, A> ba;
  for (const auto& [p, x] : a) {
    auto it = b.find(p);
    if (it == b.end()) return false;
    auto [i1, n1] = ab.emplace(x, it->second);
    auto [i2, n2] = ba.emplace(it->second, x);
    if (!(i1->second == it->second) || !(i2->second == x)) return false;
  }
  return true;
}

/// Elements of W_aff up to a length bound fixing mu under the action.
inline std::size_t count_stabilizer(const AffineWeylGroup& g, const IntVec& mu, Int ell, ActionMode mode,
                                    int max_len) {
  std::size_t n = 0;
  for (const auto& [x, len] : bfs_lengths(g, max_len))
    if (g.act(x, mu, ell, mode) == mu) ++n;
  return n;
}

/// The antispherical module written out in the standard basis with its own
/// action of H_s and its own bar involution, independent of the KL recursion.
class StandardAsph {
 public:
  using Vec = std::map<std::vector<int>, LaurentPoly>;  // keyed by canonical reduced word

  explicit StandardAsph(const AffineWeylGroup& g) : g_(g) {}

  std::vector<int> key(const AffineWeylElt& x) const { return g_.reduced_word(x); }

  /// N_w H_s with H_s^2 = (v^-1 - v) H_s + 1 and N_w H_s = -v N_w when ws leaves ^fW.
  Vec mult_Hs(const Vec& x, int s) const {
    Vec out;
    auto acc = [&out](const std::vector<int>& k, const LaurentPoly& p) {
      LaurentPoly& slot = out[k];
      slot += p;
      if (slot.is_zero()) out.erase(k);
    };
    for (const auto& [w, p] : x) {
      AffineWeylElt e = g_.from_word(w);
      AffineWeylElt es = g_.multiply(e, g_.generator(s));
      if (!g_.is_min_in_Wf(es)) {
        acc(w, p * LaurentPoly::monomial(-1, 1));
      } else if (g_.length(es) > g_.length(e)) {
        acc(key(es), p);
      } else {
        acc(key(es), p);
        acc(w, p * (LaurentPoly::v_inv() - LaurentPoly::v()));
      }
    }
    return out;
  }
  /// Right action of H_s^{-1} = H_s + (v - v^-1).
  Vec mult_Hs_inv(const Vec& x, int s) const {
    Vec out = mult_Hs(x, s);
    for (const auto& [w, p] : x) {
      LaurentPoly& slot = out[w];
      slot += p * (LaurentPoly::v() - LaurentPoly::v_inv());
      if (slot.is_zero()) out.erase(w);
    }
    return out;
  }
  Vec underline(const Vec& x, int s) const {
    Vec out = mult_Hs(x, s);
    for (const auto& [w, p] : x) {
      LaurentPoly& slot = out[w];
      slot += p * LaurentPoly::v();
      if (slot.is_zero()) out.erase(w);
    }
    return out;
  }
  /// bar(N_w) = N_e H_{s_1}^{-1} ... H_{s_k}^{-1} for a reduced word of w.
  Vec bar_of_standard(const AffineWeylElt& w) const {
    Vec x{{std::vector<int>{}, LaurentPoly(1)}};
    for (int s : g_.reduced_word(w)) x = mult_Hs_inv(x, s);
    return x;
  }
  Vec bar(const Vec& x) const {
    Vec out;
    for (const auto& [w, p] : x)
      for (const auto& [y, q] : bar_of_standard(g_.from_word(w))) {
        LaurentPoly& slot = out[y];
        slot += p.bar() * q;
        if (slot.is_zero()) out.erase(y);
      }
    return out;
  }

 private:
  const AffineWeylGroup& g_;
};

inline StandardAsph::Vec to_words(const AffineWeylGroup& g, const KazhdanLusztigBasis& kl, const HeckeVector& x) {
  StandardAsph::Vec out;
  for (const auto& [w, p] : kl.expand(x)) out[g.reduced_word(w)] = p;
  return out;
}

}  // namespace oracle
