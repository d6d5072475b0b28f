#include "tiltkit/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "tiltkit/error.hpp"

namespace tiltkit {

std::string_view to_string(Isogeny iso) {
  return iso == Isogeny::adjoint ? "adjoint" : "simply_connected";
}

Isogeny parse_isogeny(std::string_view s) {
  if (s == "adjoint" || s == "ad") return Isogeny::adjoint;
  if (s == "simply_connected" || s == "sc" || s == "simply-connected") return Isogeny::simply_connected;
  throw ValidationError("unknown isogeny '" + std::string(s) + "' (expected adjoint|simply_connected)");
}

namespace {

// Largest simple-root coefficient of any root of a finite root system (E8).
constexpr Int kMaxFiniteCoefficient = 6;

IntMat irreducible_cartan(char family, int n) {
  auto chain = [](int m) {
    IntMat a = IntMat::identity(m);
    for (int i = 0; i < m; ++i) a(i, i) = 2;
    for (int i = 0; i + 1 < m; ++i) a(i, i + 1) = a(i + 1, i) = -1;
    return a;
  };
  switch (family) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B': {
      if (n < 2) break;
      IntMat a = chain(n);
      a(n - 1, n - 2) = -2;
      return a;
    }
    case 'C': {
      if (n < 2) break;
      IntMat a = chain(n);
      a(n - 2, n - 1) = -2;
      return a;
    }
    case 'D': {
      if (n < 4) break;
      IntMat a = chain(n);
      a(n - 2, n - 1) = a(n - 1, n - 2) = 0;
      a(n - 3, n - 1) = a(n - 1, n - 3) = -1;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      IntMat a = IntMat::identity(n);
      for (int i = 0; i < n; ++i) a(i, i) = 2;
      auto link = [&a](int i, int j) { a(i, j) = a(j, i) = -1; };
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      return a;
    }
    case 'F': {
      if (n != 4) break;
      IntMat a = chain(4);
      a(2, 1) = -2;
      return a;
    }
    case 'G': {
      if (n != 2) break;
      IntMat a = chain(2);
      a(0, 1) = -3;
      return a;
    }
    default:
      break;
  }
  throw ValidationError(std::string("unsupported Cartan type ") + family + std::to_string(n));
}

std::vector<std::string> split_product(std::string_view type) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < type.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(type[i]);
    // 'x', '*', or the UTF-8 multiplication sign U+00D7 (0xC3 0x97).
    if (c == 'x' || c == 'X' || c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (c == 0xC3 && i + 1 < type.size() && static_cast<unsigned char>(type[i + 1]) == 0x97) {
      parts.push_back(cur);
      cur.clear();
      ++i;
    } else if (c == '_' || std::isspace(c)) {
      continue;
    } else {
      cur.push_back(static_cast<char>(c));
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

IntMat cartan_matrix_of_type(std::string_view type) {
  std::vector<IntMat> blocks;
  int total = 0;
  for (const auto& part : split_product(type)) {
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
      throw ValidationError("malformed type string '" + std::string(type) + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int n = 0;
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ValidationError("malformed type string '" + std::string(type) + "'");
      n = n * 10 + (part[i] - '0');
    }
    blocks.push_back(irreducible_cartan(family, n));
    total += n;
  }
  IntMat a(total, total);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) a(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return a;
}

RootDatum RootDatum::from_type(std::string_view type, Isogeny iso) {
  IntMat a = cartan_matrix_of_type(type);
  const int n = a.rows();
  std::vector<IntVec> roots(n, IntVec(n, 0)), coroots(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (iso == Isogeny::adjoint) {
        // X = root lattice, X^vee = coweight lattice.
        roots[i][j] = (i == j);
        coroots[i][j] = a(i, j);
      } else {
        // X^vee = coroot lattice, X = weight lattice.
        coroots[i][j] = (i == j);
        roots[i][j] = a(j, i);
      }
    }
  RootDatum d = from_matrices(n, std::move(roots), std::move(coroots));
  d.label_ = std::string(type);
  d.isogeny_ = iso;
  return d;
}

RootDatum RootDatum::from_matrices(int rank, std::vector<IntVec> simple_roots, std::vector<IntVec> simple_coroots) {
  if (rank <= 0) throw ValidationError("root datum rank must be positive");
  if (simple_roots.size() != simple_coroots.size())
    throw ValidationError("number of simple roots and simple coroots differ");
  if (static_cast<int>(simple_roots.size()) > rank) throw ValidationError("more simple roots than the lattice rank");
  for (const auto& v : simple_roots)
    if (static_cast<int>(v.size()) != rank) throw ValidationError("simple root has wrong dimension");
  for (const auto& v : simple_coroots)
    if (static_cast<int>(v.size()) != rank) throw ValidationError("simple coroot has wrong dimension");
  RootDatum d;
  d.rank_ = rank;
  d.simple_roots_ = std::move(simple_roots);
  d.simple_coroots_ = std::move(simple_coroots);
  d.derive();
  return d;
}

void RootDatum::derive() {
  const int k = semisimple_rank();
  cartan_ = IntMat(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cartan_(i, j) = dot(simple_coroots_[i], simple_roots_[j]);

  for (int i = 0; i < k; ++i) {
    if (cartan_(i, i) != 2) throw ValidationError("invalid Cartan matrix: diagonal entry is not 2");
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (cartan_(i, j) > 0) throw ValidationError("invalid Cartan matrix: positive off-diagonal entry");
      if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0))
        throw ValidationError("invalid Cartan matrix: zero pattern is not symmetric");
      if (cartan_(i, j) * cartan_(j, i) > 3) throw ValidationError("Cartan matrix is not of finite type");
    }
  }

  // Reflection closure on simple-root coefficient vectors.
  std::unordered_map<IntVec, int, VecHash> seen;
  std::vector<IntVec> rc, cc;
  std::deque<int> queue;
  for (int i = 0; i < k; ++i) {
    IntVec e(k, 0);
    e[i] = 1;
    seen.emplace(e, i);
    rc.push_back(e);
    cc.push_back(e);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      const IntVec c = rc[cur];
      const IntVec cv = cc[cur];
      Int p = 0, q = 0;
      for (int j = 0; j < k; ++j) {
        p += c[j] * cartan_(i, j);
        q += cv[j] * cartan_(j, i);
      }
      if (p == 0) continue;
      IntVec nc = c;
      nc[i] -= p;
      if (std::any_of(nc.begin(), nc.end(), [](Int x) { return x < 0; })) continue;  // reflected a simple root
      if (seen.count(nc)) continue;
      if (nc[i] > kMaxFiniteCoefficient) throw ValidationError("Cartan matrix is not of finite type");
      IntVec ncv = cv;
      ncv[i] -= q;
      seen.emplace(nc, static_cast<int>(rc.size()));
      rc.push_back(std::move(nc));
      cc.push_back(std::move(ncv));
      queue.push_back(static_cast<int>(rc.size()) - 1);
    }
  }

  std::vector<std::size_t> order(rc.size());
  std::iota(order.begin(), order.end(), 0);
  auto height = [](const IntVec& c) { return std::accumulate(c.begin(), c.end(), Int{0}); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    Int ha = height(rc[a]), hb = height(rc[b]);
    if (ha != hb) return ha < hb;
    return rc[a] > rc[b];
  });
  pos_roots_.clear();
  pos_coroots_.clear();
  root_coeffs_.clear();
  coroot_coeffs_.clear();
  for (std::size_t idx : order) {
    IntVec r(rank_, 0), cr(rank_, 0);
    for (int j = 0; j < k; ++j) {
      for (int t = 0; t < rank_; ++t) {
        r[t] += rc[idx][j] * simple_roots_[j][t];
        cr[t] += cc[idx][j] * simple_coroots_[j][t];
      }
    }
    pos_roots_.push_back(std::move(r));
    pos_coroots_.push_back(std::move(cr));
    root_coeffs_.push_back(rc[idx]);
    coroot_coeffs_.push_back(cc[idx]);
  }

  two_rho_vee_.assign(rank_, 0);
  for (const auto& c : pos_coroots_)
    for (int t = 0; t < rank_; ++t) two_rho_vee_[t] += c[t];

  // Dynkin components.
  components_.clear();
  std::vector<int> comp_of(k, -1);
  for (int s = 0; s < k; ++s) {
    if (comp_of[s] >= 0) continue;
    DynkinComponent comp;
    std::deque<int> q{s};
    comp_of[s] = static_cast<int>(components_.size());
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      comp.simple_indices.push_back(i);
      for (int j = 0; j < k; ++j)
        if (j != i && cartan_(i, j) != 0 && comp_of[j] < 0) {
          comp_of[j] = comp_of[s];
          q.push_back(j);
        }
    }
    std::sort(comp.simple_indices.begin(), comp.simple_indices.end());
    components_.push_back(std::move(comp));
  }
  for (std::size_t c = 0; c < components_.size(); ++c) {
    auto& comp = components_[c];
    Int best_h = -1, best_ch = -1;
    int count = 0;
    for (std::size_t r = 0; r < root_coeffs_.size(); ++r) {
      int support = -1;
      for (int j = 0; j < k; ++j)
        if (root_coeffs_[r][j] != 0) support = comp_of[j];
      if (support != static_cast<int>(c)) continue;
      ++count;
      Int h = height(root_coeffs_[r]);
      Int ch = height(coroot_coeffs_[r]);
      if (h > best_h) {
        best_h = h;
        comp.highest_root = static_cast<int>(r);
      }
      if (ch > best_ch) {
        best_ch = ch;
        comp.highest_coroot = static_cast<int>(r);
      }
    }
    comp.coxeter_number = 2 * count / static_cast<int>(comp.simple_indices.size());
  }

  // Symmetrizer d with d_i A_ji = d_j A_ij, minimal positive integers per component.
  std::vector<Rational> dr(k, Rational(0));
  for (const auto& comp : components_) {
    int root = comp.simple_indices.front();
    dr[root] = 1;
    std::deque<int> q{root};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j : comp.simple_indices)
        if (j != i && cartan_(i, j) != 0 && dr[j] == 0) {
          dr[j] = dr[i] * Rational(cartan_(j, i), cartan_(i, j));
          q.push_back(j);
        }
    }
    Int l = 1;
    for (int j : comp.simple_indices) l = std::lcm(l, dr[j].denominator());
    Int g = 0;
    for (int j : comp.simple_indices) g = std::gcd(g, (dr[j] * l).numerator());
    for (int j : comp.simple_indices) dr[j] = dr[j] * l / g;
  }
  symmetrizer_.assign(k, 0);
  for (int i = 0; i < k; ++i) symmetrizer_[i] = dr[i].numerator();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (symmetrizer_[i] * cartan_(j, i) != symmetrizer_[j] * cartan_(i, j))
        throw ValidationError("Cartan matrix is not symmetrizable");

  cartan_inverse_.assign(std::size_t(k) * k, Rational(0));
  for (int col = 0; col < k; ++col) {
    IntVec e(k, 0);
    e[col] = 1;
    auto x = solve(cartan_, e);
    if (!x) throw ValidationError("Cartan matrix is singular");
    for (int row = 0; row < k; ++row) cartan_inverse_[std::size_t(row) * k + col] = (*x)[row];
  }
}

IntVec RootDatum::root(int index) const {
  const int n = static_cast<int>(pos_roots_.size());
  if (index < 0 || index >= 2 * n) throw ValidationError("root index out of range");
  return index < n ? pos_roots_[index] : negate(pos_roots_[index - n]);
}

IntVec RootDatum::coroot(int index) const {
  const int n = static_cast<int>(pos_roots_.size());
  if (index < 0 || index >= 2 * n) throw ValidationError("root index out of range");
  return index < n ? pos_coroots_[index] : negate(pos_coroots_[index - n]);
}

std::optional<int> RootDatum::root_index(std::span<const Int> v) const {
  for (std::size_t i = 0; i < pos_roots_.size(); ++i) {
    if (std::equal(v.begin(), v.end(), pos_roots_[i].begin(), pos_roots_[i].end())) return static_cast<int>(i);
    IntVec neg = negate(pos_roots_[i]);
    if (std::equal(v.begin(), v.end(), neg.begin(), neg.end())) return static_cast<int>(i + pos_roots_.size());
  }
  return std::nullopt;
}

int RootDatum::coxeter_number() const {
  int h = 0;
  for (const auto& c : components_) h = std::max(h, c.coxeter_number);
  return h;
}

const IntVec& RootDatum::highest_root() const {
  if (components_.size() != 1) throw ValidationError("highest root requires an irreducible root datum");
  return pos_roots_[components_.front().highest_root];
}

const IntVec& RootDatum::highest_coroot() const {
  if (components_.size() != 1) throw ValidationError("highest coroot requires an irreducible root datum");
  return pos_coroots_[components_.front().highest_coroot];
}

bool RootDatum::rho_vee_integral() const {
  return std::all_of(two_rho_vee_.begin(), two_rho_vee_.end(), [](Int x) { return x % 2 == 0; });
}

IntVec RootDatum::rho_vee() const {
  if (!rho_vee_integral()) throw ValidationError("rho^vee is not integral for this root datum");
  IntVec r = two_rho_vee_;
  for (auto& x : r) x /= 2;
  return r;
}

IntVec RootDatum::reflect_coweight(int s, std::span<const Int> y) const {
  Int p = dot(y, simple_roots_.at(s));
  IntVec r(y.begin(), y.end());
  for (int t = 0; t < rank_; ++t) r[t] -= p * simple_coroots_[s][t];
  return r;
}

IntVec RootDatum::reflect_weight(int s, std::span<const Int> x) const {
  Int p = dot(simple_coroots_.at(s), x);
  IntVec r(x.begin(), x.end());
  for (int t = 0; t < rank_; ++t) r[t] -= p * simple_roots_[s][t];
  return r;
}

IntMat RootDatum::simple_reflection_matrix(int s) const {
  IntMat m = IntMat::identity(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m(i, j) -= simple_coroots_.at(s)[i] * simple_roots_[s][j];
  return m;
}

bool RootDatum::is_dominant(std::span<const Int> y) const {
  for (const auto& a : simple_roots_)
    if (dot(y, a) < 0) return false;
  return true;
}

IntVec RootDatum::dominant_conjugate(std::span<const Int> y) const {
  IntVec cur(y.begin(), y.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = 0; s < semisimple_rank(); ++s)
      if (dot(cur, simple_roots_[s]) < 0) {
        cur = reflect_coweight(s, cur);
        changed = true;
      }
  }
  return cur;
}

std::optional<std::vector<Rational>> RootDatum::coroot_coordinates(std::span<const Int> y) const {
  const int k = semisimple_rank();
  std::vector<Rational> c(k, Rational(0));
  // <y, a_j> = sum_i c_i A_ij  =>  c = <y, a> A^{-1}
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c[i] += Rational(dot(y, simple_roots_[j])) * cartan_inverse_[std::size_t(j) * k + i];
  IntVec back(rank_, 0);
  Int den = 1;
  for (const auto& x : c) den = std::lcm(den, x.denominator());
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < rank_; ++t) back[t] += (c[i] * den).numerator() * simple_coroots_[i][t];
  for (int t = 0; t < rank_; ++t)
    if (back[t] != y[t] * den) return std::nullopt;
  return c;
}

bool RootDatum::in_coroot_lattice(std::span<const Int> y) const {
  auto c = coroot_coordinates(y);
  return c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.denominator() == 1; });
}

std::string RootDatum::hash() const {
  std::ostringstream os;
  os << "rank=" << rank_ << ";roots=";
  for (const auto& v : simple_roots_) os << to_string(v);
  os << ";coroots=";
  for (const auto& v : simple_coroots_) os << to_string(v);
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << h;
  return hex.str();
}

std::vector<FiniteWeylElement> weyl_elements(const RootDatum& d) {
  if (d.semisimple_rank() > 4) throw ValidationError("Weyl group enumeration is limited to rank <= 4");
  std::vector<FiniteWeylElement> out;
  std::unordered_set<IntVec, VecHash> seen;
  out.push_back({{}, IntMat::identity(d.rank())});
  seen.insert(out.back().on_coweights.data());
  std::vector<IntMat> gens;
  for (int s = 0; s < d.semisimple_rank(); ++s) gens.push_back(d.simple_reflection_matrix(s));
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s = 0; s < d.semisimple_rank(); ++s) {
      IntMat m = out[head].on_coweights * gens[s];
      if (!seen.insert(m.data()).second) continue;
      auto word = out[head].word;
      word.push_back(s);
      out.push_back({std::move(word), std::move(m)});
    }
  }
  return out;
}

Int Character::total_mass() const {
  Int s = 0;
  for (const auto& [w, m] : weight_mults) s += m;
  return s;
}

Int Character::multiplicity(const IntVec& w) const {
  auto it = weight_mults.find(w);
  return it == weight_mults.end() ? 0 : it->second;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, m] : o.weight_mults) {
    Int& slot = weight_mults[w];
    slot += m;
    if (slot == 0) weight_mults.erase(w);
  }
  return *this;
}

Character Character::scaled(Int c) const {
  Character r;
  if (c == 0) return r;
  for (const auto& [w, m] : weight_mults) r.weight_mults[w] = c * m;
  return r;
}

std::uint64_t weyl_dim(const RootDatum& d, std::span<const Int> lambda) {
  if (static_cast<int>(lambda.size()) != d.rank()) throw ValidationError("weight has wrong dimension");
  if (!d.is_dominant(lambda)) throw ValidationError("weyl_dim: weight " + to_string(lambda) + " is not dominant");
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  for (const auto& a : d.positive_roots()) {
    num *= 2 * dot(lambda, a) + dot(d.two_rho_vee(), a);
    den *= dot(d.two_rho_vee(), a);
  }
  if (num % den != 0) throw std::logic_error("weyl_dim: non-integral dimension");
  cpp_int q = num / den;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("weyl_dim: dimension overflows 64 bits");
  return q.convert_to<std::uint64_t>();
}

Character weyl_character(const RootDatum& d, std::span<const Int> lambda_span) {
  const IntVec lambda(lambda_span.begin(), lambda_span.end());
  if (static_cast<int>(lambda.size()) != d.rank()) throw ValidationError("weight has wrong dimension");
  if (!d.is_dominant(lambda)) throw ValidationError("weyl_character: weight " + to_string(lambda) + " is not dominant");
  const int k = d.semisimple_rank();
  const auto& sym = d.coroot_symmetrizer();
  const auto& A = d.cartan();

  auto is_weight = [&](const IntVec& mu) {
    IntVec diff = sub(lambda, d.dominant_conjugate(mu));
    auto c = d.coroot_coordinates(diff);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.denominator() == 1 && x >= 0; });
  };
  // (x, beta^vee) for beta^vee = sum_j c_j a_j^vee.
  auto form_with_coroot = [&](const IntVec& x, const IntVec& coeffs) {
    Int s = 0;
    for (int j = 0; j < k; ++j) s += coeffs[j] * sym[j] * dot(x, d.simple_roots()[j]);
    return s;
  };

  std::map<IntVec, Int> mults;
  mults[lambda] = 1;
  // BFS by depth of lambda - mu in the simple coroots.
  std::vector<std::pair<IntVec, IntVec>> layer{{lambda, IntVec(k, 0)}};
  while (!layer.empty()) {
    std::map<IntVec, IntVec> next;  // weight -> depth coefficients
    for (const auto& [mu, gamma] : layer)
      for (int i = 0; i < k; ++i) {
        IntVec nu = sub(mu, d.simple_coroots()[i]);
        if (mults.count(nu) || next.count(nu) || !is_weight(nu)) continue;
        IntVec g = gamma;
        g[i] += 1;
        next.emplace(std::move(nu), std::move(g));
      }
    layer.clear();
    for (auto& [nu, gamma] : next) {
      // denominator 2(lambda + rho, gamma) - (gamma, gamma)
      Int lr = 0, gg = 0;
      for (int i = 0; i < k; ++i) {
        lr += gamma[i] * sym[i] * (dot(lambda, d.simple_roots()[i]) + 1);
        for (int j = 0; j < k; ++j) gg += gamma[i] * gamma[j] * sym[i] * A(j, i);
      }
      Int den = 2 * lr - gg;
      Int num = 0;
      for (std::size_t b = 0; b < d.num_positive_roots(); ++b) {
        const auto& bc = d.positive_coroots()[b];
        const auto& coeffs = d.coroot_coefficients()[b];
        IntVec x = nu;
        for (;;) {
          x = add(x, bc);
          auto it = mults.find(x);
          if (it == mults.end()) break;
          num += form_with_coroot(x, coeffs) * it->second;
        }
      }
      num *= 2;
      if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      mults[nu] = num / den;
      layer.emplace_back(nu, gamma);
    }
  }
  Character ch;
  for (auto& [w, m] : mults)
    if (m != 0) ch.weight_mults.emplace(w, m);
  return ch;
}

}  // namespace tiltkit
