#include "tiltkit/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "tiltkit/error.hpp"

namespace tiltkit {

std::size_t AffineWeylEltHash::operator()(const AffineWeylElt& x) const noexcept {
  std::size_t seed = VecHash{}(x.finite.data());
  hash_combine(seed, VecHash{}(x.translation));
  return seed;
}

std::string_view to_string(ActionMode m) {
  switch (m) {
    case ActionMode::dot:
      return "dot";
    case ActionMode::box:
      return "box";
    case ActionMode::cdot:
      return "cdot";
  }
  return "?";
}

ActionMode parse_action_mode(std::string_view s) {
  if (s == "dot") return ActionMode::dot;
  if (s == "box") return ActionMode::box;
  if (s == "cdot") return ActionMode::cdot;
  throw ValidationError("unknown action mode '" + std::string(s) + "'");
}

namespace {

IntMat reflection_matrix(const IntVec& root, const IntVec& coroot) {
  const int r = static_cast<int>(root.size());
  IntMat m = IntMat::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) -= coroot[i] * root[j];
  return m;
}

}  // namespace

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) {
  if (!datum_) throw ValidationError("AffineWeylGroup: null root datum");
  const RootDatum& d = *datum_;
  for (int s = 0; s < d.semisimple_rank(); ++s) {
    IntMat m = d.simple_reflection_matrix(s);
    gens_.elements.push_back({m, m, IntVec(d.rank(), 0)});
    gens_.component.push_back(-1);
    gens_.affine_roots.emplace_back(*d.root_index(d.simple_roots()[s]), 0);
  }
  gens_.num_finite = d.semisimple_rank();
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    int hr = d.components()[c].highest_root;
    const IntVec& beta = d.positive_roots()[hr];
    const IntVec& beta_vee = d.positive_coroots()[hr];
    IntMat m = reflection_matrix(beta, beta_vee);
    // t_{beta^vee} s_beta = s_beta t_{-beta^vee}
    gens_.elements.push_back({m, m, negate(beta_vee)});
    gens_.component.push_back(static_cast<int>(c));
    gens_.affine_roots.emplace_back(hr, 1);
  }
}

AffineWeylElt AffineWeylGroup::identity() const {
  IntMat id = IntMat::identity(datum_->rank());
  return {id, id, IntVec(datum_->rank(), 0)};
}

const AffineWeylElt& AffineWeylGroup::generator(int s) const {
  if (s < 0 || s >= gens_.size()) throw ValidationError("generator index " + std::to_string(s) + " out of range");
  return gens_.elements[s];
}

AffineWeylElt AffineWeylGroup::translation(std::span<const Int> lambda) const {
  if (static_cast<int>(lambda.size()) != datum_->rank()) throw ValidationError("translation has wrong dimension");
  if (!datum_->in_coroot_lattice(lambda))
    throw ValidationError("translation " + to_string(lambda) + " is not in the coroot lattice");
  AffineWeylElt x = identity();
  x.translation.assign(lambda.begin(), lambda.end());
  return x;
}

AffineWeylElt AffineWeylGroup::affine_reflection(int root_index, Int m) const {
  IntVec a = datum_->root(root_index);
  IntVec av = datum_->coroot(root_index);
  IntMat refl = reflection_matrix(a, av);
  return {refl, refl, scale(-m, av)};
}

AffineWeylElt AffineWeylGroup::multiply(const AffineWeylElt& x, const AffineWeylElt& y) const {
  if (x.translation.size() != y.translation.size() || x.finite.rows() != y.finite.rows())
    throw ValidationError("multiply: elements belong to different root data");
  // (w t_l)(w' t_m) = w w' t_{w'^{-1} l + m}
  AffineWeylElt r;
  r.finite = x.finite * y.finite;
  r.finite_inv = y.finite_inv * x.finite_inv;
  r.translation = add(y.finite_inv.apply(x.translation), y.translation);
  return r;
}

AffineWeylElt AffineWeylGroup::inverse(const AffineWeylElt& x) const {
  // (w t_l)^{-1} = w^{-1} t_{-w l}
  return {x.finite_inv, x.finite, negate(x.finite.apply(x.translation))};
}

int AffineWeylGroup::length(const AffineWeylElt& x) const {
  const RootDatum& d = *datum_;
  IntVec wl = x.finite.apply(x.translation);
  IntVec w2rho = x.finite.apply(d.two_rho_vee());
  Int len = 0;
  for (const auto& a : d.positive_roots()) {
    Int m = dot(wl, a);
    len += dot(w2rho, a) > 0 ? std::abs(m) : std::abs(m - 1);
  }
  return static_cast<int>(len);
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElt& x0, const AffineWeylElt& y0) const {
  AffineWeylElt x = x0, y = y0;
  int lx = length(x), ly = length(y);
  for (;;) {
    if (lx > ly) return false;
    if (lx == ly) return x == y;
    if (lx == 0) return true;
    // Lifting property at a right descent s of y: x <= y iff min(x, xs) <= ys.
    int s = right_descents(y).front();
    y = right_multiply(y, s);
    --ly;
    AffineWeylElt xs = right_multiply(x, s);
    int lxs = length(xs);
    if (lxs < lx) {
      x = std::move(xs);
      lx = lxs;
    }
  }
}

IntVec AffineWeylGroup::act(const AffineWeylElt& x, std::span<const Int> mu, Int n, ActionMode mode) const {
  if (static_cast<int>(mu.size()) != datum_->rank()) throw ValidationError("act: coweight has wrong dimension");
  switch (mode) {
    case ActionMode::box:
      return x.finite.apply(add(mu, scale(n, x.translation)));
    case ActionMode::cdot:
      return x.finite.apply(sub(mu, scale(n, x.translation)));
    case ActionMode::dot: {
      // w t_l = t_{wl} w: result w(mu + rho) - rho + n w l, with rho kept doubled.
      const IntVec& two_rho = datum_->two_rho_vee();
      IntVec shifted = sub(x.finite.apply(add(scale(2, mu), two_rho)), two_rho);
      IntVec r(shifted.size());
      IntVec wl = x.finite.apply(x.translation);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = shifted[i] / 2 + n * wl[i];
      return r;
    }
  }
  throw ValidationError("act: unknown mode");
}

AffineWeylElt AffineWeylGroup::star(const AffineWeylElt& x) const {
  // x = w t_m = t_{wm} w, so x^* = t_{-wm} w = w t_{-m}.
  return {x.finite, x.finite_inv, negate(x.translation)};
}

std::vector<int> AffineWeylGroup::right_descents(const AffineWeylElt& x) const {
  std::vector<int> out;
  int l = length(x);
  for (int s = 0; s < num_generators(); ++s)
    if (length(right_multiply(x, s)) < l) out.push_back(s);
  return out;
}

std::vector<int> AffineWeylGroup::left_descents(const AffineWeylElt& x) const {
  std::vector<int> out;
  int l = length(x);
  for (int s = 0; s < num_generators(); ++s)
    if (length(left_multiply(s, x)) < l) out.push_back(s);
  return out;
}

bool AffineWeylGroup::is_min_in_Wf(const AffineWeylElt& x) const {
  int l = length(x);
  for (int s = 0; s < gens_.num_finite; ++s)
    if (length(left_multiply(s, x)) < l) return false;
  return true;
}

std::vector<AffineWeylElt> AffineWeylGroup::enumerate(int max_len) const {
  ElementTable t(*this, false);
  t.extend_to(max_len);
  std::vector<AffineWeylElt> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.element(i));
  return out;
}

std::vector<AffineWeylElt> AffineWeylGroup::enumerate_fW(int max_len) const {
  ElementTable t(*this, true);
  t.extend_to(max_len);
  std::vector<AffineWeylElt> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.element(i));
  return out;
}

bool AffineWeylGroup::is_finite_parabolic(std::span<const int> subset) const {
  for (int s : subset) generator(s);
  for (std::size_t c = 0; c < datum_->components().size(); ++c) {
    bool all = std::find(subset.begin(), subset.end(), gens_.num_finite + static_cast<int>(c)) != subset.end();
    for (int i : datum_->components()[c].simple_indices)
      all = all && std::find(subset.begin(), subset.end(), i) != subset.end();
    if (all) return false;
  }
  return true;
}

std::size_t AffineWeylGroup::parabolic_order(std::span<const int> subset) const {
  if (!is_finite_parabolic(subset)) throw ValidationError("parabolic subgroup is infinite");
  std::unordered_set<AffineWeylElt, AffineWeylEltHash> seen{identity()};
  std::deque<AffineWeylElt> queue{identity()};
  while (!queue.empty()) {
    AffineWeylElt x = std::move(queue.front());
    queue.pop_front();
    for (int s : subset) {
      AffineWeylElt y = right_multiply(x, s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen.size();
}

AffineWeylElt AffineWeylGroup::max_in_coset(const AffineWeylElt& x, std::span<const int> subset) const {
  if (!is_finite_parabolic(subset)) throw ValidationError("max_in_coset: parabolic subgroup is infinite");
  AffineWeylElt cur = x;
  int l = length(cur);
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : subset) {
      AffineWeylElt y = right_multiply(cur, s);
      int ly = length(y);
      if (ly > l) {
        cur = std::move(y);
        l = ly;
        grew = true;
      }
    }
  }
  return cur;
}

bool AffineWeylGroup::is_max_in_coset(const AffineWeylElt& x, std::span<const int> subset) const {
  int l = length(x);
  for (int s : subset)
    if (length(right_multiply(x, s)) > l) return false;
  return true;
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineWeylElt& x) const {
  std::vector<int> word;
  AffineWeylElt cur = x;
  int l = length(cur);
  while (l > 0) {
    bool found = false;
    for (int s = 0; s < num_generators(); ++s) {
      AffineWeylElt y = right_multiply(cur, s);
      if (length(y) < l) {
        word.push_back(s);
        cur = std::move(y);
        --l;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent for an element of positive length");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

AffineWeylElt AffineWeylGroup::from_word(std::span<const int> word) const {
  AffineWeylElt x = identity();
  for (int s : word) x = right_multiply(x, s);
  return x;
}

void AffineWeylGroup::validate(const AffineWeylElt& x) const {
  const int r = datum_->rank();
  if (x.finite.rows() != r || x.finite.cols() != r || static_cast<int>(x.translation.size()) != r)
    throw ValidationError("element does not belong to this affine Weyl group (dimension mismatch)");
  if (!datum_->in_coroot_lattice(x.translation)) throw ValidationError("translation part is not in the coroot lattice");
}

ElementTable::ElementTable(const AffineWeylGroup& group, bool restrict_to_fW)
    : group_(&group), restrict_fW_(restrict_to_fW) {
  extend_to(0);
}

void ElementTable::extend_to(int max_len) {
  const int ngen = group_->num_generators();
  auto add_element = [&](AffineWeylElt x, int len) {
    int idx = static_cast<int>(elements_.size());
    index_.emplace(x, idx);
    elements_.push_back(std::move(x));
    lengths_.push_back(len);
    right_.emplace_back(ngen, kNone);
    ascent_.emplace_back(ngen, 0);
    layers_[len].push_back(idx);
  };
  if (max_len_ < 0) {
    layers_.resize(1);
    add_element(group_->identity(), 0);
    max_len_ = 0;
  }
  while (max_len_ < max_len) {
    const int len = max_len_ + 1;
    layers_.resize(len + 1);
    // Candidates in canonical order: ordered by (parent index, generator).
    for (int parent : layers_[len - 1]) {
      for (int s = 0; s < ngen; ++s) {
        AffineWeylElt y = group_->right_multiply(elements_[parent], s);
        if (group_->length(y) != len) continue;
        if (index_.count(y)) continue;
        if (restrict_fW_ && !group_->is_min_in_Wf(y)) continue;
        add_element(std::move(y), len);
      }
    }
    max_len_ = len;
  }
  // (Re)fill multiplication data for everything; entries only ever change from kNone.
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (int s = 0; s < ngen; ++s) {
      if (right_[i][s] != kNone) continue;
      AffineWeylElt y = group_->right_multiply(elements_[i], s);
      int ly = group_->length(y);
      ascent_[i][s] = ly > lengths_[i];
      auto it = index_.find(y);
      if (it != index_.end()) right_[i][s] = it->second;
    }
  }
}

int ElementTable::index_of(const AffineWeylElt& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? kNone : it->second;
}

bool ElementTable::leq(std::size_t x, std::size_t y) const {
  for (;;) {
    if (lengths_[x] > lengths_[y]) return false;
    if (lengths_[x] == lengths_[y]) return x == y;
    if (lengths_[x] == 0) return true;
    int s = 0;
    while (ascent_[y][s]) ++s;
    y = static_cast<std::size_t>(right_[y][s]);
    if (!ascent_[x][s]) x = static_cast<std::size_t>(right_[x][s]);
  }
}

std::string word_to_string(std::span<const int> word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
  return os.str();
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ValidationError("malformed word token '" + tok + "'");
    }
    if (pos != tok.size() || v < 0) throw ValidationError("malformed word token '" + tok + "'");
    word.push_back(v);
  }
  return word;
}

}  // namespace tiltkit
