#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tiltkit/linalg.hpp"
#include "tiltkit/rootdata.hpp"

namespace tiltkit {

/// Element w * t_lambda of W_f |x Z R^vee: finite part first, then translation.
///
/// The finite part is stored as its matrix on X^vee together with the
/// inverse matrix, so that products never need a matrix inversion.
struct AffineWeylElt {
  IntMat finite;
  IntMat finite_inv;
  IntVec translation;

  friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.finite == b.finite && a.translation == b.translation;
  }
};

struct AffineWeylEltHash {
  std::size_t operator()(const AffineWeylElt& x) const noexcept;
};

enum class ActionMode {
  dot,   // (t_lambda v) .n mu = v(mu + rho^vee) - rho^vee + n lambda
  box,   // (w t_lambda) []n mu = w(mu + n lambda)
  cdot,  // (w t_lambda) .n mu = w(mu - n lambda)
};

std::string_view to_string(ActionMode m);
ActionMode parse_action_mode(std::string_view s);

/// S_aff: the finite simple reflections in simple-root order, followed by one
/// affine reflection t_{beta^vee} s_beta per irreducible component.
struct SimpleReflectionSet {
  std::vector<AffineWeylElt> elements;
  int num_finite = 0;
  /// For affine generators: index of the component; -1 for finite ones.
  std::vector<int> component;
  /// For each generator the affine root alpha + m hbar whose reflection it is,
  /// as (index into RootDatum::root, m).
  std::vector<std::pair<int, int>> affine_roots;

  int size() const { return static_cast<int>(elements.size()); }
  bool is_finite(int s) const { return s < num_finite; }
};

/// The Coxeter system (W_aff, S_aff) attached to a root datum.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  const SimpleReflectionSet& simple_reflections() const { return gens_; }
  int num_generators() const { return gens_.size(); }

  AffineWeylElt identity() const;
  const AffineWeylElt& generator(int s) const;
  /// t_lambda; lambda must lie in the coroot lattice.
  AffineWeylElt translation(std::span<const Int> lambda) const;
  /// The affine reflection s_{alpha + m hbar} = t_{m alpha^vee} s_alpha.
  AffineWeylElt affine_reflection(int root_index, Int m) const;

  AffineWeylElt multiply(const AffineWeylElt& x, const AffineWeylElt& y) const;
  AffineWeylElt inverse(const AffineWeylElt& x) const;
  AffineWeylElt right_multiply(const AffineWeylElt& x, int s) const { return multiply(x, generator(s)); }
  AffineWeylElt left_multiply(int s, const AffineWeylElt& x) const { return multiply(generator(s), x); }

  /// Coxeter length, by the Iwahori-Matsumoto sum over positive roots.
  int length(const AffineWeylElt& x) const;
  bool bruhat_leq(const AffineWeylElt& x, const AffineWeylElt& y) const;

  IntVec act(const AffineWeylElt& x, std::span<const Int> mu, Int n, ActionMode mode) const;
  /// (t_lambda v)^* = t_{-lambda} v.
  AffineWeylElt star(const AffineWeylElt& x) const;

  bool is_min_in_Wf(const AffineWeylElt& x) const;
  /// Right descents s with l(xs) < l(x), ascending.
  std::vector<int> right_descents(const AffineWeylElt& x) const;
  std::vector<int> left_descents(const AffineWeylElt& x) const;

  /// All elements of length <= max_len, in BFS order (by length, then by
  /// canonical reduced word).
  std::vector<AffineWeylElt> enumerate(int max_len) const;
  /// Elements of length <= max_len that are minimal in their coset W_f x.
  std::vector<AffineWeylElt> enumerate_fW(int max_len) const;

  bool is_finite_parabolic(std::span<const int> subset) const;
  /// Order of the parabolic subgroup W_I; throws if W_I is infinite.
  std::size_t parabolic_order(std::span<const int> subset) const;
  /// Unique longest element of x W_I.
  AffineWeylElt max_in_coset(const AffineWeylElt& x, std::span<const int> subset) const;
  /// True iff l(xs) < l(x) for every s in the subset.
  bool is_max_in_coset(const AffineWeylElt& x, std::span<const int> subset) const;

  /// Canonical reduced word: repeatedly strip the lowest-index right descent.
  /// Product order is left to right.
  std::vector<int> reduced_word(const AffineWeylElt& x) const;
  AffineWeylElt from_word(std::span<const int> word) const;

  /// Check that x is compatible with this group (dimensions, coroot lattice).
  void validate(const AffineWeylElt& x) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  SimpleReflectionSet gens_;
};

/// Finite slice of W_aff (or of ^fW_aff) up to a length bound, with indices
/// and a right-multiplication table. Grows on demand.
class ElementTable {
 public:
  static constexpr int kNone = -1;

  /// restrict_to_fW: keep only elements minimal in W_f x.
  ElementTable(const AffineWeylGroup& group, bool restrict_to_fW);

  void extend_to(int max_len);
  int max_length() const { return max_len_; }
  bool restricted_to_fW() const { return restrict_fW_; }

  std::size_t size() const { return elements_.size(); }
  const AffineWeylElt& element(std::size_t i) const { return elements_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  /// Index of x, or kNone if x is not (yet) in the table.
  int index_of(const AffineWeylElt& x) const;
  /// Index of element(i) * s if it is in the table; for restricted tables,
  /// kNone also when the product leaves ^fW.
  int right(std::size_t i, int s) const { return right_[i][s]; }
  /// Whether element(i) * s is longer than element(i).
  bool ascent(std::size_t i, int s) const { return ascent_[i][s]; }
  /// Indices of elements with the given length.
  const std::vector<int>& layer(int len) const { return layers_.at(len); }
  bool leq(std::size_t x, std::size_t y) const;

  const AffineWeylGroup& group() const { return *group_; }

 private:
  const AffineWeylGroup* group_;
  bool restrict_fW_;
  int max_len_ = -1;
  std::vector<AffineWeylElt> elements_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<char>> ascent_;
  std::vector<std::vector<int>> layers_;
  std::unordered_map<AffineWeylElt, int, AffineWeylEltHash> index_;
};

std::string word_to_string(std::span<const int> word);
std::vector<int> parse_word(std::string_view text);

}  // namespace tiltkit
