#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tiltkit/affine_weyl.hpp"

namespace tiltkit {

/// alpha + m hbar; root_index refers to RootDatum::root (positives, then negatives).
struct AffineRoot {
  int root_index = 0;
  Int m = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

enum class FacetKind { thin, full, partial };
std::string_view to_string(FacetKind k);
FacetKind parse_facet_kind(std::string_view s);

/// Facet of the level-n alcove closure containing the base point, with its
/// pointwise stabilizer.
struct FacetDescriptor {
  QPoint base_point;                 // lies in the closure of a_n
  Int level = 0;
  std::vector<AffineRoot> vanishing;  // alpha > 0, m in {0, 1}, f^n vanishing at base_point
  std::vector<int> stabilizer_generators;  // subset of S_aff
  std::size_t stabilizer_order = 1;
  FacetKind kind = FacetKind::full;
};

/// f^n_{alpha + m hbar}(v) = <alpha, v> + n m.
Rational eval_affine_root(const RootDatum& d, const AffineRoot& a, const QPoint& v, Int n);

/// s_{alpha + m hbar} .n v = v - f^n(v) alpha^vee.
QPoint reflect(const RootDatum& d, const AffineRoot& a, const QPoint& v, Int n);

/// -n <= <v, alpha> <= 0 for all alpha > 0.
bool in_closed_fundamental_alcove(const RootDatum& d, const QPoint& v, Int n);

/// C_ell = { lambda : 0 <= <lambda + rho^vee, alpha> <= ell for alpha > 0 } in X^vee.
std::vector<IntVec> dot_fundamental_reps(const RootDatum& d, Int ell);

/// (-closure(a_ell)) in X^vee: 0 <= <mu, alpha> <= ell for alpha > 0.
std::vector<IntVec> box_fundamental_reps(const RootDatum& d, Int ell);

struct Projection {
  IntVec representative;
  AffineWeylElt witness;  // act(witness, representative, ell, mode) == mu
};

/// Greedy wall-crossing into the fundamental domain of the dot or box action.
Projection project_to_fundamental(const AffineWeylGroup& g, std::span<const Int> mu, Int ell, ActionMode mode);

/// Facet containing -lambda in closure(a_ell), for lambda in box_fundamental_reps.
FacetDescriptor facet_stabilizer(const AffineWeylGroup& g, std::span<const Int> lambda, Int ell);

}  // namespace tiltkit
