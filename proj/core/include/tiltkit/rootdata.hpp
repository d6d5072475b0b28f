#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tiltkit/linalg.hpp"

namespace tiltkit {

enum class Isogeny { adjoint, simply_connected };

std::string_view to_string(Isogeny iso);
Isogeny parse_isogeny(std::string_view s);

/// Irreducible component of the Dynkin diagram.
struct DynkinComponent {
  std::vector<int> simple_indices;
  int highest_root = -1;    // index into positive_roots()
  int highest_coroot = -1;  // index into positive_coroots()
  int coxeter_number = 0;
};

/// An element of the finite Weyl group, acting on X^vee.
struct FiniteWeylElement {
  std::vector<int> word;  // reduced word, product read left to right
  IntMat on_coweights;
};

/// A root datum (X, R, X^vee, R^vee) with the pairing taken to be the
/// coordinate dot product of Z^rank.
///
/// Positive roots are generated by reflection closure from the simple roots,
/// sorted by (height, simple-root coefficients descending). Positive coroots
/// are kept aligned with positive roots: positive_coroots()[i] is the coroot
/// of positive_roots()[i].
class RootDatum {
 public:
  /// Type strings: A_n, B_n, C_n, D_n, E6, E7, E8, F4, G2 and products
  /// joined by 'x' (e.g. "A1xA1"). Underscores are optional.
  static RootDatum from_type(std::string_view type, Isogeny iso);

  static RootDatum from_matrices(int rank, std::vector<IntVec> simple_roots,
                                 std::vector<IntVec> simple_coroots);

  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  bool is_semisimple() const { return semisimple_rank() == rank_; }
  bool is_irreducible() const { return components_.size() == 1; }

  const std::string& label() const { return label_; }
  std::optional<Isogeny> isogeny() const { return isogeny_; }

  const std::vector<IntVec>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVec>& simple_coroots() const { return simple_coroots_; }
  const IntMat& cartan() const { return cartan_; }

  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
  /// Coefficients of positive_roots()[i] in the simple roots.
  const std::vector<IntVec>& root_coefficients() const { return root_coeffs_; }
  const std::vector<IntVec>& coroot_coefficients() const { return coroot_coeffs_; }
  std::size_t num_positive_roots() const { return pos_roots_.size(); }

  /// All roots: positive roots first, then their negatives in the same order.
  IntVec root(int index) const;
  IntVec coroot(int index) const;
  std::size_t num_roots() const { return 2 * pos_roots_.size(); }
  std::optional<int> root_index(std::span<const Int> v) const;

  const std::vector<DynkinComponent>& components() const { return components_; }
  /// Coxeter number; for reducible data the maximum over components.
  int coxeter_number() const;
  /// Highest root / highest coroot of an irreducible datum.
  const IntVec& highest_root() const;
  const IntVec& highest_coroot() const;

  /// 2 rho^vee, always integral.
  const IntVec& two_rho_vee() const { return two_rho_vee_; }
  bool rho_vee_integral() const;
  /// rho^vee itself; throws ValidationError when it is not in X^vee.
  IntVec rho_vee() const;

  Int pair(std::span<const Int> coweight, std::span<const Int> weight) const { return dot(coweight, weight); }

  IntVec reflect_coweight(int simple, std::span<const Int> y) const;
  IntVec reflect_weight(int simple, std::span<const Int> x) const;
  IntMat simple_reflection_matrix(int simple) const;  // on X^vee

  bool is_dominant(std::span<const Int> coweight) const;
  IntVec dominant_conjugate(std::span<const Int> coweight) const;
  bool in_coroot_lattice(std::span<const Int> coweight) const;
  /// Coefficients of a coweight in the simple coroots, if it lies in their Q-span.
  std::optional<std::vector<Rational>> coroot_coordinates(std::span<const Int> coweight) const;

  /// Integer symmetrizer d_i with (a_i^vee, a_j^vee) = d_i <a_j^vee, a_i> symmetric.
  const IntVec& coroot_symmetrizer() const { return symmetrizer_; }

  /// Stable 16-hex-digit fingerprint of the simple roots and coroots.
  std::string hash() const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.simple_roots_ == b.simple_roots_ && a.simple_coroots_ == b.simple_coroots_;
  }

 private:
  RootDatum() = default;
  void derive();

  int rank_ = 0;
  std::string label_;
  std::optional<Isogeny> isogeny_;
  std::vector<IntVec> simple_roots_;
  std::vector<IntVec> simple_coroots_;
  IntMat cartan_;
  std::vector<Rational> cartan_inverse_;  // row-major k x k
  std::vector<IntVec> pos_roots_;
  std::vector<IntVec> pos_coroots_;
  std::vector<IntVec> root_coeffs_;
  std::vector<IntVec> coroot_coeffs_;
  IntVec two_rho_vee_;
  IntVec symmetrizer_;
  std::vector<DynkinComponent> components_;
};

/// Cartan matrix A_ij = <a_i^vee, a_j> of a type string (Bourbaki labelling).
IntMat cartan_matrix_of_type(std::string_view type);

/// Enumerate the finite Weyl group by BFS over simple reflections.
/// Limited to semisimple rank <= 4.
std::vector<FiniteWeylElement> weyl_elements(const RootDatum& d);

/// Weight multiplicities of a representation of the dual group, keyed by coweight.
struct Character {
  std::map<IntVec, Int> weight_mults;

  Int total_mass() const;
  Int multiplicity(const IntVec& w) const;
  Character& operator+=(const Character& o);
  Character scaled(Int c) const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// prod_{a > 0} <lambda + rho^vee, a> / <rho^vee, a>.
std::uint64_t weyl_dim(const RootDatum& d, std::span<const Int> lambda);

/// Character of the irreducible dual-group module of highest weight lambda
/// in characteristic zero, by Freudenthal's multiplicity formula.
Character weyl_character(const RootDatum& d, std::span<const Int> lambda);

}  // namespace tiltkit
