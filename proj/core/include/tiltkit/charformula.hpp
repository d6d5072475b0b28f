#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tiltkit/hecke.hpp"
#include "tiltkit/linkage.hpp"
#include "tiltkit/pcan.hpp"

namespace tiltkit {

/// Integer combination of classes [N(mu)], [L(mu)] or [T(mu)], mu dominant.
struct CharacterExpr {
  enum class Basis { nabla, simple, tilting };

  Basis basis = Basis::nabla;
  std::map<IntVec, Int> terms;  // no zero coefficients

  void add(const IntVec& mu, Int coeff);
  Int coefficient(const IntVec& mu) const;
  friend bool operator==(const CharacterExpr&, const CharacterExpr&) = default;
};

std::string_view to_string(CharacterExpr::Basis b);  // "N", "L", "T"
CharacterExpr::Basis parse_basis(std::string_view s);

/// [T(w .ell lambda)] = sum over y in W^(lambda) of ^l n_{y,w}(1) [N(y .ell lambda)].
CharacterExpr tilting_character(const LinkageContext& ctx, const Block& block, const AffineWeylElt& w,
                                const PCanTable& table);

/// sum_mu c_mu ch N(mu), by Freudenthal. Nabla basis only.
Character expand_to_weights(const RootDatum& d, const CharacterExpr& expr);

/// sum_mu c_mu dim N(mu).
Int expr_dimension(const RootDatum& d, const CharacterExpr& expr);

/// Elements w of ^fW with <w []ell rho^vee, alpha_0> < ell (h - 1), alpha_0 the
/// highest root; or, when truncated, all of ^fW up to a length bound.
struct YRegion {
  Int ell = 0;
  int coxeter_number = 0;
  bool truncated = false;
  std::vector<AffineWeylElt> members;  // by length, then BFS order
  std::vector<Rational> witnesses;     // <w []ell rho^vee, alpha_0>
  std::optional<std::string> warning;

  bool contains(const AffineWeylElt& w) const;
  std::optional<std::size_t> position(const AffineWeylElt& w) const;
};

/// Throws ValidationError for reducible data; sets a warning when ell < 2h - 2.
YRegion y_region(const LinkageContext& ctx, int max_length = 64);
/// ^fW up to length max_length, used as a stand-in for Y on small examples.
YRegion truncated_fW_region(const LinkageContext& ctx, int max_length);

/// The map y -> y^ as explicit pairs. File lines: "y_word | yhat_word".
class HatMap {
 public:
  HatMap() = default;
  /// Throws DataFileError on duplicate sources or non-injective data.
  explicit HatMap(std::vector<std::pair<AffineWeylElt, AffineWeylElt>> pairs);

  const std::vector<std::pair<AffineWeylElt, AffineWeylElt>>& pairs() const { return pairs_; }
  const AffineWeylElt* find(const AffineWeylElt& y) const;
  /// Every member of the region has an image in ^fW. Throws DataFileError.
  void validate_on(const AffineWeylGroup& g, const YRegion& region) const;

 private:
  std::vector<std::pair<AffineWeylElt, AffineWeylElt>> pairs_;
  std::unordered_map<AffineWeylElt, std::size_t, AffineWeylEltHash> index_;
};

HatMap parse_hat_file(std::istream& in, const AffineWeylGroup& g);
HatMap load_hat_file(const std::string& path, const AffineWeylGroup& g);
void write_hat_file(std::ostream& out, const HatMap& hat, const AffineWeylGroup& g);

/// [nabla(w .ell 0)] = sum_{y in Y} ^l n_{w, y^}(1) [L(y .ell 0)].
CharacterExpr nabla_in_simples(const LinkageContext& ctx, const YRegion& region, const AffineWeylElt& w,
                               const PCanTable& table, const HatMap& hat);

/// [L(w .ell 0)] = sum_{y in Y} (-1)^{l(w)+l(y)} h_{y,w}(1) [nabla(y .ell 0)],
/// h from the KL basis of the affine Hecke algebra.
CharacterExpr simples_in_nablas_kl(const LinkageContext& ctx, const YRegion& region, const AffineWeylElt& w,
                                   KazhdanLusztigBasis& regular);

using IntMatrix = std::vector<std::vector<Int>>;

/// Exact inverse of a matrix that is lower or upper unitriangular after
/// permuting rows and columns by `order` (order[k] = index of the k-th element).
/// Throws ValidationError otherwise.
IntMatrix invert_unitriangular(const IntMatrix& m, const std::vector<int>& order);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace tiltkit
