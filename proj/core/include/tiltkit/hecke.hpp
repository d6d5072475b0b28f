#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "tiltkit/affine_weyl.hpp"
#include "tiltkit/laurent.hpp"

namespace tiltkit {

/// Finitely supported combination of standard basis vectors, keyed by the
/// index of the basis element in the owning KazhdanLusztigBasis table.
using HeckeVector = std::map<int, LaurentPoly>;
/// Element of the antispherical module in the basis N_w, w in ^fW_aff.
using AsphElt = HeckeVector;

enum class HeckeModuleKind {
  antispherical,  // basis N_w, w minimal in W_f w
  regular,        // the Hecke algebra itself, basis H_w
};

/// Kazhdan-Lusztig basis of the antispherical module or of the affine Hecke
/// algebra, in Soergel's normalization (H_s^2 = (v^{-1} - v) H_s + 1,
/// underline H_s = H_s + v). Columns are computed layer by layer in length;
/// columns of one layer are independent and may be filled by several workers.
///
/// Thread-safe: extension takes an exclusive lock, lookups a shared one.
class KazhdanLusztigBasis {
 public:
  KazhdanLusztigBasis(std::shared_ptr<const AffineWeylGroup> group, HeckeModuleKind kind, unsigned threads = 1);

  HeckeModuleKind kind() const { return kind_; }
  const AffineWeylGroup& group() const { return *group_; }

  /// Compute every basis element of length <= max_len.
  void ensure(int max_len);
  int computed_length() const;

  /// Index of w (extending the table as needed). Throws ValidationError for
  /// elements outside ^fW in the antispherical case.
  int index(const AffineWeylElt& w);
  AffineWeylElt element(int index) const;
  int length(int index) const;

  /// Right action of underline H_s on a vector of the module.
  HeckeVector mult_underline_Hs(const HeckeVector& x, int s);

  /// underline N_w (or underline H_w) in the standard basis.
  HeckeVector basis_element(const AffineWeylElt& w);
  HeckeVector basis_element(int index);
  /// Coefficient of the standard basis vector y in the KL basis element w.
  LaurentPoly polynomial(const AffineWeylElt& y, const AffineWeylElt& w);

  /// Convert a vector to (element, coefficient) pairs.
  std::vector<std::pair<AffineWeylElt, LaurentPoly>> expand(const HeckeVector& x) const;

 private:
  void ensure_locked(int max_len);
  HeckeVector mult_locked(const HeckeVector& x, int s) const;
  HeckeVector compute_column(int w) const;
  void check_column(int w, const HeckeVector& col) const;

  std::shared_ptr<const AffineWeylGroup> group_;
  HeckeModuleKind kind_;
  unsigned threads_;
  mutable std::shared_mutex mutex_;
  ElementTable table_;
  std::vector<HeckeVector> columns_;
  int filled_ = -1;
};

}  // namespace tiltkit
