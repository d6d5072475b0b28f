#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "tiltkit/alcove.hpp"
#include "tiltkit/affine_weyl.hpp"

namespace tiltkit {

/// W_aff-orbit of the dot action at level ell, keyed by its representative in C_ell.
struct Block {
  IntVec representative;
  std::vector<int> singular_generators;  // I_lambda
  std::size_t stabilizer_order = 1;      // |W_lambda|

  bool is_regular() const { return singular_generators.empty(); }
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockWeight {
  AffineWeylElt element;  // in W_aff^(lambda)
  IntVec weight;          // element .ell lambda, dominant
};

struct ComponentDescriptor {
  IntVec index;  // in (-closure(a_ell)) cap X^vee
  std::size_t stabilizer_order = 1;
  FacetKind kind = FacetKind::full;
  FacetDescriptor facet;
};

struct ComponentWitness {
  IntVec component;
  AffineWeylElt witness;  // witness []ell component == mu
};

struct DictionaryEntry {
  IntVec block;
  IntVec component;  // block + rho^vee
  std::size_t block_stabilizer_order = 1;
  std::size_t component_stabilizer_order = 1;
};

/// A root datum together with the characteristic parameter ell >= 2.
///
/// Block and component lists are computed once on first use and then shared
/// read-only; all methods are safe to call concurrently.
class LinkageContext {
 public:
  LinkageContext(std::shared_ptr<const RootDatum> datum, Int ell);

  const RootDatum& datum() const { return group_->datum(); }
  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }
  Int ell() const { return ell_; }

  Block block_of(std::span<const Int> mu) const;
  /// Block of a representative lambda in C_ell (no projection).
  Block block_at(std::span<const Int> lambda) const;
  const std::vector<Block>& blocks() const;

  /// w in W_aff^(lambda): maximal in w W_lambda and minimal in W_f w.
  bool in_block_coset_set(const Block& b, const AffineWeylElt& w) const;
  /// Elements of W_aff^(lambda) up to a length cap paired with w .ell lambda,
  /// ordered by length then canonical BFS order.
  std::vector<BlockWeight> block_dominant_weights(const Block& b, int max_length) const;

  const std::vector<ComponentDescriptor>& fixed_point_components() const;
  ComponentWitness component_of_weight(std::span<const Int> mu) const;
  std::vector<DictionaryEntry> blocks_vs_components_dictionary() const;

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
  Int ell_;
  mutable std::once_flag blocks_once_, components_once_;
  mutable std::vector<Block> blocks_;
  mutable std::vector<ComponentDescriptor> components_;
};

}  // namespace tiltkit
