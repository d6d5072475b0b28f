#include "tiltkit/linkage.hpp"

#include <algorithm>

#include "tiltkit/error.hpp"

namespace tiltkit {

LinkageContext::LinkageContext(std::shared_ptr<const RootDatum> datum, Int ell)
    : group_(std::make_shared<const AffineWeylGroup>(std::move(datum))), ell_(ell) {
  if (ell_ < 2) throw ValidationError("ell must be at least 2");
}

Block LinkageContext::block_at(std::span<const Int> lambda) const {
  const RootDatum& d = datum();
  if (!d.rho_vee_integral()) throw ValidationError("blocks require rho^vee in X^vee");
  for (const auto& a : d.positive_roots()) {
    Int p = dot(lambda, a) + dot(d.two_rho_vee(), a) / 2;
    if (p < 0 || p > ell_) throw ValidationError("block_at: " + to_string(lambda) + " is not in C_ell");
  }
  Block b;
  b.representative.assign(lambda.begin(), lambda.end());
  const auto& g = group();
  for (int s = 0; s < g.num_generators(); ++s)
    if (g.act(g.generator(s), lambda, ell_, ActionMode::dot) == b.representative) b.singular_generators.push_back(s);
  b.stabilizer_order = g.parabolic_order(b.singular_generators);
  return b;
}

Block LinkageContext::block_of(std::span<const Int> mu) const {
  if (!datum().rho_vee_integral()) throw ValidationError("blocks require rho^vee in X^vee");
  Projection p = project_to_fundamental(group(), mu, ell_, ActionMode::dot);
  return block_at(p.representative);
}

const std::vector<Block>& LinkageContext::blocks() const {
  std::call_once(blocks_once_, [this] {
    for (const auto& lambda : dot_fundamental_reps(datum(), ell_)) blocks_.push_back(block_at(lambda));
  });
  return blocks_;
}

bool LinkageContext::in_block_coset_set(const Block& b, const AffineWeylElt& w) const {
  return group().is_min_in_Wf(w) && group().is_max_in_coset(w, b.singular_generators);
}

std::vector<BlockWeight> LinkageContext::block_dominant_weights(const Block& b, int max_length) const {
  const auto& g = group();
  ElementTable table(g, true);
  table.extend_to(max_length);
  std::vector<BlockWeight> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    bool maximal = true;
    for (int s : b.singular_generators)
      if (table.ascent(i, s)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    IntVec weight = g.act(table.element(i), b.representative, ell_, ActionMode::dot);
    if (!datum().is_dominant(weight))
      throw std::logic_error("block_dominant_weights: produced a non-dominant weight " + to_string(weight));
    out.push_back({table.element(i), std::move(weight)});
  }
  return out;
}

const std::vector<ComponentDescriptor>& LinkageContext::fixed_point_components() const {
  std::call_once(components_once_, [this] {
    for (const auto& lambda : box_fundamental_reps(datum(), ell_)) {
      ComponentDescriptor c;
      c.index = lambda;
      c.facet = facet_stabilizer(group(), lambda, ell_);
      c.stabilizer_order = c.facet.stabilizer_order;
      c.kind = c.facet.kind;
      components_.push_back(std::move(c));
    }
  });
  return components_;
}

ComponentWitness LinkageContext::component_of_weight(std::span<const Int> mu) const {
  if (!datum().is_semisimple()) throw ValidationError("components require a semisimple root datum");
  Projection p = project_to_fundamental(group(), mu, ell_, ActionMode::box);
  return {std::move(p.representative), std::move(p.witness)};
}

std::vector<DictionaryEntry> LinkageContext::blocks_vs_components_dictionary() const {
  const RootDatum& d = datum();
  IntVec rho = d.rho_vee();
  const auto& bl = blocks();
  const auto& comps = fixed_point_components();
  if (bl.size() != comps.size()) throw std::logic_error("block and component counts differ");
  std::vector<DictionaryEntry> out;
  for (const auto& b : bl) {
    IntVec target = add(b.representative, rho);
    auto it = std::find_if(comps.begin(), comps.end(), [&](const ComponentDescriptor& c) { return c.index == target; });
    if (it == comps.end()) throw std::logic_error("no component matches block " + to_string(b.representative));
    out.push_back({b.representative, target, b.stabilizer_order, it->stabilizer_order});
  }
  return out;
}

}  // namespace tiltkit
