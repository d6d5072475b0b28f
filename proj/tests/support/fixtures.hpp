#pragma once

#include <memory>
#include <string>

#include "tiltkit/affine_weyl.hpp"
#include "tiltkit/rootdata.hpp"

namespace fx {

inline std::shared_ptr<const tiltkit::RootDatum> datum(const std::string& type,
                                                      tiltkit::Isogeny iso = tiltkit::Isogeny::adjoint) {
  return std::make_shared<const tiltkit::RootDatum>(tiltkit::RootDatum::from_type(type, iso));
}

inline std::shared_ptr<const tiltkit::AffineWeylGroup> group(const std::string& type,
                                                            tiltkit::Isogeny iso = tiltkit::Isogeny::adjoint) {
  return std::make_shared<const tiltkit::AffineWeylGroup>(datum(type, iso));
}

// Affine A1 generator indices: 0 is the finite s_1, 1 is the affine s_0.
inline constexpr int s1 = 0;
inline constexpr int s0 = 1;

inline tiltkit::AffineWeylElt word(const tiltkit::AffineWeylGroup& g, std::initializer_list<int> w) {
  std::vector<int> v(w);
  return g.from_word(v);
}

}  // namespace fx
