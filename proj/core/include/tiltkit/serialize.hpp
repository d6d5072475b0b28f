#pragma once

// JSON forms of the domain types. Object keys are emitted in sorted order and
// arrays in the order of the underlying (deterministic) containers.

#include <nlohmann/json.hpp>

#include "tiltkit/charformula.hpp"
#include "tiltkit/linkage.hpp"

namespace tiltkit {

using json = nlohmann::json;

/// {"type": "B2", "isogeny": "adjoint"} or
/// {"rank": r, "simple_roots": [[...]], "simple_coroots": [[...]]}.
RootDatum datum_from_json(const json& j);
json datum_to_json(const RootDatum& d);

json to_json(const Character& c);
Character character_from_json(const json& j);

json to_json(const LaurentPoly& p);  // [[exponent, coeff], ...]
LaurentPoly laurent_from_json(const json& j);

/// Canonical reduced word as an array of generator indices; parsing also accepts "1 0" strings.
json element_to_json(const AffineWeylGroup& g, const AffineWeylElt& w);
AffineWeylElt element_from_json(const AffineWeylGroup& g, const json& j);

json to_json(const Block& b);
Block block_from_json(const json& j);

json to_json(const ComponentDescriptor& c);
ComponentDescriptor component_from_json(const json& j);

json to_json(const DictionaryEntry& e);
DictionaryEntry dictionary_entry_from_json(const json& j);

/// [{"basis": "N", "weight": [...], "coeff": c}, ...]
json to_json(const CharacterExpr& e);
CharacterExpr expr_from_json(const json& j, CharacterExpr::Basis if_empty = CharacterExpr::Basis::nabla);

}  // namespace tiltkit
