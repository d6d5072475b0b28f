#include "tiltkit/serialize.hpp"

#include "tiltkit/error.hpp"

namespace tiltkit {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

}  // namespace

RootDatum datum_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("datum must be a JSON object");
  if (j.contains("type")) {
    if (j.contains("simple_roots") || j.contains("simple_coroots"))
      throw ValidationError("datum: give either a type or explicit matrices, not both");
    Isogeny iso = j.contains("isogeny") ? parse_isogeny(get<std::string>(j, "isogeny")) : Isogeny::adjoint;
    return RootDatum::from_type(get<std::string>(j, "type"), iso);
  }
  if (j.contains("isogeny")) throw ValidationError("datum: an isogeny flag only applies to a type string");
  return RootDatum::from_matrices(get<int>(j, "rank"), get<std::vector<IntVec>>(j, "simple_roots"),
                                  get<std::vector<IntVec>>(j, "simple_coroots"));
}

json datum_to_json(const RootDatum& d) {
  json j{{"rank", d.rank()},
         {"simple_roots", d.simple_roots()},
         {"simple_coroots", d.simple_coroots()},
         {"hash", d.hash()},
         {"label", d.label()}};
  // informational only; datum_from_json reads the matrices
  if (d.isogeny()) j["source"] = {{"type", d.label()}, {"isogeny", std::string(to_string(*d.isogeny()))}};
  return j;
}

json to_json(const Character& c) {
  json a = json::array();
  for (const auto& [w, m] : c.weight_mults) a.push_back({{"weight", w}, {"mult", m}});
  return a;
}

Character character_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("character must be a JSON array");
  Character c;
  for (const auto& e : j) c.weight_mults[get<IntVec>(e, "weight")] += get<Int>(e, "mult");
  return c;
}

json to_json(const LaurentPoly& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({e, c});
  return a;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("Laurent polynomial must be a JSON array");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ValidationError("Laurent term must be [exponent, coeff]");
    p += LaurentPoly::monomial(t[1].get<Int>(), t[0].get<int>());
  }
  return p;
}

json element_to_json(const AffineWeylGroup& g, const AffineWeylElt& w) { return g.reduced_word(w); }

AffineWeylElt element_from_json(const AffineWeylGroup& g, const json& j) {
  if (j.is_string()) return g.from_word(parse_word(j.get<std::string>()));
  if (!j.is_array()) throw ValidationError("element must be an array of generator indices");
  return g.from_word(j.get<std::vector<int>>());
}

json to_json(const Block& b) {
  return {{"representative", b.representative},
          {"singular_generators", b.singular_generators},
          {"stabilizer_order", b.stabilizer_order},
          {"regular", b.is_regular()}};
}

Block block_from_json(const json& j) {
  Block b;
  b.representative = get<IntVec>(j, "representative");
  b.singular_generators = get<std::vector<int>>(j, "singular_generators");
  b.stabilizer_order = get<std::size_t>(j, "stabilizer_order");
  return b;
}

json to_json(const ComponentDescriptor& c) {
  json vanishing = json::array();
  for (const auto& a : c.facet.vanishing) vanishing.push_back({a.root_index, a.m});
  return {{"index", c.index},
          {"kind", std::string(to_string(c.kind))},
          {"stabilizer_order", c.stabilizer_order},
          {"stabilizer_generators", c.facet.stabilizer_generators},
          {"vanishing", vanishing},
          {"base_point", {{"num", c.facet.base_point.num}, {"den", c.facet.base_point.den}}},
          {"level", c.facet.level}};
}

ComponentDescriptor component_from_json(const json& j) {
  ComponentDescriptor c;
  c.index = get<IntVec>(j, "index");
  c.kind = parse_facet_kind(get<std::string>(j, "kind"));
  c.stabilizer_order = get<std::size_t>(j, "stabilizer_order");
  c.facet.kind = c.kind;
  c.facet.stabilizer_order = c.stabilizer_order;
  c.facet.stabilizer_generators = get<std::vector<int>>(j, "stabilizer_generators");
  for (const auto& v : get<json>(j, "vanishing")) {
    if (!v.is_array() || v.size() != 2) throw ValidationError("vanishing entry must be [root_index, m]");
    c.facet.vanishing.push_back({v[0].get<int>(), v[1].get<Int>()});
  }
  const json bp = get<json>(j, "base_point");
  c.facet.base_point = {get<IntVec>(bp, "num"), get<Int>(bp, "den")};
  c.facet.level = get<Int>(j, "level");
  return c;
}

json to_json(const DictionaryEntry& e) {
  return {{"block", e.block},
          {"component", e.component},
          {"block_stabilizer_order", e.block_stabilizer_order},
          {"component_stabilizer_order", e.component_stabilizer_order}};
}

DictionaryEntry dictionary_entry_from_json(const json& j) {
  return {get<IntVec>(j, "block"), get<IntVec>(j, "component"), get<std::size_t>(j, "block_stabilizer_order"),
          get<std::size_t>(j, "component_stabilizer_order")};
}

json to_json(const CharacterExpr& e) {
  json a = json::array();
  // Reverse key order, so [N(6)] is listed before [N(4)].
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it)
    a.push_back({{"basis", std::string(to_string(e.basis))}, {"weight", it->first}, {"coeff", it->second}});
  return a;
}

CharacterExpr expr_from_json(const json& j, CharacterExpr::Basis if_empty) {
  if (!j.is_array()) throw ValidationError("character expression must be a JSON array");
  CharacterExpr e;
  e.basis = if_empty;
  bool first = true;
  for (const auto& t : j) {
    auto b = parse_basis(get<std::string>(t, "basis"));
    if (!first && b != e.basis) throw ValidationError("character expression mixes bases");
    e.basis = b;
    first = false;
    e.add(get<IntVec>(t, "weight"), get<Int>(t, "coeff"));
  }
  return e;
}

}  // namespace tiltkit
