#pragma once

#include <metstruct/bilipschitz.hpp>
#include <metstruct/embeddings.hpp>
#include <metstruct/group_structures.hpp>
#include <metstruct/heaps.hpp>
#include <metstruct/stone.hpp>

#include <nlohmann/json.hpp>

namespace metstruct::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(std::string("malformed ") + what);
  }
}

}  // namespace detail

/// Accepts "n/d" strings, integer strings or bare JSON integers.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidInput("rational must be a string or an integer");
}

inline json rational_to_json(const Rational& r) { return format_rational(r); }

inline std::set<Tuple> tuples_from_json(const json& j) {
  return detail::as<std::set<Tuple>>(j, "tuple list");
}

inline json tuples_to_json(const std::set<Tuple>& tuples) {
  json out = json::array();
  for (const auto& t : tuples) out.push_back(t);
  return out;
}

inline RelationMap relations_from_json(const json& j) {
  RelationMap out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw InvalidInput("relations must be an object");
  for (const auto& [name, body] : j.items())
    out[name] = Relation{detail::as<int>(detail::field(body, "arity"), "arity"),
                         tuples_from_json(detail::field(body, "tuples"))};
  return out;
}

inline json relations_to_json(const RelationMap& relations) {
  json out = json::object();
  for (const auto& [name, rel] : relations) out[name] = {{"arity", rel.arity}, {"tuples", tuples_to_json(rel.tuples)}};
  return out;
}

inline DistanceMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("metric must be an array of rows");
  DistanceMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw InvalidInput("metric must be square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

inline json matrix_to_json(const DistanceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Parses a structure without validating the metric axioms (see validate_structure).
inline MetricStructure structure_from_json(const json& j) {
  MetricStructure s;
  s.points = detail::as<std::vector<std::string>>(detail::field(j, "points"), "point list");
  s.metric = matrix_from_json(detail::field(j, "metric"));
  if (s.metric.size() != s.points.size()) throw InvalidInput("metric size differs from point count");
  if (j.contains("relations")) s.relations = relations_from_json(j.at("relations"));
  return s;
}

inline json structure_to_json(const MetricStructure& s) {
  return {{"points", s.points}, {"metric", matrix_to_json(s.metric)}, {"relations", relations_to_json(s.relations)}};
}

inline json report_to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return {{"ok", r.ok()}, {"violations", violations}};
}

inline std::map<std::string, std::set<Tuple>> constraints_from_json(const json& j) {
  std::map<std::string, std::set<Tuple>> out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw InvalidInput("constraints must be an object");
  for (const auto& [name, tuples] : j.items()) out[name] = tuples_from_json(tuples);
  return out;
}

inline json constraints_to_json(const std::map<std::string, std::set<Tuple>>& constraints) {
  json out = json::object();
  for (const auto& [name, tuples] : constraints) out[name] = tuples_to_json(tuples);
  return out;
}

/// {"n":2, "constraints":{"R":[[0,1]]}}; positions are 0-based.
inline ZetaPattern zeta_from_json(const json& j) {
  ZetaPattern z;
  z.n = detail::as<int>(detail::field(j, "n"), "pattern length");
  if (j.contains("constraints")) z.constraints = constraints_from_json(j.at("constraints"));
  return z;
}

/// {"n":2, "constraints":{...}, "radii":["1","0"], "relation_radii":[{"relation":"R","k":2,"t":"0"}]}
inline LipZetaPattern lip_pattern_from_json(const json& j) {
  LipZetaPattern z;
  z.n = detail::as<int>(detail::field(j, "n"), "pattern length");
  if (j.contains("constraints")) z.constraints = constraints_from_json(j.at("constraints"));
  for (const auto& r : detail::field(j, "radii")) z.radii.push_back(rational_from_json(r));
  if (j.contains("relation_radii"))
    for (const auto& entry : j.at("relation_radii"))
      z.relation_radii[{detail::as<std::string>(detail::field(entry, "relation"), "relation name"),
                        detail::as<int>(detail::field(entry, "k"), "prefix length")}] =
          rational_from_json(detail::field(entry, "t"));
  return z;
}

inline json lip_pattern_to_json(const LipZetaPattern& z) {
  json radii = json::array();
  for (const auto& r : z.radii) radii.push_back(rational_to_json(r));
  json rel = json::array();
  for (const auto& [key, t] : z.relation_radii)
    rel.push_back({{"relation", key.first}, {"k", key.second}, {"t", rational_to_json(t)}});
  return {{"n", z.n}, {"constraints", constraints_to_json(z.constraints)}, {"radii", radii}, {"relation_radii", rel}};
}

/// A single pattern object or an array of them.
inline std::vector<LipZetaPattern> lip_patterns_from_json(const json& j) {
  std::vector<LipZetaPattern> out;
  if (j.is_array())
    for (const auto& p : j) out.push_back(lip_pattern_from_json(p));
  else
    out.push_back(lip_pattern_from_json(j));
  return out;
}

inline json signature_to_json(const Signature& sig) {
  json entries = json::array();
  for (const auto& e : sig.entries) {
    json patterns = json::object();
    for (const auto& [name, tuples] : e.patterns) patterns[name] = tuples;
    entries.push_back({{"matrix", matrix_to_json(e.matrix)}, {"patterns", patterns}});
  }
  return {{"n", sig.n}, {"entries", entries}};
}

inline CayleyTable group_table_from_json(const json& j) {
  const int order = detail::as<int>(detail::field(j, "order"), "order");
  auto table = detail::as<CayleyTable>(detail::field(j, "table"), "Cayley table");
  if (static_cast<int>(table.size()) != order) throw InvalidInput("table size differs from order");
  return table;
}

inline FiniteGroup group_from_json(const json& j) { return FiniteGroup(group_table_from_json(j)); }

inline json group_to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

inline HeapOpTable heap_table_from_json(const json& j) {
  const int order = detail::as<int>(detail::field(j, "order"), "order");
  auto op = detail::as<HeapOpTable>(detail::field(j, "op"), "heap table");
  if (static_cast<int>(op.size()) != order) throw InvalidInput("table size differs from order");
  return op;
}

inline json heap_to_json(const HeapTable& h) { return {{"order", h.order()}, {"op", h.table()}}; }

/// Elements are subset bitmasks; operation graphs are lists of element rows.
inline json boolean_to_json(const BooleanStructure& a) {
  json rel = json::object();
  for (const auto& [name, r] : a.relations) rel[name] = {{"arity", r.arity}, {"tuples", r.tuples}};
  return {{"elements", a.elements}, {"zero", a.zero}, {"one", a.one}, {"neg", a.negation},
          {"meet", a.meet},         {"join", a.join}, {"relations", rel}};
}

inline BooleanStructure boolean_from_json(const json& j) {
  using detail::as;
  using detail::field;
  BooleanStructure a;
  a.elements = as<std::vector<Element>>(field(j, "elements"), "element list");
  a.zero = as<Element>(field(j, "zero"), "zero");
  a.one = as<Element>(field(j, "one"), "one");
  a.negation = as<std::vector<std::array<Element, 2>>>(field(j, "neg"), "negation graph");
  a.meet = as<std::vector<std::array<Element, 3>>>(field(j, "meet"), "meet graph");
  a.join = as<std::vector<std::array<Element, 3>>>(field(j, "join"), "join graph");
  if (j.contains("relations"))
    for (const auto& [name, body] : j.at("relations").items())
      a.relations[name] = AlgebraRelation{as<int>(field(body, "arity"), "arity"),
                                          as<std::set<ElementTuple>>(field(body, "tuples"), "tuple list")};
  return a;
}

inline json cube_points_to_json(const std::vector<CubePoint>& points) {
  json out = json::array();
  for (const auto& p : points) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(rational_to_json(c));
    out.push_back(std::move(coords));
  }
  return out;
}

}  // namespace metstruct::io
