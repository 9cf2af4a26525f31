#pragma once

#include <metstruct/structure.hpp>

#include <array>
#include <cstdint>

namespace metstruct {

/// Algebra elements are labelled by subset bitmasks.
using Element = std::uint64_t;
using ElementTuple = std::vector<Element>;

struct AlgebraRelation {
  int arity = 1;
  std::set<ElementTuple> tuples;

  friend bool operator==(const AlgebraRelation&, const AlgebraRelation&) = default;
};

/// A finite Boolean algebra given by operation graphs, with one relation per symbol
/// holding the tuples (a_1, ..., a_k) whose product misses the original relation.
struct BooleanStructure {
  std::vector<Element> elements;
  Element zero = 0;
  Element one = 0;
  std::vector<std::array<Element, 2>> negation;  // (a, not a)
  std::vector<std::array<Element, 3>> meet;      // (a, b, a and b)
  std::vector<std::array<Element, 3>> join;      // (a, b, a or b)
  std::map<std::string, AlgebraRelation> relations;

  friend bool operator==(const BooleanStructure&, const BooleanStructure&) = default;
};

inline constexpr std::size_t kMaxStonePoints = 12;
inline constexpr std::uint64_t kMaxAlgebraRelationTuples = std::uint64_t{1} << 24;

/// Does R meet a_1 x ... x a_k?
inline bool product_meets(const Relation& rel, const ElementTuple& sets) {
  for (const auto& t : rel.tuples) {
    bool inside = true;
    for (std::size_t i = 0; i < t.size() && inside; ++i) inside = (sets[i] >> t[i]) & 1u;
    if (inside) return true;
  }
  return false;
}

/// Power-set algebra of a finite discrete structure with complement-coded relations.
inline BooleanStructure clopen_algebra(const MetricStructure& m) {
  const std::size_t n = m.size();
  if (n == 0 || n > kMaxStonePoints)
    throw InvalidInput("clopen_algebra: between 1 and " + std::to_string(kMaxStonePoints) + " points supported");
  const Element count = Element{1} << n;
  BooleanStructure a;
  a.zero = 0;
  a.one = count - 1;
  for (Element x = 0; x < count; ++x) {
    a.elements.push_back(x);
    a.negation.push_back({x, a.one & ~x});
    for (Element y = 0; y < count; ++y) {
      a.meet.push_back({x, y, x & y});
      a.join.push_back({x, y, x | y});
    }
  }
  for (const auto& [name, rel] : m.relations) {
    if (rel.arity * n >= 64 || (std::uint64_t{1} << (rel.arity * n)) > kMaxAlgebraRelationTuples)
      throw InvalidInput("clopen_algebra: relation '" + name + "' is too large to encode");
    AlgebraRelation coded{rel.arity, {}};
    ElementTuple sets(rel.arity, 0);
    while (true) {
      if (!product_meets(rel, sets)) coded.tuples.insert(sets);
      int pos = rel.arity - 1;
      while (pos >= 0 && ++sets[pos] == count) sets[pos--] = 0;
      if (pos < 0) break;
    }
    a.relations.emplace(name, std::move(coded));
  }
  return a;
}

namespace detail {

struct ElementIndex {
  std::map<Element, int> position;

  explicit ElementIndex(const std::vector<Element>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (!position.emplace(elements[i], static_cast<int>(i)).second)
        throw InvalidInput("algebra lists an element twice");
  }
  int at(Element e) const {
    auto it = position.find(e);
    if (it == position.end()) throw InvalidInput("operation refers to unknown element " + std::to_string(e));
    return it->second;
  }
};

template <std::size_t Arity>
std::vector<int> operation_table(const ElementIndex& idx, const std::vector<std::array<Element, Arity>>& graph,
                                 std::size_t size, const char* what) {
  constexpr std::size_t inputs = Arity - 1;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < inputs; ++i) cells *= size;
  std::vector<int> table(cells, -1);
  for (const auto& row : graph) {
    std::size_t cell = 0;
    for (std::size_t i = 0; i < inputs; ++i) cell = cell * size + idx.at(row[i]);
    const int value = idx.at(row[inputs]);
    if (table[cell] >= 0 && table[cell] != value)
      throw InvalidInput(std::string(what) + " graph is not a function");
    table[cell] = value;
  }
  for (int v : table)
    if (v < 0) throw InvalidInput(std::string(what) + " graph is not total");
  return table;
}

}  // namespace detail

/// Recovers the finite discrete structure on the atoms of a Boolean structure.
///
/// The algebra is verified to be Boolean by checking that a -> {atoms below a} is a
/// bijection onto all subsets of atoms that carries 0, 1 and the three operations to
/// their set-theoretic counterparts. A tuple of atoms is in R exactly when it is not in
/// the coded relation.
inline MetricStructure stone_decode(const BooleanStructure& a) {
  const std::size_t m = a.elements.size();
  if (m == 0) throw InvalidInput("stone_decode: empty algebra");
  const detail::ElementIndex idx(a.elements);
  const auto neg = detail::operation_table<2>(idx, a.negation, m, "negation");
  const auto meet = detail::operation_table<3>(idx, a.meet, m, "meet");
  const auto join = detail::operation_table<3>(idx, a.join, m, "join");
  const int zero = idx.at(a.zero);
  const int one = idx.at(a.one);

  auto below = [&](int x, int y) { return meet[x * m + y] == x; };
  std::vector<int> atoms;
  for (std::size_t x = 0; x < m; ++x) {
    if (static_cast<int>(x) == zero) continue;
    bool minimal = true;
    for (std::size_t y = 0; y < m && minimal; ++y)
      if (static_cast<int>(y) != zero && y != x && below(y, x)) minimal = false;
    if (minimal) atoms.push_back(static_cast<int>(x));
  }
  if (atoms.size() >= 63 || (std::size_t{1} << atoms.size()) != m)
    throw InvalidInput("stone_decode: not a Boolean algebra (element count is not 2^atoms)");

  std::vector<std::uint64_t> repr(m, 0);
  std::vector<bool> seen(m, false);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (below(atoms[i], static_cast<int>(x))) repr[x] |= std::uint64_t{1} << i;
    if (repr[x] >= m || seen[repr[x]]) throw InvalidInput("stone_decode: not a Boolean algebra (atoms do not separate)");
    seen[repr[x]] = true;
  }
  const std::uint64_t full = m - 1;
  if (repr[zero] != 0 || repr[one] != full) throw InvalidInput("stone_decode: not a Boolean algebra (bounds)");
  for (std::size_t x = 0; x < m; ++x) {
    if (repr[neg[x]] != (full & ~repr[x])) throw InvalidInput("stone_decode: not a Boolean algebra (negation)");
    for (std::size_t y = 0; y < m; ++y) {
      if (repr[meet[x * m + y]] != (repr[x] & repr[y])) throw InvalidInput("stone_decode: not a Boolean algebra (meet)");
      if (repr[join[x * m + y]] != (repr[x] | repr[y])) throw InvalidInput("stone_decode: not a Boolean algebra (join)");
    }
  }

  MetricStructure out;
  for (int atom : atoms) out.points.push_back("a" + std::to_string(a.elements[atom]));
  out.metric = discrete_metric(atoms.size());
  for (const auto& [name, coded] : a.relations) {
    if (coded.arity <= 0) throw InvalidInput("relation '" + name + "' has nonpositive arity");
    for (const auto& t : coded.tuples) {
      if (static_cast<int>(t.size()) != coded.arity) throw InvalidInput("relation '" + name + "' has a malformed tuple");
      for (Element e : t) idx.at(e);
    }
    Relation rel{coded.arity, {}};
    for_each_tuple(static_cast<int>(atoms.size()), coded.arity, [&](const Tuple& t) {
      ElementTuple labels(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) labels[i] = a.elements[atoms[t[i]]];
      if (!coded.tuples.count(labels)) rel.tuples.insert(t);
      return true;
    });
    out.relations.emplace(name, std::move(rel));
  }
  return out;
}

}  // namespace metstruct
