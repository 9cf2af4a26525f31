#pragma once

#include <metstruct/group_structures.hpp>

#include <stdexcept>

namespace metstruct {

/// Ternary operation table, op[x][y][z] = [x, y, z].
using HeapOpTable = std::vector<std::vector<std::vector<int>>>;

/// Witnesses listed per axiom before the report stops collecting.
inline constexpr std::size_t kMaxHeapWitnesses = 32;

/// Exhaustive check of para-associativity and the identity law.
inline ValidationReport validate_heap(const HeapOpTable& op) {
  ValidationReport report;
  const int n = static_cast<int>(op.size());
  if (n == 0) {
    report.violations.push_back({"nonempty", {}});
    return report;
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(op[x].size()) != n) {
      report.violations.push_back({"shape", {x}});
      return report;
    }
    for (int y = 0; y < n; ++y) {
      if (static_cast<int>(op[x][y].size()) != n) {
        report.violations.push_back({"shape", {x, y}});
        return report;
      }
      for (int z = 0; z < n; ++z)
        if (op[x][y][z] < 0 || op[x][y][z] >= n) report.violations.push_back({"closure", {x, y, z}});
    }
  }
  if (!report.ok()) return report;

  std::size_t identity_failures = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((op[a][a][b] != b || op[b][a][a] != b) && identity_failures++ < kMaxHeapWitnesses)
        report.violations.push_back({"identity-law", {a, b}});

  std::size_t assoc_failures = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int abc = op[a][b][c];
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            if (op[abc][d][e] != op[a][b][op[c][d][e]] && assoc_failures++ < kMaxHeapWitnesses)
              report.violations.push_back({"para-associativity", {a, b, c, d, e}});
      }
  return report;
}

/// A finite heap. Always valid once constructed.
class HeapTable {
 public:
  explicit HeapTable(HeapOpTable op) : op_(std::move(op)) {
    const ValidationReport report = validate_heap(op_);
    if (!report.ok()) throw InvalidInput("not a heap: " + describe(report));
  }

  int order() const { return static_cast<int>(op_.size()); }
  int operator()(int x, int y, int z) const { return op_[x][y][z]; }
  const HeapOpTable& table() const { return op_; }

  friend bool operator==(const HeapTable& a, const HeapTable& b) { return a.op_ == b.op_; }

 private:
  HeapOpTable op_;
};

/// [x, y, z] = x y^-1 z.
inline HeapTable heap_from_group(const FiniteGroup& g) {
  const int n = g.order();
  HeapOpTable op(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) op[x][y][z] = g.mul(g.mul(x, g.inverse(y)), z);
  return HeapTable(std::move(op));
}

inline void check_element(const HeapTable& h, int e) {
  if (e < 0 || e >= h.order()) throw InvalidInput("heap element out of range");
}

/// x . y = [x, e, y]; identity e, inverse [e, x, e].
inline FiniteGroup group_from_heap(const HeapTable& h, int e) {
  check_element(h, e);
  CayleyTable t(h.order(), std::vector<int>(h.order()));
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y) t[x][y] = h(x, e, y);
  FiniteGroup g(std::move(t));
  for (int x = 0; x < h.order(); ++x)
    if (g.inverse(x) != h(e, x, e)) throw std::logic_error("group_from_heap: inverse differs from [e, x, e]");
  return g;
}

/// x -> [a, e, x], checked to be an isomorphism from (H, x.y = [x,e,y]) onto
/// (H, x*y = [x,a,y]); also checks x*y = x . a^-1 . y on every pair.
inline Bijection base_change_iso(const HeapTable& h, int e, int a) {
  check_element(h, e);
  check_element(h, a);
  const FiniteGroup dot = group_from_heap(h, e);
  const FiniteGroup star = group_from_heap(h, a);
  const int a_inv = dot.inverse(a);
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      if (star.mul(x, y) != dot.mul(dot.mul(x, a_inv), y))
        throw std::logic_error("base_change_iso: x*y differs from x.a^-1.y");
  Bijection lambda(h.order());
  for (int x = 0; x < h.order(); ++x) lambda[x] = h(a, e, x);
  if (!is_group_isomorphism(dot, star, lambda)) throw std::logic_error("base_change_iso: left translation is not an isomorphism");
  return lambda;
}

inline const std::string kHeapGraph = "HeapGraph";

/// {(x, y, z, [x, y, z])}.
inline Relation heap_graph(const HeapTable& h) {
  Relation r{4, {}};
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      for (int z = 0; z < h.order(); ++z) r.tuples.insert({x, y, z, h(x, y, z)});
  return r;
}

/// Discrete metric structure carrying the heap graph; heap isomorphisms are exactly its isomorphisms.
inline MetricStructure heap_structure(const HeapTable& h) {
  return discrete_structure(h.order(), {{kHeapGraph, heap_graph(h)}});
}

inline bool is_heap_isomorphism(const HeapTable& h, const HeapTable& k, const Bijection& f) {
  if (h.order() != k.order() || !is_permutation_of_size(f, h.order())) return false;
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      for (int z = 0; z < h.order(); ++z)
        if (f[h(x, y, z)] != k(f[x], f[y], f[z])) return false;
  return true;
}

/// Heap isomorphism decided through the generic structure decider.
inline std::optional<Bijection> decide_heap_iso(const HeapTable& h, const HeapTable& k) {
  return decide_isometric_iso(heap_structure(h), heap_structure(k));
}

inline constexpr int kMaxSubheapOrder = 16;

/// Nonempty subsets closed under [ ], sorted by size then lexicographically.
inline std::vector<std::vector<int>> subheaps(const HeapTable& h) {
  const int n = h.order();
  if (n > kMaxSubheapOrder) throw InvalidInput("subheaps: order too large for subset enumeration");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u) members.push_back(x);
    bool closed = true;
    for (int x : members)
      for (int y : members)
        for (int z : members)
          if (closed && !(mask >> h(x, y, z) & 1u)) closed = false;
    if (closed) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// alpha = lambda_a o beta with a = alpha(e) and beta a group isomorphism
/// (H, [x,e,y]) -> (H', [x,e',y]).
struct HeapIsoDecomposition {
  int a = 0;
  Bijection beta;
};

inline HeapIsoDecomposition decompose_heap_iso(const HeapTable& h, const HeapTable& k, const Bijection& alpha, int e,
                                               int e_prime) {
  check_element(h, e);
  check_element(k, e_prime);
  if (!is_heap_isomorphism(h, k, alpha)) throw InvalidInput("decompose_heap_iso: map is not a heap isomorphism");
  const FiniteGroup source = group_from_heap(h, e);
  const FiniteGroup target = group_from_heap(k, e_prime);
  HeapIsoDecomposition out;
  out.a = alpha[e];
  const int a_inv = target.inverse(out.a);
  out.beta.resize(h.order());
  for (int x = 0; x < h.order(); ++x) out.beta[x] = target.mul(a_inv, alpha[x]);
  if (!is_group_isomorphism(source, target, out.beta))
    throw std::logic_error("decompose_heap_iso: beta is not a group isomorphism");
  for (int x = 0; x < h.order(); ++x)
    if (target.mul(out.a, out.beta[x]) != alpha[x]) throw std::logic_error("decompose_heap_iso: reassembly failed");
  return out;
}

}  // namespace metstruct
