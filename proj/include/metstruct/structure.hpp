#pragma once

#include <metstruct/rational.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace metstruct {

/// Index tuple into the point list of a structure.
using Tuple = std::vector<int>;

/// A point map i -> map[i].
using Bijection = std::vector<int>;

/// Square matrix of exact rationals, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const DistanceMatrix& a, const DistanceMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.entries_ < b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

struct Relation {
  int arity = 1;
  std::set<Tuple> tuples;

  bool contains(const Tuple& t) const { return tuples.count(t) != 0; }
  friend bool operator==(const Relation&, const Relation&) = default;
};

using RelationMap = std::map<std::string, Relation>;

/// Finite metric structure: named points, a metric and named finitary relations.
struct MetricStructure {
  std::vector<std::string> points;
  DistanceMatrix metric;
  RelationMap relations;

  std::size_t size() const { return points.size(); }
  const Rational& d(int i, int j) const { return metric(i, j); }
  const Relation& relation(const std::string& name) const {
    auto it = relations.find(name);
    if (it == relations.end()) throw InvalidInput("unknown relation '" + name + "'");
    return it->second;
  }

  friend bool operator==(const MetricStructure&, const MetricStructure&) = default;
};

struct Violation {
  std::string axiom;
  std::vector<int> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.axiom == axiom; });
  }
};

/// Relation name -> arity; two structures are comparable iff these agree.
inline std::map<std::string, int> signature_of(const MetricStructure& s) {
  std::map<std::string, int> sig;
  for (const auto& [name, rel] : s.relations) sig[name] = rel.arity;
  return sig;
}

inline void require_same_signature(const MetricStructure& a, const MetricStructure& b) {
  if (signature_of(a) != signature_of(b))
    throw SignatureMismatch("structures have different relation names or arities");
}

/// Reports every violated metric axiom and every malformed relation tuple.
inline ValidationReport validate_structure(const MetricStructure& s) {
  ValidationReport report;
  auto add = [&](std::string axiom, std::vector<int> w) {
    report.violations.push_back({std::move(axiom), std::move(w)});
  };
  const int n = static_cast<int>(s.size());
  if (s.metric.size() != s.size()) {
    add("dimension", {n, static_cast<int>(s.metric.size())});
    return report;
  }
  if (n == 0) add("nonempty", {});
  for (int i = 0; i < n; ++i) {
    if (s.d(i, i) != 0) add("zero-diagonal", {i});
    for (int j = i + 1; j < n; ++j) {
      if (s.d(i, j) != s.d(j, i)) add("symmetry", {i, j});
      if (s.d(i, j) < 0 || s.d(j, i) < 0)
        add("nonnegativity", {i, j});
      else if (s.d(i, j) == 0 || s.d(j, i) == 0)
        add("positivity", {i, j});
    }
  }
  // one report per unordered triangle
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int t[3] = {i, j, k};
        bool bad = false;
        for (int a = 0; a < 3 && !bad; ++a) {
          const int x = t[a], y = t[(a + 1) % 3], z = t[(a + 2) % 3];
          bad = s.d(x, z) > s.d(x, y) + s.d(y, z);
        }
        if (bad) add("triangle", {i, j, k});
      }
  for (const auto& [name, rel] : s.relations) {
    if (rel.arity <= 0) {
      add("arity:" + name, {rel.arity});
      continue;
    }
    for (const auto& t : rel.tuples) {
      if (static_cast<int>(t.size()) != rel.arity)
        add("tuple-length:" + name, t);
      else if (std::any_of(t.begin(), t.end(), [n](int v) { return v < 0 || v >= n; }))
        add("tuple-index:" + name, t);
    }
  }
  return report;
}

inline void check_index(const MetricStructure& s, int i) {
  if (i < 0 || i >= static_cast<int>(s.size()))
    throw InvalidInput("point index " + std::to_string(i) + " out of range");
}

/// Sup-metric on index tuples: max_i d(a_i, b_i).
inline Rational product_metric(const MetricStructure& s, std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InvalidInput("product_metric: tuple lengths differ");
  Rational best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_index(s, a[i]);
    check_index(s, b[i]);
    if (s.d(a[i], b[i]) > best) best = s.d(a[i], b[i]);
  }
  return best;
}

/// Least r such that every point lies within r of the subset.
inline Rational covering_radius(const MetricStructure& s, std::span<const int> subset) {
  if (subset.empty()) throw InvalidInput("covering_radius: empty subset");
  for (int i : subset) check_index(s, i);
  Rational radius = 0;
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    const Rational* nearest = &s.d(x, subset.front());
    for (int i : subset)
      if (s.d(x, i) < *nearest) nearest = &s.d(x, i);
    if (*nearest > radius) radius = *nearest;
  }
  return radius;
}

/// Least t such that every tuple of R lies within t (sup-metric) of a marked tuple.
/// Infinite when R is nonempty and nothing is marked.
inline ExtRational relation_covering_radius(const MetricStructure& s, const std::string& name,
                                            const std::set<Tuple>& marked) {
  const Relation& rel = s.relation(name);
  for (const auto& m : marked)
    if (!rel.contains(m)) throw InvalidInput("relation_covering_radius: marked tuple not in " + name);
  if (rel.tuples.empty()) return {Rational(0)};
  if (marked.empty()) return ExtRational::infinity();
  Rational radius = 0;
  for (const auto& t : rel.tuples) {
    std::optional<Rational> nearest;
    for (const auto& m : marked) {
      Rational d = product_metric(s, t, m);
      if (!nearest || d < *nearest) nearest = std::move(d);
    }
    if (*nearest > radius) radius = *nearest;
  }
  return {radius};
}

inline MetricStructure scale_metric(const MetricStructure& s, const Rational& lambda) {
  if (lambda <= 0) throw InvalidInput("scale_metric: factor must be positive");
  MetricStructure out = s;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) out.metric(i, j) = s.metric(i, j) * lambda;
  return out;
}

inline Rational diameter(const MetricStructure& s) {
  Rational best = 0;
  for (const auto& e : s.metric.entries())
    if (e > best) best = e;
  return best;
}

inline bool is_permutation_of_size(const Bijection& f, std::size_t n) {
  if (f.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : f) {
    if (v < 0 || v >= static_cast<int>(n) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline Tuple apply(const Bijection& f, const Tuple& t) {
  Tuple out(t.size());
  std::transform(t.begin(), t.end(), out.begin(), [&](int v) { return f[v]; });
  return out;
}

/// Transports a structure along f: point i of s becomes point f[i] of the result.
inline MetricStructure relabel(const MetricStructure& s, const Bijection& f) {
  if (!is_permutation_of_size(f, s.size())) throw InvalidInput("relabel: not a permutation");
  const std::size_t n = s.size();
  MetricStructure out;
  out.points.resize(n);
  out.metric = DistanceMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.points[f[i]] = s.points[i];
    for (std::size_t j = 0; j < n; ++j) out.metric(f[i], f[j]) = s.metric(i, j);
  }
  for (const auto& [name, rel] : s.relations) {
    Relation r{rel.arity, {}};
    for (const auto& t : rel.tuples) r.tuples.insert(metstruct::apply(f, t));
    out.relations.emplace(name, std::move(r));
  }
  return out;
}

inline std::vector<std::string> default_point_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i);
  return names;
}

/// All off-diagonal distances equal to 1.
inline DistanceMatrix discrete_metric(std::size_t n) {
  DistanceMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 0 : 1;
  return m;
}

inline MetricStructure discrete_structure(std::size_t n, RelationMap relations = {}) {
  return {default_point_names(n), discrete_metric(n), std::move(relations)};
}

/// Distance-preserving and relation-preserving-and-reflecting check for a candidate bijection.
inline bool is_isometric_isomorphism(const MetricStructure& s, const MetricStructure& t, const Bijection& f) {
  if (s.size() != t.size() || !is_permutation_of_size(f, s.size())) return false;
  if (signature_of(s) != signature_of(t)) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.metric(i, j) != t.metric(f[i], f[j])) return false;
  for (const auto& [name, rel] : s.relations) {
    std::set<Tuple> image;
    for (const auto& tup : rel.tuples) image.insert(metstruct::apply(f, tup));
    if (image != t.relations.at(name).tuples) return false;
  }
  return true;
}

/// Visits every tuple in {0..n-1}^k in lexicographic order; the visitor returns false to stop.
template <class Visitor>
bool for_each_tuple(int n, int k, Visitor&& visit) {
  Tuple t(k, 0);
  if (k > 0 && n <= 0) return true;
  while (true) {
    if (!visit(static_cast<const Tuple&>(t))) return false;
    int pos = k - 1;
    while (pos >= 0 && ++t[pos] == n) t[pos--] = 0;
    if (pos < 0) return true;
  }
}

}  // namespace metstruct
