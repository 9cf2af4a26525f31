#pragma once

#include <metstruct/structure.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>

namespace metstruct {

/// Relational constraints on n-tuples: for each relation, a set of position tuples
/// (0-based positions into the n-tuple) whose induced sub-tuples must lie in the relation.
struct ZetaPattern {
  int n = 1;
  std::map<std::string, std::set<Tuple>> constraints;

  friend bool operator==(const ZetaPattern&, const ZetaPattern&) = default;
};

using MatrixSet = std::set<DistanceMatrix>;

/// Distance matrix and exact relation patterns of one ordering of the points.
struct SignatureEntry {
  DistanceMatrix matrix;
  std::map<std::string, std::vector<Tuple>> patterns;

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
  friend bool operator<(const SignatureEntry& a, const SignatureEntry& b) {
    if (!(a.matrix == b.matrix)) return a.matrix < b.matrix;
    return a.patterns < b.patterns;
  }
};

struct Signature {
  std::size_t n = 0;
  std::set<SignatureEntry> entries;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline constexpr std::size_t kMaxSignaturePoints = 9;

inline void check_pattern(const MetricStructure& s, const ZetaPattern& zeta) {
  if (zeta.n < 1) throw InvalidInput("pattern length must be positive");
  for (const auto& [name, positions] : zeta.constraints) {
    auto it = s.relations.find(name);
    if (it == s.relations.end()) throw InvalidInput("pattern names unknown relation '" + name + "'");
    for (const auto& t : positions) {
      if (static_cast<int>(t.size()) != it->second.arity)
        throw InvalidInput("pattern tuple length differs from arity of '" + name + "'");
      for (int p : t)
        if (p < 0 || p >= zeta.n) throw InvalidInput("pattern position out of range");
    }
  }
}

inline DistanceMatrix distance_matrix(const MetricStructure& s, std::span<const int> t) {
  for (int i : t) check_index(s, i);
  DistanceMatrix m(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) m(i, j) = s.d(t[i], t[j]);
  return m;
}

/// True iff every constrained sub-tuple of x lies in its relation.
inline bool satisfies_constraints(const MetricStructure& s,
                                  const std::map<std::string, std::set<Tuple>>& constraints,
                                  const Tuple& x) {
  Tuple sub;
  for (const auto& [name, positions] : constraints) {
    const Relation& rel = s.relations.at(name);
    for (const auto& pos : positions) {
      sub.resize(pos.size());
      for (std::size_t i = 0; i < pos.size(); ++i) sub[i] = x[pos[i]];
      if (!rel.contains(sub)) return false;
    }
  }
  return true;
}

/// Distance matrices of all n-tuples whose constrained sub-tuples lie in the named relations.
inline MatrixSet compute_C_zeta(const MetricStructure& s, const ZetaPattern& zeta) {
  check_pattern(s, zeta);
  MatrixSet out;
  for_each_tuple(static_cast<int>(s.size()), zeta.n, [&](const Tuple& x) {
    if (satisfies_constraints(s, zeta.constraints, x)) out.insert(distance_matrix(s, x));
    return true;
  });
  return out;
}

/// Entry for the ordering where position i holds point order[i].
inline SignatureEntry signature_entry(const MetricStructure& s, const Bijection& order) {
  const std::size_t n = s.size();
  Bijection position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<int>(i);
  SignatureEntry e{distance_matrix(s, order), {}};
  for (const auto& [name, rel] : s.relations) {
    std::vector<Tuple> pattern;
    pattern.reserve(rel.tuples.size());
    for (const auto& t : rel.tuples) pattern.push_back(metstruct::apply(position, t));
    std::sort(pattern.begin(), pattern.end());
    e.patterns.emplace(name, std::move(pattern));
  }
  return e;
}

inline Bijection identity_map(std::size_t n) {
  Bijection id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

/// The (distance matrix, relation pattern) pairs of all n! orderings of the points.
inline Signature full_signature(const MetricStructure& s) {
  if (s.size() > kMaxSignaturePoints)
    throw InvalidInput("full_signature: at most " + std::to_string(kMaxSignaturePoints) + " points");
  Signature sig{s.size(), {}};
  Bijection order = identity_map(s.size());
  do {
    sig.entries.insert(signature_entry(s, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return sig;
}

namespace detail {

/// Searches orderings of `target` in lexicographic order for one whose signature entry
/// equals the identity entry of `source`. Orderings are pruned position by position.
class OrderingSearch {
 public:
  OrderingSearch(const MetricStructure& source, const MetricStructure& target)
      : s_(source), t_(target), n_(static_cast<int>(source.size())) {
    compress_distances();
    index_relations();
    build_candidates();
  }

  std::optional<Bijection> run() {
    if (!feasible_) return std::nullopt;
    map_.assign(n_, -1);
    used_.assign(n_, false);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  struct IndexedRelation {
    int arity = 0;
    std::unordered_set<std::uint64_t> target_codes;
    // tuples of the source grouped by their largest point index
    std::vector<std::vector<Tuple>> by_last;
  };

  std::uint64_t encode(const Tuple& t) const {
    std::uint64_t code = 0;
    for (int v : t) code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
    return code;
  }

  void compress_distances() {
    std::vector<Rational> values;
    for (const auto& e : s_.metric.entries()) values.push_back(e);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    auto id_of = [&](const Rational& v) {
      auto it = std::lower_bound(values.begin(), values.end(), v);
      return (it != values.end() && *it == v) ? static_cast<int>(it - values.begin()) : -1;
    };
    ds_.resize(n_ * n_);
    dt_.resize(n_ * n_);
    for (int i = 0; i < n_ * n_; ++i) {
      ds_[i] = id_of(s_.metric.entries()[i]);
      dt_[i] = id_of(t_.metric.entries()[i]);
    }
  }

  void index_relations() {
    for (const auto& [name, rel] : s_.relations) {
      const Relation& other = t_.relations.at(name);
      if (rel.tuples.size() != other.tuples.size()) feasible_ = false;
      IndexedRelation ir;
      ir.arity = rel.arity;
      ir.by_last.resize(n_);
      for (const auto& t : other.tuples) ir.target_codes.insert(encode(t));
      for (const auto& t : rel.tuples) ir.by_last[*std::max_element(t.begin(), t.end())].push_back(t);
      rels_.push_back(std::move(ir));
    }
  }

  // Point invariants: sorted distance row plus per-position relation occurrence counts.
  std::vector<int> profile(const MetricStructure& m, const std::vector<int>& dist, int p) const {
    std::vector<int> prof(dist.begin() + p * n_, dist.begin() + (p + 1) * n_);
    std::sort(prof.begin(), prof.end());
    for (const auto& [name, rel] : m.relations) {
      std::vector<int> counts(rel.arity, 0);
      for (const auto& t : rel.tuples)
        for (int k = 0; k < rel.arity; ++k)
          if (t[k] == p) ++counts[k];
      prof.push_back(-1);
      prof.insert(prof.end(), counts.begin(), counts.end());
    }
    return prof;
  }

  void build_candidates() {
    candidates_.assign(n_, {});
    std::vector<std::vector<int>> target_profiles(n_);
    for (int q = 0; q < n_; ++q) target_profiles[q] = profile(t_, dt_, q);
    for (int p = 0; p < n_; ++p) {
      const auto prof = profile(s_, ds_, p);
      for (int q = 0; q < n_; ++q)
        if (target_profiles[q] == prof) candidates_[p].push_back(q);
      if (candidates_[p].empty()) feasible_ = false;
    }
  }

  bool consistent(int i) const {
    const int fi = map_[i];
    for (int j = 0; j < i; ++j)
      if (ds_[i * n_ + j] != dt_[fi * n_ + map_[j]]) return false;
    for (const auto& rel : rels_)
      for (const auto& t : rel.by_last[i]) {
        std::uint64_t code = 0;
        for (int v : t) code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(map_[v]);
        if (!rel.target_codes.count(code)) return false;
      }
    return true;
  }

  bool extend(int i) {
    if (i == n_) return true;
    for (int q : candidates_[i]) {
      if (used_[q]) continue;
      map_[i] = q;
      used_[q] = true;
      if (consistent(i) && extend(i + 1)) return true;
      used_[q] = false;
    }
    map_[i] = -1;
    return false;
  }

  const MetricStructure& s_;
  const MetricStructure& t_;
  int n_;
  bool feasible_ = true;
  std::vector<int> ds_, dt_;
  std::vector<IndexedRelation> rels_;
  std::vector<std::vector<int>> candidates_;
  Bijection map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Lexicographically least isometric isomorphism s -> t, if any.
///
/// A bijection f is an isometric isomorphism exactly when the ordering (f(0), ..., f(n-1))
/// of t carries the same signature entry as the identity ordering of s, so the search runs
/// over orderings of t looking for that entry. Relations are compared by size up front;
/// with equal sizes, a preserving bijection is automatically reflecting.
inline std::optional<Bijection> decide_isometric_iso(const MetricStructure& s, const MetricStructure& t) {
  require_same_signature(s, t);
  if (s.size() != t.size()) return std::nullopt;
  return detail::OrderingSearch(s, t).run();
}

/// Independent oracle: tries all |s|! bijections in lexicographic order.
inline std::optional<Bijection> brute_force_isometric_iso(const MetricStructure& s, const MetricStructure& t) {
  require_same_signature(s, t);
  if (s.size() != t.size()) return std::nullopt;
  Bijection f = identity_map(s.size());
  do {
    if (is_isometric_isomorphism(s, t, f)) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

}  // namespace metstruct
