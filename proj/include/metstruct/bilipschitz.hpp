#pragma once

#include <metstruct/isometry.hpp>

namespace metstruct {

/// Relational constraints plus density requirements on n-tuples.
///
/// `radii[k-1]` bounds the covering radius of the first k entries of the tuple.
/// `relation_radii[{R, k}]` bounds how far R may be from the constrained sub-tuples
/// that only use the first k positions (sup-metric); absent keys impose nothing.
struct LipZetaPattern {
  int n = 1;
  std::map<std::string, std::set<Tuple>> constraints;
  std::vector<Rational> radii;
  std::map<std::pair<std::string, int>, Rational> relation_radii;

  friend bool operator==(const LipZetaPattern&, const LipZetaPattern&) = default;
};

/// Optimal bi-Lipschitz constant; nullopt when no relation-preserving bijection exists.
struct Distortion {
  std::optional<Rational> value;

  bool is_none() const { return !value.has_value(); }
  friend bool operator==(const Distortion&, const Distortion&) = default;
};

inline std::string format_distortion(const Distortion& d) {
  return d.is_none() ? std::string("none") : format_rational(*d.value);
}

inline bool is_alpha_perturbation(const DistanceMatrix& a, const DistanceMatrix& b, const Rational& alpha) {
  if (a.size() != b.size()) throw InvalidInput("is_alpha_perturbation: dimension mismatch");
  if (alpha < 1) throw InvalidInput("is_alpha_perturbation: alpha must be at least 1");
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const Rational& x = a.entries()[i];
    const Rational& y = b.entries()[i];
    if (x > alpha * y || y > alpha * x) return false;
  }
  return true;
}

inline void check_pattern(const MetricStructure& s, const LipZetaPattern& zeta) {
  check_pattern(s, ZetaPattern{zeta.n, zeta.constraints});
  if (static_cast<int>(zeta.radii.size()) != zeta.n)
    throw InvalidInput("pattern needs one density radius per prefix length");
  for (const auto& r : zeta.radii)
    if (r < 0) throw InvalidInput("density radii must be nonnegative");
  for (const auto& [key, t] : zeta.relation_radii) {
    const auto& [name, k] = key;
    if (!s.relations.count(name)) throw InvalidInput("pattern names unknown relation '" + name + "'");
    if (k < 1 || k > zeta.n) throw InvalidInput("relation radius prefix length out of range");
    if (t < 0) throw InvalidInput("relation radii must be nonnegative");
  }
}

/// The pattern with every radius multiplied by c.
inline LipZetaPattern scale_pattern(LipZetaPattern zeta, const Rational& c) {
  for (auto& r : zeta.radii) r *= c;
  for (auto& [key, t] : zeta.relation_radii) t *= c;
  return zeta;
}

/// All n-tuples meeting the prefix-density, relation-membership and marked-tuple-density conditions.
inline std::set<Tuple> compute_D_zeta(const MetricStructure& s, const LipZetaPattern& zeta) {
  check_pattern(s, zeta);
  const int points = static_cast<int>(s.size());
  std::set<Tuple> out;
  for_each_tuple(points, zeta.n, [&](const Tuple& x) {
    for (int k = 1; k <= zeta.n; ++k) {
      std::span<const int> prefix(x.data(), k);
      if (covering_radius(s, prefix) > zeta.radii[k - 1]) return true;
    }
    if (!satisfies_constraints(s, zeta.constraints, x)) return true;
    for (const auto& [key, bound] : zeta.relation_radii) {
      const auto& [name, k] = key;
      std::set<Tuple> marked;
      auto it = zeta.constraints.find(name);
      if (it != zeta.constraints.end())
        for (const auto& pos : it->second)
          if (std::all_of(pos.begin(), pos.end(), [k = k](int p) { return p < k; })) marked.insert(metstruct::apply(x, pos));
      if (!(relation_covering_radius(s, name, marked) <= ExtRational{bound})) return true;
    }
    out.insert(x);
    return true;
  });
  return out;
}

/// Distance matrices of the tuples in D_zeta; the perturbation boxes around them stay implicit.
inline MatrixSet base_matrices(const MetricStructure& s, const LipZetaPattern& zeta) {
  MatrixSet out;
  for (const auto& x : compute_D_zeta(s, zeta)) out.insert(distance_matrix(s, x));
  return out;
}

/// For every pattern and every base matrix A of s, some base matrix of t under the
/// c-scaled pattern is a c-perturbation of A.
inline bool dominates(const MetricStructure& s, const MetricStructure& t, const Rational& c,
                      const std::vector<LipZetaPattern>& patterns) {
  require_same_signature(s, t);
  if (c < 1) throw InvalidInput("dominates: constant must be at least 1");
  for (const auto& zeta : patterns) {
    const MatrixSet source = base_matrices(s, zeta);
    if (source.empty()) continue;
    const MatrixSet target = base_matrices(t, scale_pattern(zeta, c));
    for (const auto& a : source) {
      const bool covered = std::any_of(target.begin(), target.end(),
                                       [&](const DistanceMatrix& b) { return is_alpha_perturbation(a, b, c); });
      if (!covered) return false;
    }
  }
  return true;
}

/// The pattern read off the identity enumeration of s: exact relations as constraints,
/// prefix covering radii, and the finite relation radii of each prefix.
inline LipZetaPattern canonical_pattern(const MetricStructure& s) {
  LipZetaPattern zeta;
  zeta.n = static_cast<int>(s.size());
  for (const auto& [name, rel] : s.relations) zeta.constraints[name] = rel.tuples;
  const Tuple order = identity_map(s.size());
  for (int k = 1; k <= zeta.n; ++k) {
    zeta.radii.push_back(covering_radius(s, std::span<const int>(order.data(), k)));
    for (const auto& [name, rel] : s.relations) {
      std::set<Tuple> marked;
      for (const auto& t : rel.tuples)
        if (std::all_of(t.begin(), t.end(), [k](int p) { return p < k; })) marked.insert(t);
      const ExtRational radius = relation_covering_radius(s, name, marked);
      if (!radius.is_infinite()) zeta.relation_radii[{name, k}] = *radius.value;
    }
  }
  return zeta;
}

/// max over pairs of max(d_t(fx,fy)/d_s(x,y), d_s(x,y)/d_t(fx,fy)); assumes f is a bijection.
inline Rational distortion_of(const MetricStructure& s, const MetricStructure& t, const Bijection& f) {
  Rational worst = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Rational& a = s.metric(i, j);
      const Rational& b = t.metric(f[i], f[j]);
      const Rational ratio = a < b ? b / a : a / b;
      if (ratio > worst) worst = ratio;
    }
  return worst;
}

inline bool maps_relations_onto(const MetricStructure& s, const MetricStructure& t, const Bijection& f) {
  for (const auto& [name, rel] : s.relations) {
    const Relation& other = t.relations.at(name);
    if (rel.tuples.size() != other.tuples.size()) return false;
    for (const auto& tup : rel.tuples)
      if (!other.contains(metstruct::apply(f, tup))) return false;
  }
  return true;
}

/// Exact minimum distortion over all bijections mapping each relation onto its counterpart.
inline Distortion optimal_distortion(const MetricStructure& s, const MetricStructure& t) {
  require_same_signature(s, t);
  if (s.size() != t.size()) return {};
  std::optional<Rational> best;
  Bijection f = identity_map(s.size());
  do {
    if (!maps_relations_onto(s, t, f)) continue;
    Rational d = distortion_of(s, t, f);
    if (!best || d < *best) best = std::move(d);
  } while (std::next_permutation(f.begin(), f.end()));
  return {best};
}

}  // namespace metstruct
