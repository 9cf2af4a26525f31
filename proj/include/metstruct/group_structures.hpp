#pragma once

#include <metstruct/groups.hpp>
#include <metstruct/isometry.hpp>

namespace metstruct {

/// Length function rho of a left-invariant metric: d(g, h) = rho(g^-1 h).
struct LeftInvariantMetric {
  std::vector<Rational> length;

  Rational distance(const FiniteGroup& g, int a, int b) const { return length[g.mul(g.inverse(a), b)]; }
  friend bool operator==(const LeftInvariantMetric&, const LeftInvariantMetric&) = default;
};

/// Generator -> positive weight; generators closed under inverses with symmetric weights.
struct WeightedGenerators {
  std::map<int, Rational> weights;
};

inline ValidationReport validate_length_function(const FiniteGroup& g, const LeftInvariantMetric& rho) {
  ValidationReport report;
  const int n = g.order();
  if (static_cast<int>(rho.length.size()) != n) {
    report.violations.push_back({"dimension", {n, static_cast<int>(rho.length.size())}});
    return report;
  }
  if (rho.length[g.identity()] != 0) report.violations.push_back({"identity-length", {g.identity()}});
  for (int a = 0; a < n; ++a) {
    if (a != g.identity() && rho.length[a] <= 0) report.violations.push_back({"positivity", {a}});
    if (rho.length[a] != rho.length[g.inverse(a)]) report.violations.push_back({"inverse-symmetry", {a}});
    for (int b = 0; b < n; ++b)
      if (rho.length[g.mul(a, b)] > rho.length[a] + rho.length[b])
        report.violations.push_back({"subadditivity", {a, b}});
  }
  return report;
}

/// The n^2 triples (a, b, ab).
inline Relation mult_graph(const FiniteGroup& g) {
  Relation r{3, {}};
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) r.tuples.insert({a, b, g.mul(a, b)});
  return r;
}

/// Least generator-weight of a word equal to each element (weighted Cayley graph distance from e).
inline LeftInvariantMetric weighted_word_metric(const FiniteGroup& g, const WeightedGenerators& gens) {
  std::vector<int> elements;
  for (const auto& [s, w] : gens.weights) {
    if (s < 0 || s >= g.order()) throw InvalidInput("generator index out of range");
    if (w <= 0) throw InvalidInput("generator weights must be positive");
    auto inv = gens.weights.find(g.inverse(s));
    if (inv == gens.weights.end()) throw InvalidInput("generator set is not closed under inverses");
    if (inv->second != w) throw InvalidInput("generator weights are not symmetric");
    elements.push_back(s);
  }

  // Dijkstra over right multiplication by generators.
  std::vector<std::optional<Rational>> best(g.order());
  std::vector<bool> done(g.order(), false);
  best[g.identity()] = Rational(0);
  for (int round = 0; round < g.order(); ++round) {
    int u = -1;
    for (int v = 0; v < g.order(); ++v)
      if (!done[v] && best[v] && (u < 0 || *best[v] < *best[u])) u = v;
    if (u < 0) break;
    done[u] = true;
    for (int s : elements) {
      const int v = g.mul(u, s);
      Rational candidate = *best[u] + gens.weights.at(s);
      if (!best[v] || candidate < *best[v]) best[v] = std::move(candidate);
    }
  }
  LeftInvariantMetric rho;
  for (int v = 0; v < g.order(); ++v) {
    if (!best[v]) throw InvalidInput("generators do not generate the group (element " + std::to_string(v) + ")");
    rho.length.push_back(*best[v]);
  }
  return rho;
}

/// Entry (a, b) is min over f of max{d(f, a), d(f^-1, b^-1)}.
inline DistanceMatrix roelcke_metric(const FiniteGroup& g, const LeftInvariantMetric& rho) {
  if (static_cast<int>(rho.length.size()) != g.order()) throw InvalidInput("length function has wrong size");
  const int n = g.order();
  DistanceMatrix m(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::optional<Rational> best;
      for (int f = 0; f < n; ++f) {
        const Rational& left = rho.length[g.mul(g.inverse(f), a)];
        const Rational& right = rho.length[g.mul(f, g.inverse(b))];  // d(f^-1, b^-1) = rho(f b^-1)
        const Rational& worse = left < right ? right : left;
        if (!best || worse < *best) best = worse;
      }
      m(a, b) = *best;
    }
  return m;
}

inline std::vector<std::string> element_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
  return names;
}

/// Group elements under the Roelcke metric with the multiplication graph as ternary relation "Mult".
inline MetricStructure roelcke_structure(const FiniteGroup& g, const LeftInvariantMetric& rho) {
  MetricStructure s{element_names(g.order()), roelcke_metric(g, rho), {{"Mult", mult_graph(g)}}};
  const ValidationReport report = validate_structure(s);
  if (!report.ok()) throw InvalidInput("Roelcke metric is not a metric: " + describe(report));
  return s;
}

inline const std::string kInfinityPredicate = "Infinity";

/// One-point compactification of a finite pointed metric space.
///
/// Appends a point "*" and replaces the metric by min{d(f,g), l(f) + l(g)} with
/// l(g) = 1 / (1 + d(g, base)) and d(*, g) = l(g). The unary relation "Infinity" holds
/// exactly at "*"; the relations of `space` (e.g. surviving multiplication triples) carry over.
inline MetricStructure alexandrov_structure(const MetricStructure& space, int base) {
  check_index(space, base);
  if (space.relations.count(kInfinityPredicate))
    throw InvalidInput("relation name '" + kInfinityPredicate + "' is reserved");
  const ValidationReport input = validate_structure(space);
  if (!input.ok()) throw InvalidInput("input is not a metric structure: " + describe(input));

  const std::size_t n = space.size();
  std::vector<Rational> ell(n);
  for (std::size_t g = 0; g < n; ++g) ell[g] = Rational(1) / (1 + space.metric(g, base));

  MetricStructure out;
  out.points = space.points;
  out.points.push_back("*");
  out.metric = DistanceMatrix(n + 1);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      const Rational via_infinity = ell[f] + ell[g];
      out.metric(f, g) = f == g ? Rational(0) : std::min(space.metric(f, g), via_infinity);
    }
    out.metric(f, n) = ell[f];
    out.metric(n, f) = ell[f];
  }
  out.relations = space.relations;
  out.relations[kInfinityPredicate] = Relation{1, {{static_cast<int>(n)}}};

  const ValidationReport report = validate_structure(out);
  if (!report.ok()) throw InvalidInput("compactified metric fails: " + describe(report));
  return out;
}

/// Discrete structure on G with graphs "Ra" = {(g, ga)}, "Rb" = {(g, gb)} and unary "A".
inline MetricStructure translation_structure(const FiniteGroup& g, int a, int b, const std::set<int>& subset) {
  if (!generates(g, {a, b})) throw InvalidInput("translation_structure: {a, b} does not generate the group");
  Relation ra{2, {}}, rb{2, {}}, unary{1, {}};
  for (int x = 0; x < g.order(); ++x) {
    ra.tuples.insert({x, g.mul(x, a)});
    rb.tuples.insert({x, g.mul(x, b)});
  }
  for (int x : subset) {
    if (x < 0 || x >= g.order()) throw InvalidInput("subset element out of range");
    unary.tuples.insert({x});
  }
  return {element_names(g.order()), discrete_metric(g.order()),
          {{"A", std::move(unary)}, {"Ra", std::move(ra)}, {"Rb", std::move(rb)}}};
}

inline std::set<int> translate(const FiniteGroup& g, int x, const std::set<int>& subset) {
  std::set<int> out;
  for (int s : subset) out.insert(g.mul(x, s));
  return out;
}

struct TranslationEquivalence {
  std::optional<int> element;              // least g with gA = B
  std::optional<Bijection> structure_iso;  // witness from the structure decider
};

/// Decides whether some left translation carries A onto B by deciding isomorphism of the
/// two translation structures. Any structure isomorphism commutes with right multiplication
/// by a and b, hence is the left translation by its value at the identity.
inline TranslationEquivalence decide_translation_equiv(const FiniteGroup& g, int a, int b, const std::set<int>& first,
                                                       const std::set<int>& second) {
  const MetricStructure s = translation_structure(g, a, b, first);
  const MetricStructure t = translation_structure(g, a, b, second);
  TranslationEquivalence result;
  result.structure_iso = decide_isometric_iso(s, t);
  if (!result.structure_iso) return result;
  const int g0 = (*result.structure_iso)[g.identity()];
  // all solutions form the coset g0 * Stab(A)
  int least = g0;
  for (int h = 0; h < g.order(); ++h)
    if (translate(g, h, first) == first) least = std::min(least, g.mul(g0, h));
  result.element = least;
  return result;
}

/// Oracle: least g with gA = B by trying every element.
inline std::optional<int> brute_force_translation(const FiniteGroup& g, const std::set<int>& first,
                                                  const std::set<int>& second) {
  for (int x = 0; x < g.order(); ++x)
    if (translate(g, x, first) == second) return x;
  return std::nullopt;
}

}  // namespace metstruct
