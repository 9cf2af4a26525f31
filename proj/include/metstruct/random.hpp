#pragma once

#include <metstruct/structure.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace metstruct {

struct RandomStructureOptions {
  std::size_t points = 4;
  int max_distance = 3;               // raw distances drawn from 1..max_distance
  std::map<std::string, int> relations;  // name -> arity
  double density = 0.3;               // probability that a tuple is in a relation
};

/// Shortest-path closure; turns any positive symmetric matrix into a metric.
inline void metric_closure(DistanceMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, k) + m(k, j) < m(i, j)) m(i, j) = m(i, k) + m(k, j);
}

/// Random valid structure: integer distances from 1..max_distance, closed under shortest paths.
template <class Rng>
MetricStructure random_structure(Rng& rng, const RandomStructureOptions& opt) {
  std::uniform_int_distribution<int> dist(1, std::max(1, opt.max_distance));
  std::bernoulli_distribution member(opt.density);
  const std::size_t n = opt.points;
  MetricStructure s{default_point_names(n), DistanceMatrix(n), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s.metric(i, j) = s.metric(j, i) = dist(rng);
  metric_closure(s.metric);
  for (const auto& [name, arity] : opt.relations) {
    Relation rel{arity, {}};
    for_each_tuple(static_cast<int>(n), arity, [&](const Tuple& t) {
      if (member(rng)) rel.tuples.insert(t);
      return true;
    });
    s.relations.emplace(name, std::move(rel));
  }
  return s;
}

template <class Rng>
Bijection random_permutation(Rng& rng, std::size_t n) {
  Bijection p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace metstruct
