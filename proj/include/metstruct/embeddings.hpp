#pragma once

#include <metstruct/structure.hpp>

namespace metstruct {

/// Finite truncation of a point of the Hilbert cube [0,1]^N.
struct CubePoint {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  friend bool operator==(const CubePoint&, const CubePoint&) = default;
};

/// Points given as cube points; relation tuples index into `points`.
struct EmbeddedStructure {
  std::vector<CubePoint> points;
  RelationMap relations;

  friend bool operator==(const EmbeddedStructure&, const EmbeddedStructure&) = default;
};

/// x_i -> (d(x_i, x_1), ..., d(x_i, x_k)), cycling through the points when k > |S|.
inline std::vector<CubePoint> kuratowski_embed(const MetricStructure& s, std::size_t k) {
  if (diameter(s) > 1) throw InvalidInput("kuratowski_embed: diameter exceeds 1, rescale first");
  if (k < s.size()) throw InvalidInput("kuratowski_embed: truncation shorter than the point count");
  std::vector<CubePoint> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i].coords.reserve(k);
    for (std::size_t n = 0; n < k; ++n) out[i].coords.push_back(s.metric(i, n % s.size()));
  }
  return out;
}

/// sum_n |a_n - b_n| / 2^n over n = 1..dim.
inline Rational cube_metric(const CubePoint& a, const CubePoint& b) {
  if (a.dim() != b.dim()) throw InvalidInput("cube_metric: dimension mismatch");
  Rational sum = 0;
  Rational weight(1, 2);
  for (std::size_t n = 0; n < a.dim(); ++n) {
    sum += abs_diff(a.coords[n], b.coords[n]) * weight;
    weight /= 2;
  }
  return sum;
}

/// Coordinatewise x -> x/2 + 1/4, squeezing the cube into [1/4, 3/4]^N.
inline CubePoint iota(const CubePoint& a) {
  CubePoint out;
  out.coords.reserve(a.dim());
  for (const auto& x : a.coords) out.coords.push_back(x / 2 + Rational(1, 4));
  return out;
}

inline EmbeddedStructure iota_structure(const EmbeddedStructure& s) {
  EmbeddedStructure out{{}, s.relations};
  out.points.reserve(s.points.size());
  for (const auto& p : s.points) out.points.push_back(iota(p));
  return out;
}

inline EmbeddedStructure embed_structure(const MetricStructure& s, std::size_t k) {
  return {kuratowski_embed(s, k), s.relations};
}

}  // namespace metstruct
