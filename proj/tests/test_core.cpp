#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace metstruct;
using namespace metstruct::testing;

namespace {

MetricStructure two_point(long long d = 1) { return from_upper(2, {q(d)}); }

MetricStructure three_point_123() { return from_upper(3, {q(1), q(2), q(3)}); }

}  // namespace

TEST(Rational, ParseAndFormatAreCanonical) {
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(parse_rational("-10/5")), "-2");
  EXPECT_EQ(format_rational(parse_rational("+7")), "7");
  EXPECT_EQ(format_rational(q(0)), "0");
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1"})
    EXPECT_THROW(parse_rational(bad), InvalidInput) << bad;
  EXPECT_THROW(make_rational(1, 0), InvalidInput);
}

TEST(Rational, ExtendedOrder) {
  EXPECT_TRUE(ExtRational{q(1)} <= ExtRational::infinity());
  EXPECT_FALSE(ExtRational::infinity() <= ExtRational{q(1000)});
  EXPECT_TRUE(ExtRational::infinity() <= ExtRational::infinity());
  EXPECT_EQ(format_ext(ExtRational::infinity()), "inf");
  EXPECT_EQ(format_ext({q(1, 3)}), "1/3");
}

TEST(Validate, SmallestValidInstance) {
  MetricStructure s = two_point();
  s.relations["R"] = Relation{1, {{0}}};
  EXPECT_TRUE(validate_structure(s).ok());
}

TEST(Validate, ZeroDistanceBetweenDistinctPoints) {
  const ValidationReport r = validate_structure(from_upper(2, {q(0)}));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.has("positivity"));
  EXPECT_EQ(r.violations.size(), 1u);
}

TEST(Validate, TriangleWitness) {
  const ValidationReport r = validate_structure(from_upper(3, {q(1), q(3), q(1)}));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, "triangle");
  EXPECT_EQ(r.violations[0].witness, (std::vector<int>{0, 1, 2}));
}

TEST(Validate, ReportsEveryProblem) {
  MetricStructure s = make_structure({{q(1), q(2)}, {q(3), q(0)}});
  s.relations["R"] = Relation{2, {{0}, {0, 5}}};
  s.relations["Z"] = Relation{0, {}};
  const ValidationReport r = validate_structure(s);
  EXPECT_TRUE(r.has("zero-diagonal"));
  EXPECT_TRUE(r.has("symmetry"));
  EXPECT_TRUE(r.has("tuple-length:R"));
  EXPECT_TRUE(r.has("tuple-index:R"));
  EXPECT_TRUE(r.has("arity:Z"));
  EXPECT_TRUE(validate_structure(from_upper(2, {q(-1)})).has("nonnegativity"));
  EXPECT_TRUE(validate_structure(MetricStructure{}).has("nonempty"));
  MetricStructure mismatched{{"a", "b"}, DistanceMatrix(3), {}};
  EXPECT_TRUE(validate_structure(mismatched).has("dimension"));
}

TEST(Validate, OkIffNoViolations) {
  for (const auto& m : all_metrics(3, {q(0), q(1), q(3)})) {
    MetricStructure s{default_point_names(3), m, {}};
    const ValidationReport r = validate_structure(s);
    EXPECT_EQ(r.ok(), r.violations.empty());
  }
}

TEST(ProductMetric, Examples) {
  const MetricStructure s = two_point();
  EXPECT_EQ(product_metric(s, std::vector{0, 0}, std::vector{0, 1}), q(1));
  EXPECT_EQ(product_metric(s, std::vector{0, 1}, std::vector{0, 1}), q(0));
  EXPECT_EQ(product_metric(three_point_123(), std::vector{0, 1}, std::vector{2, 2}), q(3));
  EXPECT_THROW(product_metric(s, std::vector{0}, std::vector{0, 1}), InvalidInput);
  EXPECT_THROW(product_metric(s, std::vector{2}, std::vector{0}), InvalidInput);
}

TEST(ProductMetric, IsAMetricOnTuples) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 6; ++round) {
    const MetricStructure s = random_structure(rng, {4, 4, {}, 0});
    for (int len = 1; len <= 3; ++len) {
      std::vector<Tuple> all;
      for_each_tuple(4, len, [&](const Tuple& t) {
        all.push_back(t);
        return true;
      });
      for (const auto& a : all)
        for (const auto& b : all) {
          const Rational ab = product_metric(s, a, b);
          ASSERT_EQ(ab, product_metric(s, b, a));
          ASSERT_EQ(ab == 0, a == b);
          if (len == 3) continue;  // triangle on length 3 is covered by the cheaper lengths below
          for (const auto& c : all) ASSERT_LE(product_metric(s, a, c), ab + product_metric(s, b, c));
        }
    }
  }
}

TEST(ProductMetric, TriangleOnTriples) {
  std::mt19937_64 rng(12);
  const MetricStructure s = random_structure(rng, {4, 5, {}, 0});
  std::vector<Tuple> all;
  for_each_tuple(4, 3, [&](const Tuple& t) {
    all.push_back(t);
    return true;
  });
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) ASSERT_LE(product_metric(s, a, c), product_metric(s, a, b) + product_metric(s, b, c));
}

TEST(CoveringRadius, Examples) {
  EXPECT_EQ(covering_radius(two_point(), std::vector{0, 1}), q(0));
  EXPECT_EQ(covering_radius(two_point(), std::vector{0}), q(1));
  EXPECT_EQ(covering_radius(three_point_123(), std::vector{0}), q(2));
  EXPECT_THROW(covering_radius(two_point(), std::vector<int>{}), InvalidInput);
}

TEST(CoveringRadius, ZeroExactlyForFullSubsets) {
  std::mt19937_64 rng(3);
  const MetricStructure s = random_structure(rng, {5, 3, {}, 0});
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < 5; ++i)
      if (mask >> i & 1u) subset.push_back(i);
    EXPECT_EQ(covering_radius(s, subset) == 0, mask == 31u);
  }
}

TEST(CoveringRadius, AntitoneUnderInclusion) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 10; ++round) {
    const MetricStructure s = random_structure(rng, {5, 6, {}, 0});
    for (unsigned a = 1; a < 32; ++a)
      for (unsigned b = a; b < 32; b = (b + 1) | a) {
        std::vector<int> sa, sb;
        for (int i = 0; i < 5; ++i) {
          if (a >> i & 1u) sa.push_back(i);
          if (b >> i & 1u) sb.push_back(i);
        }
        ASSERT_LE(covering_radius(s, sb), covering_radius(s, sa));
      }
  }
}

TEST(RelationCoveringRadius, Examples) {
  MetricStructure s = two_point();
  s.relations["R"] = Relation{2, {{0, 1}, {1, 0}}};
  s.relations["E"] = Relation{2, {}};
  EXPECT_EQ(relation_covering_radius(s, "R", {{0, 1}, {1, 0}}), ExtRational{q(0)});
  EXPECT_EQ(relation_covering_radius(s, "R", {{0, 1}}), ExtRational{q(1)});
  EXPECT_EQ(relation_covering_radius(s, "E", {}), ExtRational{q(0)});
  EXPECT_TRUE(relation_covering_radius(s, "R", {}).is_infinite());
  EXPECT_THROW(relation_covering_radius(s, "Q", {}), InvalidInput);
  EXPECT_THROW(relation_covering_radius(s, "R", {{0, 0}}), InvalidInput);
}

TEST(ScaleMetric, Examples) {
  EXPECT_EQ(scale_metric(two_point(), q(1)), two_point());
  EXPECT_EQ(scale_metric(two_point(), q(2)), two_point(2));
  EXPECT_EQ(scale_metric(two_point(3), q(1, 3)), two_point(1));
  EXPECT_THROW(scale_metric(two_point(), q(0)), InvalidInput);
  EXPECT_THROW(scale_metric(two_point(), q(-1)), InvalidInput);
}

TEST(ScaleMetric, RoundTripIsExact) {
  std::mt19937_64 rng(5);
  for (const Rational& lambda : {q(2), q(3, 7), q(5, 3), q(1, 1000)})
    for (int round = 0; round < 10; ++round) {
      const MetricStructure s = random_structure(rng, {4, 9, {{"R", 2}}, 0.4});
      const MetricStructure scaled = scale_metric(s, lambda);
      EXPECT_TRUE(validate_structure(scaled).ok());
      EXPECT_EQ(scale_metric(scaled, 1 / lambda), s);
    }
}

TEST(Constructors, ProduceValidStructures) {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 50; ++round) {
    RandomStructureOptions opt{static_cast<std::size_t>(1 + round % 7), 1 + round % 5, {{"U", 1}, {"B", 2}}, 0.5};
    const MetricStructure s = random_structure(rng, opt);
    EXPECT_TRUE(validate_structure(s).ok());
    EXPECT_TRUE(validate_structure(relabel(s, random_permutation(rng, s.size()))).ok());
  }
  EXPECT_TRUE(validate_structure(discrete_structure(5)).ok());
}

TEST(Relabel, TransportsPointsAndRelations) {
  MetricStructure s = three_point_123();
  s.relations["R"] = Relation{2, {{0, 1}}};
  const MetricStructure t = relabel(s, {2, 0, 1});
  EXPECT_EQ(t.points, (std::vector<std::string>{"x1", "x2", "x0"}));
  EXPECT_EQ(t.d(2, 0), q(1));
  EXPECT_EQ(t.relation("R").tuples, (std::set<Tuple>{{2, 0}}));
  EXPECT_TRUE(is_isometric_isomorphism(s, t, {2, 0, 1}));
  EXPECT_FALSE(is_isometric_isomorphism(s, t, {0, 1, 2}));
  EXPECT_THROW(relabel(s, {0, 0, 1}), InvalidInput);
}

TEST(ForEachTuple, LexicographicAndStoppable) {
  std::vector<Tuple> seen;
  for_each_tuple(2, 2, [&](const Tuple& t) {
    seen.push_back(t);
    return true;
  });
  EXPECT_EQ(seen, (std::vector<Tuple>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  int visits = 0;
  EXPECT_FALSE(for_each_tuple(3, 3, [&](const Tuple&) { return ++visits < 5; }));
  EXPECT_EQ(visits, 5);
}
